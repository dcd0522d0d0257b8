#include "ybx/rmatrix.hpp"

namespace ybx {

BetaCoefficient beta_ratio(const Rat& zk, const Rat& zref) {
    Rat diff = (zk - zref) / 2;
    if (denominator(diff) != 1)
        throw std::invalid_argument("beta_ratio: roots in different parity classes");
    long t = static_cast<long>(numerator(diff));
    BetaCoefficient bc;
    bc.z_k = zk;
    bc.z_ref = zref;
    bc.num = {GR(1)};
    bc.den = {GR(1)};
    if (t >= 0) {
        for (long j = 0; j < t; ++j) {
            Rat c = (zref + 1 + 2 * j) / 2;
            bc.num = pmul(bc.num, Poly{GR(c), GR(Rat(-1, 2))});
            bc.den = pmul(bc.den, Poly{GR(c), GR(Rat(1, 2))});
        }
    } else {
        for (long j = 0; j < -t; ++j) {
            Rat c = (zk + 1 + 2 * j) / 2;
            bc.num = pmul(bc.num, Poly{GR(c), GR(Rat(1, 2))});
            bc.den = pmul(bc.den, Poly{GR(c), GR(Rat(-1, 2))});
        }
    }
    return bc;
}

RObject fundamental_R(int eps, int n) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("fundamental_R: eps must be +-1");
    if (eps == -1 && n % 2 != 0) throw std::invalid_argument("fundamental_R: symplectic needs even n");
    GR beta(Rat(n, 2) - eps);
    Poly u_plus_beta = padd(pu(), pconst(beta));
    PMat m(n * n, n * n);
    for (int a0 = 0; a0 < n; ++a0)
        for (int a1 = 0; a1 < n; ++a1) {
            int r = a0 * n + a1;
            m.add_at(r, r, pmul(pu(), u_plus_beta));
            m.add_at(r, a1 * n + a0, u_plus_beta);
        }
    if (eps == 1) {
        for (int a0 = 0; a0 < n; ++a0)
            for (int b0 = 0; b0 < n; ++b0)
                m.add_at(a0 * n + a0, b0 * n + b0, psmul(pu(), GR(-1)));
    } else {
        auto eu = [n](int a, int b) -> GR {
            if (a + b != n - 1) return GR(0);
            return GR((a + 1) % 2 == 0 ? 1 : -1); // (-1)^{a+1}, 0-based a
        };
        for (int a0 = 0; a0 < n; ++a0)
            for (int a1 = 0; a1 < n; ++a1) {
                GR val = eu(a0, a1);
                if (val.is_zero()) continue;
                for (int b0 = 0; b0 < n; ++b0)
                    for (int b1 = 0; b1 < n; ++b1) {
                        GR lw = -eu(b0, b1); // lower metric = -upper
                        if (lw.is_zero()) continue;
                        // -eps u K with eps=-1
                        m.add_at(a0 * n + a1, b0 * n + b1, psmul(pu(), val * lw));
                    }
            }
    }
    RObject obj;
    obj.symmetry = eps == 1 ? Symmetry::so : Symmetry::sp;
    obj.n = n;
    obj.rep_pair = RepPair::vector_vector;
    obj.matrix = m;
    return obj;
}

namespace {

// divide all entries by their monic polynomial GCD, then scale to integer
// Gaussian coefficients with unit content, leading entry sign-positive
void content_normalize(PMat& m) {
    Poly g;
    for (auto& [k, p] : m.d) {
        if (g.empty()) {
            g = p;
            GR lead = g.back();
            for (auto& c : g) c = c / lead;
        } else {
            g = pgcd(g, p);
        }
        if (pdeg(g) == 0) break;
    }
    if (pdeg(g) > 0)
        for (auto& [k, p] : m.d) p = pdivmod(p, g).first;
    Int den_l = 1;
    for (auto& [k, p] : m.d)
        for (auto& c : p)
            for (const Rat* f : {&c.re, &c.im}) den_l = lcm(den_l, denominator(*f));
    Int gc = 0;
    for (auto& [k, p] : m.d)
        for (auto& c : p)
            for (const Rat* f : {&c.re, &c.im}) {
                Rat scaled = *f * den_l;
                gc = gcd(gc, abs(numerator(scaled)));
            }
    if (gc == 0) gc = 1;
    GR s(Rat(den_l, gc));
    for (auto& [k, p] : m.d) p = psmul(p, s);
    for (auto& [k, p] : m.d) {
        if (p.empty()) continue;
        const GR& lc = p.back();
        if (lc.re < 0 || (lc.re == 0 && lc.im < 0))
            for (auto& [kk, pp] : m.d) pp = psmul(pp, GR(-1));
        break;
    }
}

} // namespace

std::vector<SpinorRPart> spinor_R(const CliffordRep& rep) {
    int d = rep.d, n = rep.spinor_dim();
    if (d < 3 || d > 8) throw std::invalid_argument("spinor_R: d must be in 3..8");
    SpMat z = build_z(rep);
    auto P = eigen_projectors(rep, z);
    auto roots = z_roots(d);
    PMat Pswap = PMat::from_const(swap_op(n));

    // parity classes: even d splits into even/odd integer roots; odd d is one class
    std::map<int, std::vector<Rat>> classes;
    for (const Rat& zk : roots) {
        int key = 0;
        if (d % 2 == 0) key = static_cast<int>(numerator(zk) % 2 != 0);
        classes[key].push_back(zk);
    }
    std::vector<SpinorRPart> out;
    for (auto& [cls, cl_roots] : classes) {
        Rat zref = cl_roots.front();
        for (const Rat& r : cl_roots) zref = std::max(zref, r);
        std::vector<BetaCoefficient> terms;
        for (const Rat& zk : cl_roots) terms.push_back(beta_ratio(zk, zref));
        PMat rhat(n * n, n * n);
        for (size_t i = 0; i < terms.size(); ++i) {
            Poly coeff = terms[i].num;
            for (size_t j = 0; j < terms.size(); ++j)
                if (j != i) coeff = pmul(coeff, terms[j].den);
            rhat = rhat + PMat::from_const(P.at(terms[i].z_k)).pscale(coeff);
        }
        content_normalize(rhat);
        SpinorRPart part;
        part.chirality = d % 2 ? Chirality::full : (cls ? Chirality::plus : Chirality::minus);
        part.roots = cl_roots;
        part.rhat = rhat;
        part.r = Pswap * rhat;
        out.push_back(std::move(part));
    }
    return out;
}

RObject spinor_R_object(const CliffordRep& rep, Chirality which, bool checked) {
    for (auto& part : spinor_R(rep)) {
        if (part.chirality != which) continue;
        RObject obj;
        obj.symmetry = Symmetry::so;
        obj.n = rep.d;
        obj.rep_pair = RepPair::spinor_spinor;
        obj.chirality = which;
        obj.checked = checked;
        obj.roots = part.roots;
        obj.matrix = checked ? part.rhat : part.r;
        return obj;
    }
    throw std::invalid_argument("spinor_R_object: no part with requested chirality");
}

namespace {

// r_{2m}/r_0 for the even-k coefficients of the expansion
Rat sw_ratio_even(int m, int n, const Rat& u) {
    Rat num = 1, den = 1;
    for (int j = 0; j < m; ++j) num *= (Rat(j) + u / 2) * 4;
    for (int j = 1; j <= m; ++j) den *= Rat(j) - (u + n) / 2;
    return num / den;
}

// r_{2m+1}/r_1 (corrected Gamma shift in the denominator)
Rat sw_ratio_odd(int m, int n, const Rat& u) {
    Rat num = 1, den = 1;
    for (int j = 0; j < m; ++j) num *= (Rat(2 * j + 1, 2) + u / 2) * 4;
    for (int j = 1; j <= m; ++j) den *= Rat(2 * j + 1, 2) - (u + n) / 2;
    return num / den;
}

} // namespace

SpMat sw_expansion(const CliffordRep& rep, int parity, const Rat& u) {
    int d = rep.d, n = rep.spinor_dim();
    SpMat out(n * n, n * n);
    for (int k = parity; k <= d; k += 2) {
        Rat ratio = (k % 2 == 0) ? sw_ratio_even(k / 2, d, u) : sw_ratio_odd((k - 1) / 2, d, u);
        Rat pw = 1;
        for (int j = 0; j < k; ++j) pw *= 2;
        out = out + gamma_subset_sum(rep, k).smul(GR(ratio / pw));
    }
    return out;
}

RelationReport verify_defining_relations(const CliffordRep& rep, const SpinorRPart& part) {
    int d = rep.d, n = rep.spinor_dim();
    RelationReport rr;
    SpMat id = SpMat::identity(n);
    std::vector<Rat> samples = {Rat(1, 3), Rat(2, 7)};

    rr.symmetry_pass = true;
    rr.v0_pass = true;
    for (const Rat& uu : samples) {
        GR u(uu);
        SpMat Rh = part.rhat.eval(u);
        for (int a = 0; a < d && rr.symmetry_pass; ++a)
            for (int b = 0; b < d; ++b) {
                SpMat x = kron(rep.gammas[a] * rep.gammas[b], id) +
                          kron(id, rep.gammas[a] * rep.gammas[b]);
                if (!(Rh * x == x * Rh)) {
                    rr.symmetry_pass = false;
                    rr.detail = "symmetry condition fails";
                    break;
                }
            }
        for (int a = 0; a < d && rr.v0_pass; ++a)
            for (int b = 0; b < d; ++b) {
                SpMat g1 = kron(gamma_ab(rep, a, b), id);
                SpMat g2 = kron(id, gamma_ab(rep, a, b));
                SpMat mix(n * n, n * n);
                for (int c = 0; c < d; ++c)
                    mix = mix + kron(gamma_ab(rep, a, c), gamma_ab(rep, c, b));
                SpMat xl = g2.smul(GR(Rat(-1, 2)) * u) + mix.smul(GR(Rat(1, 4)));
                SpMat xr = g1.smul(GR(Rat(-1, 2)) * u) + mix.smul(GR(Rat(1, 4)));
                if (!(Rh * xl == xr * Rh)) {
                    rr.v0_pass = false;
                    rr.detail = "v^0 relation fails";
                    break;
                }
            }
    }

    // spectral coefficient ladder: c_{z}/c_{z-2} = (z-1-u)/(z-1+u)
    rr.ladder_pass = true;
    SpMat z = build_z(rep);
    auto P = eigen_projectors(rep, z);
    for (const Rat& uu : samples) {
        GR u(uu);
        SpMat Rh = part.rhat.eval(u);
        std::map<Rat, GR> coeff;
        for (const Rat& zk : part.roots) {
            const SpMat& p = P.at(zk);
            SpMat rp = Rh * p;
            GR c;
            for (auto& [k, v] : p.d) {
                c = rp.at(k.first, k.second) / v;
                break;
            }
            if (!(rp == p.smul(c))) {
                rr.ladder_pass = false;
                rr.detail = "part is not scalar on an eigenspace";
            }
            coeff[zk] = c;
        }
        for (const Rat& zk : part.roots) {
            if (!coeff.count(zk - 2)) continue;
            GR lhs = coeff.at(zk) / coeff.at(zk - 2);
            GR rhs = GR(zk - 1 - uu) / GR(zk - 1 + uu);
            if (!(lhs == rhs)) {
                rr.ladder_pass = false;
                rr.detail = "spectral coefficient recursion fails";
            }
        }
    }
    return rr;
}

} // namespace ybx
