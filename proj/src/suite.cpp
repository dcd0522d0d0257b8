#include "ybx/suite.hpp"
#include <array>
#include <filesystem>
#include <set>
#include <sstream>

namespace ybx {

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

SpMat poly_at_matrix(const Poly& p, const SpMat& z) {
    int n = z.rows;
    SpMat acc(n, n);
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * z;
        if (!p[i].is_zero()) acc = acc + SpMat::identity(n).smul(p[i]);
    }
    return acc;
}

Poly lin(const Rat& c0, const Rat& c1) {
    Poly p{GR(c0), GR(c1)};
    ptrim(p);
    return p;
}

// substitute u -> s*u
Poly scale_arg(const Poly& p, const Rat& s) {
    Poly r = p;
    Rat pw = 1;
    for (auto& c : r) {
        c *= GR(pw);
        pw *= s;
    }
    ptrim(r);
    return r;
}

PMat scale_arg(const PMat& m, const Rat& s) {
    PMat r(m.rows, m.cols);
    for (auto& [k, p] : m.d) r.d[k] = scale_arg(p, s);
    return r;
}

Poly canon_sign(Poly p) {
    if (p.empty()) return p;
    const GR& l = p.back();
    if (l.re < 0 || (l.re == 0 && l.im < 0)) return psmul(p, GR(-1));
    return p;
}

// scalar c with rhat * P == c * P; empty optional when not scalar
std::optional<Poly> spectral_coeff(const PMat& rhat, const SpMat& P) {
    PMat q = rhat * PMat::from_const(P);
    auto& [key, val] = *P.d.begin();
    Poly c = psmul(q.at(key.first, key.second), GR(1) / val);
    if (!(q == PMat::from_const(P).pscale(c))) return std::nullopt;
    return c;
}

bool try_match(const PMat& R, const PMat& T, int n) {
    if (R == T || R.smul(GR(-1)) == T) return true;
    if (paper_basis_match(R, T, n)) return true;
    return paper_basis_match(R.smul(GR(-1)), T, n).has_value();
}

// B == a*I + b*P on C^k (x) C^k with a, b linearly independent
bool is_slform(const PMat& B, int k) {
    if (B.rows != k * k || B.cols != k * k) return false;
    Poly a = B.at(0 * k + 1, 0 * k + 1);
    Poly b = B.at(0 * k + 1, 1 * k + 0);
    if (b.empty()) return false;
    PMat model = PMat::identity(k * k).pscale(a) + PMat::from_const(swap_op(k)).pscale(b);
    if (!(model == B)) return false;
    if (a.empty()) return false;
    return !(a.size() == b.size() && peq(psmul(a, b.back()), psmul(b, a.back())));
}

// B == (u + k/2) I - K with K a constant rank-one matrix whose partial
// transpose intertwines the swap through a one-leg factor g: the crossing
// image (second-leg transpose plus u -> -u - k/2) of the fundamental sl(k)
// form u I + P, acting on mixed fundamental/antifundamental index pairs
bool is_crossed_slform(const PMat& B, int k) {
    int n2 = k * k;
    if (B.rows != n2 || B.cols != n2) return false;
    Poly shift = padd(pu(), pconst(GR(Rat(k, 2))));
    SpMat K(n2, n2);
    PMat km = PMat::identity(n2).pscale(shift) + B.smul(GR(-1));
    for (auto& [key, p] : km.d) {
        if (pdeg(p) > 0) return false;
        if (!p.empty() && !p[0].is_zero()) K.d[key] = p[0];
    }
    if (rank_elim(K) != 1) return false;
    // one-leg factor: reshape a nonzero row of K (any scale works below)
    SpMat g(k, k);
    int r0 = K.d.begin()->first.first;
    for (int j = 0; j < n2; ++j) {
        GR v = K.at(r0, j);
        if (!v.is_zero()) g.d[{j / k, j % k}] = v;
    }
    if (rank_elim(g) != k) return false;
    // partial transpose of K on the second tensor slot
    SpMat Q(n2, n2);
    for (auto& [key, v] : K.d) {
        int a = key.first / k, b = key.first % k;
        int c = key.second / k, e = key.second % k;
        Q.d[{a * k + e, c * k + b}] = v;
    }
    SpMat ig = kron(SpMat::identity(k), g);
    return ig * swap_op(k) == Q * ig;
}

// membership of G in the linear span of the basis matrices
bool in_span(const std::vector<SpMat>& basis, const SpMat& G) {
    if (basis.empty()) return false;
    int len = G.rows * G.cols;
    SpMat stacked(static_cast<int>(basis.size()), len);
    int row = 0;
    for (const SpMat& b : basis) {
        for (auto& [k, v] : b.d) stacked.d[{row, k.first * G.cols + k.second}] = v;
        ++row;
    }
    int r0 = rank_elim(stacked);
    SpMat extended(static_cast<int>(basis.size()) + 1, len);
    extended.d = stacked.d;
    for (auto& [k, v] : G.d) extended.d[{row, k.first * G.cols + k.second}] = v;
    return rank_elim(extended) == r0;
}

// block of C on the index window [lo,hi); nullopt when C couples the window
// to its complement
std::optional<PMat> half_block(const PMat& C, int lo, int hi) {
    std::set<int> idx;
    for (auto& [k, p] : C.d) {
        bool r = k.first >= lo && k.first < hi;
        bool c = k.second >= lo && k.second < hi;
        if (r != c) return std::nullopt;
        if (r) {
            idx.insert(k.first);
            idx.insert(k.second);
        }
    }
    std::map<int, int> pos;
    int t = 0;
    for (int i : idx) pos[i] = t++;
    PMat B(t, t);
    for (auto& [k, p] : C.d)
        if (k.first >= lo && k.first < hi) B.d[{pos.at(k.first), pos.at(k.second)}] = p;
    return B;
}

bool has_dim(const SuiteConfig& cfg, int d) {
    return std::find(cfg.dims.begin(), cfg.dims.end(), d) != cfg.dims.end();
}

void note(std::ostringstream& os, bool& pass, bool ok, const std::string& what) {
    pass = pass && ok;
    if (!ok) os << (os.str().empty() ? "" : "; ") << "FAIL " << what;
}

// ---- criterion checks ----------------------------------------------------

CheckResult c1_clifford(const SuiteConfig&) {
    CheckResult r{1, "clifford-relations", true, ""};
    std::ostringstream os;
    for (int d = 2; d <= 8; ++d) {
        CliffordRep rep = build_gammas(d);
        int ns = rep.spinor_dim();
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                SpMat lhs = rep.gammas[a] * rep.gammas[b] + rep.gammas[b] * rep.gammas[a];
                SpMat rhs = SpMat::identity(ns).smul(GR(a == b ? 2 : 0));
                note(os, r.pass, lhs == rhs,
                     "anticommutator d=" + std::to_string(d) + " (" + std::to_string(a) +
                         "," + std::to_string(b) + ")");
            }
    }
    r.detail = os.str();
    return r;
}

CheckResult c2_spectrum(const SuiteConfig& cfg) {
    CheckResult r{2, "z-spectrum-multiplicities", true, ""};
    std::ostringstream os;
    for (int d : {4, 6, 8}) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        SpMat z = build_z(rep);
        auto projs = eigen_projectors(rep, z);
        int m = d / 2;
        for (auto& [root, P] : projs) {
            int k = static_cast<int>(numerator(root));
            note(os, r.pass, Int(rank_idempotent(P)) == binom(2 * m, m + k),
                 "rank P_" + rat_str(root) + " d=" + std::to_string(d));
        }
    }
    for (int d : {3, 5, 7}) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        SpMat z = build_z(rep);
        auto projs = eigen_projectors(rep, z);
        int dim = rep.spinor_dim() * rep.spinor_dim();
        int total = 0;
        for (auto& [root, P] : projs) {
            int rk = rank_idempotent(P);
            total += rk;
            // multiplicity from direct diagonalization: nullity of z - root
            SpMat shifted = z - SpMat::identity(dim).smul(GR(root));
            note(os, r.pass, rk == dim - rank_elim(shifted),
                 "eigenspace dim root " + rat_str(root) + " d=" + std::to_string(d));
        }
        note(os, r.pass, total == dim, "multiplicity sum d=" + std::to_string(d));
    }
    r.detail = os.str();
    return r;
}

CheckResult c3_charpoly(const SuiteConfig& cfg) {
    CheckResult r{3, "characteristic-polynomials", true, ""};
    std::ostringstream os;
    for (int d = 3; d <= 8; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        auto tower = invariant_tower(rep, d + 1);
        note(os, r.pass, tower[d + 1].is_zero(), "W annihilates z, d=" + std::to_string(d));
        if (d % 2 == 1) {
            SpMat z = build_z(rep);
            note(os, r.pass, poly_at_matrix(characteristic_poly(d), z).is_zero(),
                 "reduced W~ annihilates z, d=" + std::to_string(d));
        }
    }
    // I_5(z,4) = z(z^2-1)(z^2-4)
    Poly w4{GR(0), GR(4), GR(0), GR(Rat(-5)), GR(0), GR(1)};
    note(os, r.pass, peq(tower_poly(4, 5), w4), "I_5(z,4) coefficients");
    r.detail = os.str();
    return r;
}

// explicit tower polynomials I_2..I_7 as functions of d (two denominator
// corrections in I_7: 21/4 u^5-term and 315/8 u^3-term slopes)
Poly explicit_tower(int k, const Rat& d) {
    auto P = [](std::initializer_list<Rat> asc) {
        Poly p;
        for (const Rat& c : asc) p.push_back(GR(c));
        ptrim(p);
        return p;
    };
    switch (k) {
    case 2: return P({-d / 4, 0, 1});
    case 3: return P({0, Rat(1, 2) - d * Rat(3, 4), 0, 1});
    case 4: return P({d * d * Rat(3, 16) - d * Rat(3, 8), 0, 2 - d * Rat(3, 2), 0, 1});
    case 5:
        return P({0, Rat(3, 2) - d * Rat(25, 8) + d * d * Rat(15, 16), 0, 5 - d * Rat(5, 2),
                  0, 1});
    case 6:
        return P({-d * Rat(15, 8) + d * d * Rat(45, 32) - d * d * d * Rat(15, 64), 0,
                  Rat(23, 2) - d * Rat(105, 8) + d * d * Rat(45, 16), 0, 10 - d * Rat(15, 4),
                  0, 1});
    case 7:
        return P({0,
                  Rat(45, 4) - d * Rat(441, 16) + d * d * Rat(105, 8) - d * d * d * Rat(105, 64),
                  0, 49 - d * Rat(315, 8) + d * d * Rat(105, 16), 0,
                  Rat(35, 2) - d * Rat(21, 4), 0, 1});
    default: throw std::invalid_argument("explicit_tower: k out of range");
    }
}

CheckResult c4_tower(const SuiteConfig& cfg) {
    CheckResult r{4, "invariant-tower", true, ""};
    std::ostringstream os;
    for (int d = 3; d <= 6; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        auto tower = invariant_tower(rep, d + 1);
        for (int k = 0; k <= d + 1; ++k)
            note(os, r.pass, tower[k] == invariant_direct(rep, k),
                 "recurrence vs contraction k=" + std::to_string(k) + " d=" + std::to_string(d));
    }
    for (int d : {4, 6}) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        SpMat z = build_z(rep);
        for (int k = 2; k <= 7; ++k) {
            Poly e = explicit_tower(k, Rat(d));
            note(os, r.pass, peq(e, tower_poly(d, k)),
                 "explicit I_" + std::to_string(k) + " coefficients d=" + std::to_string(d));
            // as matrix identity against the recurrence matrix tower
            SpMat lhs = poly_at_matrix(e, z);
            SpMat rhs = poly_at_matrix(tower_poly(d, k), z);
            note(os, r.pass, lhs == rhs,
                 "matrix I_" + std::to_string(k) + " d=" + std::to_string(d));
        }
    }
    r.detail = os.str();
    return r;
}

CheckResult c5_permutation(const SuiteConfig& cfg) {
    CheckResult r{5, "permutation-operator", true, ""};
    std::ostringstream os;
    for (int d = 3; d <= 6; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        SpMat s = permutation_operator(rep, PermMethod::spectral);
        SpMat g = permutation_operator(rep, PermMethod::gamma_sum);
        note(os, r.pass, s == g, "spectral vs gamma-sum d=" + std::to_string(d));
        note(os, r.pass, s == swap_op(rep.spinor_dim()), "permutation is swap d=" + std::to_string(d));
    }
    for (int m : {1, 2, 3}) {
        int d = 2 * m;
        CliffordRep rep = build_gammas(d);
        SpMat p = permutation_operator(rep, PermMethod::spectral);
        int n2 = rep.spinor_dim() * rep.spinor_dim();
        SpMat plus = (SpMat::identity(n2) + p).smul(GR(Rat(1, 2)));
        SpMat minus = (SpMat::identity(n2) - p).smul(GR(Rat(1, 2)));
        long two_m = 1L << m, half = 1L << (m - 1);
        note(os, r.pass, rank_idempotent(plus) == (two_m + 1) * half,
             "rank sym m=" + std::to_string(m));
        note(os, r.pass, rank_idempotent(minus) == (two_m - 1) * half,
             "rank antisym m=" + std::to_string(m));
    }
    r.detail = os.str();
    return r;
}

CheckResult c6_tables(const SuiteConfig& cfg) {
    CheckResult r{6, "entry-tables", true, ""};
    std::ostringstream os;
    auto fx = [&](const std::string& name) {
        return load_fixture(cfg.fixture_dir + "/" + name + ".json");
    };
    {
        CliffordRep rep3 = build_gammas(3);
        auto parts = spinor_R(rep3);
        note(os, r.pass, try_match(parts[0].r, fx("ro3").table, 2), "ro3 vs so(3) part");
    }
    {
        CliffordRep rep4 = build_gammas(4);
        auto parts = spinor_R(rep4); // [0] even-root (minus), [1] odd-root (plus)
        note(os, r.pass, try_match(parts[0].r, fx("ro4").table, 4), "ro4 vs so(4) minus part");
        note(os, r.pass, try_match(parts[1].r, fx("r411").table, 4), "r411 vs so(4) plus part");
    }
    {
        CliffordRep rep5 = build_gammas(5);
        auto parts = spinor_R(rep5);
        note(os, r.pass, try_match(parts[0].r, fx("r44").table, 4), "r44 vs so(5) part");
    }
    {
        CliffordRep rep6 = build_gammas(6);
        SpMat z = build_z(rep6);
        auto projs = eigen_projectors(rep6, z);
        // first part: (u-1)(P_2+P_-2) - 6(u+1)P_0 (printed projector scaling)
        PMat m611 = PMat::from_const(projs.at(2) + projs.at(-2)).pscale(lin(-1, 1)) +
                    PMat::from_const(projs.at(0)).pscale(lin(-6, -6));
        note(os, r.pass, try_match(m611, fx("r611").table, 8), "r611 vs projector combination");
        // second part: (u+2)(P_1+P_-1) + (u-2)(P_3+P_-3) with the u+1 correction
        PMat m621 = PMat::from_const(projs.at(1) + projs.at(-1)).pscale(lin(2, 1)) +
                    PMat::from_const(projs.at(3) + projs.at(-3)).pscale(lin(-2, 1));
        Fixture f621 = fx("r621");
        note(os, r.pass, try_match(m621, f621.corrected, 8), "r621 (corrected) vs combination");
        // the printed table differs from the corrected one in exactly 8 entries
        int diffs = 0;
        for (auto& [k, p] : f621.table.d)
            if (!peq(p, f621.corrected.at(k.first, k.second))) ++diffs;
        note(os, r.pass, diffs == 8, "r621 typo localized to 8 entries");
        auto parts = spinor_R(rep6);
        note(os, r.pass, try_match(parts[1].r, f621.corrected, 8), "r621 vs so(6) plus part");
    }
    if (has_dim(cfg, 8)) {
        CliffordRep rep8 = build_gammas(8);
        auto parts = spinor_R(rep8);
        SpMat z = build_z(rep8);
        auto projs = eigen_projectors(rep8, z);
        for (auto& part : parts) {
            std::set<std::string> tensors;
            bool allok = true;
            for (const Rat& root : part.roots) {
                auto c = spectral_coeff(part.rhat, projs.at(root));
                if (!c) {
                    allok = false;
                    break;
                }
                tensors.insert(pstr(canon_sign(*c)));
            }
            bool plus = part.chirality == Chirality::plus;
            note(os, r.pass, allok && part.rhat.degree() == (plus ? 1 : 2),
                 std::string("so(8) ") + (plus ? "plus" : "minus") + " part degree");
            note(os, r.pass, tensors.size() == (plus ? 2u : 3u),
                 std::string("so(8) ") + (plus ? "plus" : "minus") + " tensor count");
        }
    }
    r.detail = os.str();
    return r;
}

CheckResult c7_yang_baxter(const SuiteConfig& cfg) {
    CheckResult r{7, "yang-baxter", true, ""};
    std::ostringstream os;
    for (int n = 3; n <= 6; ++n)
        note(os, r.pass, check_rrr(fundamental_R(1, n), n, cfg.grid_scale).pass,
             "RRR fundamental so(" + std::to_string(n) + ")");
    for (int n : {2, 4})
        note(os, r.pass, check_rrr(fundamental_R(-1, n), n, cfg.grid_scale).pass,
             "RRR fundamental sp(" + std::to_string(n) + ")");
    for (int d = 3; d <= 6; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        int ns = rep.spinor_dim();
        auto parts = spinor_R(rep);
        for (auto& part : parts) {
            RObject ro;
            ro.matrix = part.r;
            note(os, r.pass, check_rrr(ro, ns, cfg.grid_scale).pass,
                 "RRR spinorial so(" + std::to_string(d) + ")");
        }
        note(os, r.pass, check_rll(fundamental_R(1, d).matrix, rep, RllLayout::vector_aux,
                                   cfg.grid_scale)
                             .pass,
             "rll2 so(" + std::to_string(d) + ")");
        for (auto& part : parts)
            note(os, r.pass,
                 check_rll(part.rhat, rep, RllLayout::spinor_aux_check, cfg.grid_scale).pass,
                 "rll3c so(" + std::to_string(d) + ")");
    }
    { // chirality mixtures, d = 4
        CliffordRep rep4 = build_gammas(4);
        auto parts = spinor_R(rep4);
        for (int mask = 0; mask < 8; ++mask) {
            const PMat* f[3] = {&parts[(mask >> 0) & 1].r, &parts[(mask >> 1) & 1].r,
                                &parts[(mask >> 2) & 1].r};
            auto ev = [](const PMat* m) {
                return [m](const Rat& u) { return m->eval(GR(u)); };
            };
            note(os, r.pass,
                 check_rrr(ev(f[0]), ev(f[1]), ev(f[2]), 4, 1, cfg.grid_scale).pass,
                 "RRR so(4) mixture " + std::to_string(mask));
        }
    }
    if (has_dim(cfg, 8)) {
        CliffordRep rep8 = build_gammas(8);
        auto parts = spinor_R(rep8);
        for (auto& part : parts)
            note(os, r.pass,
                 check_rll(part.rhat, rep8, RllLayout::spinor_aux_check, cfg.grid_scale).pass,
                 "rll3c so(8)");
        if (cfg.include_so8_rrr)
            for (auto& part : parts) {
                RObject ro;
                ro.matrix = part.r;
                note(os, r.pass, check_rrr(ro, 16, cfg.grid_scale).pass, "RRR spinorial so(8)");
            }
    }
    r.detail = os.str();
    return r;
}

CheckResult c8_inversion_fusion(const SuiteConfig& cfg) {
    CheckResult r{8, "inversion-fusion", true, ""};
    std::ostringstream os;
    for (int d = 3; d <= 6; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        Rat beta_expected(d - 2, 2);
        if (d == 4) {
            note(os, r.pass, check_inversion(rep, Rat(1)).pass, "invL d=4 beta=1");
        } else {
            auto beta = solve_inversion_beta(rep);
            note(os, r.pass, beta && *beta == beta_expected,
                 "solved inversion beta d=" + std::to_string(d));
            if (beta)
                note(os, r.pass, check_inversion(rep, *beta).pass,
                     "invL d=" + std::to_string(d));
        }
        if (d <= 5)
            note(os, r.pass, check_llr_fusion(rep, beta_expected).pass,
                 "LLR d=" + std::to_string(d));
        if (d <= 4)
            for (int N = 1; N <= 2; ++N)
                note(os, r.pass, check_monodromy_fusion(rep, N, beta_expected).pass,
                     "t2t d=" + std::to_string(d) + " N=" + std::to_string(N));
    }
    {
        CliffordRep rep4 = build_gammas(4);
        for (int N = 1; N <= 2; ++N)
            note(os, r.pass, fusion_trace_identity(rep4, N).pass,
                 "ttt3 N=" + std::to_string(N));
        note(os, r.pass, !fusion_trace_identity(rep4, 1, true).pass,
             "ttt3 negative control (wrong shift)");
    }
    r.detail = os.str();
    return r;
}

CheckResult c9_propositions(const SuiteConfig& cfg) {
    CheckResult r{9, "propositions", true, ""};
    std::ostringstream os;
    { // P1: so(4)
        CliffordRep rep4 = build_gammas(4);
        auto parts = spinor_R(rep4);
        SpMat vv = kron(similarity_V4(), similarity_V4());
        PMat c = PMat::from_const(vv) * parts[0].r * PMat::from_const(vv);
        auto b1 = half_block(c, 0, 8), b2 = half_block(c, 8, 16);
        note(os, r.pass, b1 && is_slform(*b1, 2), "so(4) minus block I is sl(2)-form");
        note(os, r.pass, b2 && is_slform(*b2, 2), "so(4) minus block II is sl(2)-form");
        std::set<std::pair<int, int>> expect;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) expect.insert({i, j});
        note(os, r.pass, rtt_pattern(parts[1].r, 4) == expect,
             "so(4) plus part forces diagonal T");
    }
    { // P2: so(6)
        CliffordRep rep6 = build_gammas(6);
        auto parts = spinor_R(rep6);
        SpMat vv = kron(similarity_V6(), similarity_V6());
        for (size_t i = 0; i < parts.size(); ++i) {
            PMat c = PMat::from_const(vv) * parts[i].r * PMat::from_const(vv);
            auto b1 = half_block(c, 0, 32), b2 = half_block(c, 32, 64);
            // the minus part blocks sit on like-index pairs and equal the
            // sl(4) form directly; the plus part blocks sit on mixed
            // fundamental/antifundamental pairs and carry its crossing image
            bool direct = parts[i].chirality == Chirality::minus;
            auto ok = [&](const std::optional<PMat>& b) {
                return b && (direct ? is_slform(*b, 4) : is_crossed_slform(*b, 4));
            };
            std::string form = direct ? "sl(4)-form" : "crossed sl(4)-form";
            note(os, r.pass, ok(b1),
                 "so(6) part " + std::to_string(i) + " block I is " + form);
            note(os, r.pass, ok(b2),
                 "so(6) part " + std::to_string(i) + " block II is " + form);
        }
    }
    { // P3: so(5) spinorial vs fundamental sp(4) at 2u
        CliffordRep rep5 = build_gammas(5);
        auto parts = spinor_R(rep5);
        RObject sp4 = fundamental_R(-1, 4);
        note(os, r.pass, parts[0].r == scale_arg(sp4.matrix, Rat(2)),
             "so(5) part equals sp(4) R at 2u");
        std::vector<Rat> samples{0, 1, 2, 3, 4};
        auto basis = intertwiner_space(parts[0].r, sp4.matrix, Rat(2), Rat(0), samples,
                                       [](const Rat&) { return GR(1); });
        auto qualifies = [](const SpMat& g) {
            if (rank_elim(g) != 16) return false;
            auto kf = kron_factorize(g, 4);
            return kf && kf->symmetric;
        };
        bool found = false;
        for (const SpMat& g : basis)
            if (qualifies(g)) {
                found = true;
                break;
            }
        // the space is the full commutant, so reduced basis representatives
        // need not be invertible individually; fall back to a candidate
        // checked for membership in the span
        if (!found) {
            SpMat id = SpMat::identity(16);
            found = qualifies(id) && in_span(basis, id);
        }
        note(os, r.pass, found, "invertible Kronecker-factorizable intertwiner");
    }
    { // sp(2) fundamental vs so(3) spinorial scaling
        RObject sp2 = fundamental_R(-1, 2);
        PMat model = PMat::identity(4).pscale(Poly{GR(0), GR(1), GR(1)}) +
                     PMat::from_const(swap_op(2)).pscale(lin(2, 2));
        note(os, r.pass, sp2.matrix == model, "sp(2) R equals 2(u+1)[(u/2)I + P]");
    }
    r.detail = os.str();
    return r;
}

CheckResult c10_chain(const SuiteConfig& cfg) {
    CheckResult r{10, "chain-properties", true, ""};
    std::ostringstream os;
    for (int d : {3, 4}) {
        CliffordRep rep = build_gammas(d);
        for (int N = 1; N <= 3; ++N) {
            note(os, r.pass,
                 check_commuting_family(transfer(vector_monodromy(d, N)), cfg.grid_scale).pass,
                 "commuting vector aux d=" + std::to_string(d) + " N=" + std::to_string(N));
            note(os, r.pass,
                 check_commuting_family(transfer(spinor_monodromy_L(rep, N)), cfg.grid_scale)
                     .pass,
                 "commuting spinor aux d=" + std::to_string(d) + " N=" + std::to_string(N));
        }
    }
    // zero patterns of the spinorial monodromy
    auto class_pattern = [](const std::vector<std::vector<int>>& classes, int n) {
        std::set<std::pair<int, int>> zero;
        std::vector<int> cls(n, -1);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int i : classes[c]) cls[i] = static_cast<int>(c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (cls[i] != cls[j]) zero.insert({i, j});
        return zero;
    };
    auto block_pattern_ok = [](const Monodromy& m, const std::set<std::pair<int, int>>& zero,
                               int n) {
        long site = 1;
        for (int j = 0; j < m.N; ++j) site *= m.site_dim;
        std::set<std::pair<int, int>> seen;
        for (auto& [k, p] : m.matrix.d) seen.insert({static_cast<int>(k.first / site),
                                                     static_cast<int>(k.second / site)});
        for (auto& b : seen)
            if (zero.count(b)) return false; // out-of-pattern entry present
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!zero.count({i, j}) && !seen.count({i, j})) return false;
        return true;
    };
    {
        CliffordRep rep4 = build_gammas(4);
        auto parts = spinor_R(rep4);
        auto zero4 = class_pattern({{0, 3}, {1, 2}}, 4);
        note(os, r.pass, rtt_pattern(parts[0].r, 4) == zero4, "so(4) forced zeros match pattern");
        note(os, r.pass,
             block_pattern_ok(spinor_monodromy_R(rep4, Chirality::minus, 2), zero4, 4),
             "so(4) monodromy block pattern");
    }
    {
        CliffordRep rep6 = build_gammas(6);
        auto parts = spinor_R(rep6);
        auto zero6 = class_pattern({{0, 3, 5, 6}, {1, 2, 4, 7}}, 8);
        for (size_t i = 0; i < parts.size(); ++i)
            note(os, r.pass, rtt_pattern(parts[i].r, 8) == zero6,
                 "so(6) forced zeros part " + std::to_string(i));
        for (Chirality ch : {Chirality::minus, Chirality::plus})
            note(os, r.pass, block_pattern_ok(spinor_monodromy_R(rep6, ch, 2), zero6, 8),
                 "so(6) monodromy block pattern");
    }
    r.detail = os.str();
    return r;
}

CheckResult c11_cross_checks(const SuiteConfig& cfg) {
    CheckResult r{11, "cross-checks", true, ""};
    std::ostringstream os;
    for (int d : {4, 6}) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        auto parts = spinor_R(rep);
        for (int parity : {0, 1}) {
            int matched = -1;
            bool consistent = true;
            for (const Rat& u : {Rat(1, 3), Rat(5), Rat(2, 7)}) {
                SpMat s = sw_expansion(rep, parity, u);
                int here = -1;
                for (size_t i = 0; i < parts.size(); ++i) {
                    SpMat rh = parts[i].rhat.eval(GR(u));
                    if (s.d.size() != rh.d.size()) continue;
                    GR lam;
                    bool prop = true, first = true;
                    for (auto& [k, v] : rh.d) {
                        auto it = s.d.find(k);
                        if (it == s.d.end()) {
                            prop = false;
                            break;
                        }
                        GR t = it->second / v;
                        if (first) {
                            lam = t;
                            first = false;
                        } else if (!(t == lam)) {
                            prop = false;
                            break;
                        }
                    }
                    if (prop) {
                        here = static_cast<int>(i);
                        break;
                    }
                }
                if (here < 0) consistent = false;
                else if (matched < 0) matched = here;
                else if (matched != here) consistent = false;
            }
            note(os, r.pass, consistent && matched >= 0,
                 "series expansion parity " + std::to_string(parity) + " d=" + std::to_string(d));
        }
    }
    for (int d = 3; d <= 6; ++d) {
        if (!has_dim(cfg, d)) continue;
        CliffordRep rep = build_gammas(d);
        auto gen = verify_generator_relations(rep, GenRelation::constraint);
        auto beta = solve_inversion_beta(rep);
        note(os, r.pass, gen.pass && gen.beta && beta && *gen.beta == *beta,
             "constraint beta equals inversion beta d=" + std::to_string(d));
    }
    r.detail = os.str();
    return r;
}

} // namespace

std::vector<CheckResult> run_suite(const SuiteConfig& cfg) {
    using Fn = CheckResult (*)(const SuiteConfig&);
    const Fn checks[] = {c1_clifford, c2_spectrum,  c3_charpoly,        c4_tower,
                         c5_permutation, c6_tables, c7_yang_baxter,     c8_inversion_fusion,
                         c9_propositions, c10_chain, c11_cross_checks};
    std::vector<CheckResult> out;
    for (Fn f : checks) {
        CheckResult res;
        try {
            res = f(cfg);
        } catch (const std::exception& e) {
            res.criterion = static_cast<int>(out.size()) + 1;
            res.name = "criterion-" + std::to_string(res.criterion);
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        if (!cfg.output_dir.empty()) {
            std::filesystem::create_directories(cfg.output_dir);
            ordered_json j;
            j["criterion"] = res.criterion;
            j["name"] = res.name;
            j["pass"] = res.pass;
            j["detail"] = res.detail;
            write_json(cfg.output_dir + "/" + std::to_string(res.criterion) + "-" + res.name +
                           ".json",
                       j);
        }
        out.push_back(std::move(res));
    }
    return out;
}

ordered_json suite_json(const std::vector<CheckResult>& results) {
    ordered_json j;
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json e;
        e["criterion"] = r.criterion;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
        all = all && r.pass;
    }
    j["pass"] = all;
    j["results"] = arr;
    return j;
}

} // namespace ybx
