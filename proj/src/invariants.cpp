#include "ybx/invariants.hpp"

namespace ybx {

std::vector<Rat> z_roots(int d) {
    int m = d / 2;
    std::vector<Rat> r;
    if (d % 2 == 0) {
        for (int k = -m; k <= m; ++k) r.push_back(Rat(k));
    } else {
        for (int k = 0; k <= m; ++k) r.push_back(Rat((k % 2 ? -1 : 1) * (2 * k + 1), 2));
    }
    return r;
}

SpMat build_z(const CliffordRep& rep) {
    int n = rep.spinor_dim();
    SpMat z(n * n, n * n);
    for (const SpMat& g : rep.gammas) z = z + kron(g, g);
    return z.smul(GR(Rat(1, 2)));
}

SpMat gamma_subset_sum(const CliffordRep& rep, int k) {
    int d = rep.d, n = rep.spinor_dim();
    SpMat tot(n * n, n * n);
    if (k < 0 || k > d) return tot; // no k-subsets
    std::vector<int> sel(d, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    std::sort(sel.begin(), sel.end(), std::greater<int>());
    // enumerate k-subsets in lexicographic order via prev_permutation of mask
    do {
        SpMat g = SpMat::identity(n);
        for (int a = 0; a < d; ++a)
            if (sel[a]) g = g * rep.gammas[a];
        tot = tot + kron(g, g);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return tot;
}

Poly tower_poly(int d, int k) {
    Poly prev = {GR(1)};
    if (k == 0) return prev;
    Poly cur = pu();
    for (int m = 1; m < k; ++m) {
        Poly next = psub(pmul(pu(), cur), psmul(prev, GR(Rat(m * (d - m + 1), 4))));
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<SpMat> invariant_tower(const CliffordRep& rep, int k_max) {
    int d = rep.d;
    if (k_max > d + 1) throw std::invalid_argument("invariant_tower: k_max > d+1");
    SpMat z = build_z(rep);
    int n2 = z.rows;
    std::vector<SpMat> tower;
    tower.push_back(SpMat::identity(n2));
    if (k_max >= 1) tower.push_back(z);
    for (int m = 1; m < k_max; ++m) {
        SpMat next = z * tower[m] - tower[m - 1].smul(GR(Rat(m * (d - m + 1), 4)));
        tower.push_back(next);
    }
    return tower;
}

SpMat invariant_direct(const CliffordRep& rep, int k) {
    Rat fact = 1;
    for (int j = 2; j <= k; ++j) fact *= j;
    Rat pw = 1;
    for (int j = 0; j < k; ++j) pw *= 2;
    return gamma_subset_sum(rep, k).smul(GR(fact / pw));
}

Poly characteristic_poly(int d) {
    Poly w = {GR(1)};
    if (d % 2 == 0) {
        w = pu();
        for (int k = 1; k <= d / 2; ++k)
            w = pmul(w, padd(pmul(pu(), pu()), pconst(GR(Rat(-k * k)))));
    } else {
        for (const Rat& r : z_roots(d)) w = pmul(w, psub(pu(), pconst(GR(r))));
    }
    return w;
}

std::map<Rat, SpMat> eigen_projectors(const CliffordRep& rep, const SpMat& z) {
    auto roots = z_roots(rep.d);
    int n2 = z.rows;
    std::map<Rat, SpMat> P;
    for (const Rat& zk : roots) {
        SpMat p = SpMat::identity(n2);
        for (const Rat& zl : roots) {
            if (zl == zk) continue;
            p = (z - SpMat::identity(n2).smul(GR(zl))) * p;
            p = p.smul(GR(1) / GR(zk - zl));
        }
        P[zk] = p;
    }
    return P;
}

std::pair<SpMat, SpMat> chirality_projectors(const CliffordRep& rep) {
    if (rep.d % 2 != 0) throw std::invalid_argument("chirality_projectors: d must be even");
    SpMat chi = chirality(rep);
    SpMat gg = kron(chi, chi);
    int n2 = gg.rows;
    SpMat id = SpMat::identity(n2);
    SpMat half_plus = (id + gg).smul(GR(Rat(1, 2)));
    SpMat half_minus = (id - gg).smul(GR(Rat(1, 2)));
    // orient so that the 'plus' projector owns the odd-integer roots
    SpMat z = build_z(rep);
    auto P = eigen_projectors(rep, z);
    const SpMat& p1 = P.at(Rat(1));
    if (half_plus * p1 == p1) return {half_plus, half_minus};
    if (half_minus * p1 == p1) return {half_minus, half_plus};
    throw std::logic_error("chirality projectors do not split the z-eigenspaces");
}

SpMat permutation_operator(const CliffordRep& rep, PermMethod method) {
    int d = rep.d, m = d / 2;
    int n = rep.spinor_dim();
    if (method == PermMethod::spectral) {
        SpMat z = build_z(rep);
        auto P = eigen_projectors(rep, z);
        SpMat out(n * n, n * n);
        if (d % 2 == 0) {
            for (int k = -m; k <= m; ++k) {
                long e = (static_cast<long>(k) * (k - 1)) / 2;
                out = out + P.at(Rat(k)).smul(GR(e % 2 ? -1 : 1));
            }
        } else {
            for (int k = 0; k <= m; ++k) {
                long e = (static_cast<long>(k) * (k + 1)) / 2;
                Rat root((k % 2 ? -1 : 1) * (2 * k + 1), 2);
                out = out + P.at(root).smul(GR(e % 2 ? -1 : 1));
            }
        }
        return out;
    }
    // gamma-sum form: even d: (1/2^m) sum_{k=0..2m} s_k J_k;
    // odd d: (1/2^{m+1}) sum_{k=0..2m+1} s_k J_k; s_k = (-1)^{k(k-1)/2}
    int kmax = (d % 2 == 0) ? 2 * m : 2 * m + 1;
    Rat divisor = 1;
    for (int j = 0; j < ((d % 2 == 0) ? m : m + 1); ++j) divisor *= 2;
    SpMat out(n * n, n * n);
    for (int k = 0; k <= kmax; ++k) {
        long e = (static_cast<long>(k) * (k - 1)) / 2;
        Rat s = (e % 2 ? -1 : 1);
        out = out + gamma_subset_sum(rep, k).smul(GR(s / divisor));
    }
    return out;
}

SpinorPairSpace make_pair_space(const CliffordRep& rep) {
    SpinorPairSpace sp;
    sp.rep = rep;
    sp.z = build_z(rep);
    sp.roots = z_roots(rep.d);
    sp.projectors = eigen_projectors(rep, sp.z);
    if (rep.d % 2 == 0) {
        auto [pp, pm] = chirality_projectors(rep);
        sp.chirality_plus = pp;
        sp.chirality_minus = pm;
    }
    sp.permutation = permutation_operator(rep, PermMethod::spectral);
    return sp;
}

} // namespace ybx
