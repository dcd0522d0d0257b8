#include "ybx/clifford.hpp"

namespace ybx {

namespace {

SpMat pauli(int which) {
    SpMat m(2, 2);
    switch (which) {
        case 1: m.d[{0, 1}] = GR(1); m.d[{1, 0}] = GR(1); break;
        case 2: m.d[{0, 1}] = -gr_i(); m.d[{1, 0}] = gr_i(); break;
        case 3: m.d[{0, 0}] = GR(1); m.d[{1, 1}] = GR(-1); break;
        default: throw std::logic_error("pauli index");
    }
    return m;
}

SpMat chirality_raw(const std::vector<SpMat>& gams) {
    SpMat p = gams[0];
    for (size_t i = 1; i < gams.size(); ++i) p = p * gams[i];
    SpMat sq = p * p;
    SpMat id = SpMat::identity(p.rows);
    const GR phases[4] = {GR(1), gr_i(), GR(-1), -gr_i()};
    for (const GR& ph : phases) {
        if (sq.smul(ph * ph) == id) return p.smul(ph);
    }
    throw std::logic_error("no chirality phase found");
}

} // namespace

CliffordRep build_gammas(int d) {
    if (d < 2 || d > 12) throw std::invalid_argument("build_gammas: d out of range [2,12]");
    int m = d / 2;
    CliffordRep rep;
    rep.d = d;
    SpMat s1 = pauli(1), s2 = pauli(2), s3 = pauli(3), i2 = SpMat::identity(2);
    for (int k = 1; k <= m; ++k) {
        auto tensor = [&](const SpMat& mid) {
            SpMat r = SpMat::identity(1);
            for (int j = 0; j < k - 1; ++j) r = kron(r, s3);
            r = kron(r, mid);
            for (int j = 0; j < m - k; ++j) r = kron(r, i2);
            return r;
        };
        rep.gammas.push_back(tensor(s1));
        rep.gammas.push_back(tensor(s2));
    }
    if (d % 2 == 1) rep.gammas.push_back(chirality_raw(rep.gammas));
    else rep.chir = chirality_raw(rep.gammas);
    return rep;
}

SpMat chirality(const CliffordRep& rep) {
    if (rep.d % 2 != 0) throw std::invalid_argument("chirality: d must be even");
    return *rep.chir;
}

SpMat antisym_product(const CliffordRep& rep, const std::vector<int>& idx, bool* repeated) {
    int n = rep.spinor_dim();
    if (repeated) *repeated = false;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (idx[i] == idx[j] && repeated) *repeated = true;
    // sum over permutations with sign, divided by k!
    std::vector<int> perm(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) perm[i] = static_cast<int>(i);
    SpMat acc(n, n);
    Rat count = 0;
    std::sort(perm.begin(), perm.end());
    do {
        int sign = 1;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SpMat p = SpMat::identity(n);
        for (int pos : perm) p = p * rep.gammas[idx[pos]];
        acc = acc + p.smul(GR(sign));
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (count == 0) return SpMat::identity(n);
    return acc.smul(GR(Rat(1) / count));
}

SpMat gamma_ab(const CliffordRep& rep, int a, int b) {
    int n = rep.spinor_dim();
    if (a == b) return SpMat(n, n);
    SpMat h = rep.gammas[a] * rep.gammas[b] - rep.gammas[b] * rep.gammas[a];
    return h.smul(GR(Rat(1, 2)));
}

PMat L_operator(const CliffordRep& rep) {
    int d = rep.d, ns = rep.spinor_dim();
    PMat L(d * ns, d * ns);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            SpMat g = gamma_ab(rep, a, b);
            for (auto& [k, v] : g.d)
                L.add_at(a * ns + k.first, b * ns + k.second, pconst(v * GR(Rat(-1, 2))));
        }
    for (int i = 0; i < d * ns; ++i) L.add_at(i, i, pu());
    return L;
}

PMat L_operator_sv(const CliffordRep& rep) {
    int d = rep.d, ns = rep.spinor_dim();
    PMat L(ns * d, ns * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            SpMat g = gamma_ab(rep, a, b);
            for (auto& [k, v] : g.d)
                L.add_at(k.first * d + a, k.second * d + b, pconst(v * GR(Rat(-1, 2))));
        }
    for (int i = 0; i < ns * d; ++i) L.add_at(i, i, pu());
    return L;
}

GeneratorReport verify_generator_relations(const CliffordRep& rep, GenRelation which) {
    int d = rep.d, n = rep.spinor_dim();
    std::vector<std::vector<SpMat>> G(d, std::vector<SpMat>(d, SpMat(n, n)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) G[a][b] = gamma_ab(rep, a, b).smul(GR(Rat(-1, 2)));

    GeneratorReport rep_out;
    if (which == GenRelation::lie) {
        for (int a1 = 0; a1 < d; ++a1)
            for (int b1 = 0; b1 < d; ++b1)
                for (int a2 = 0; a2 < d; ++a2)
                    for (int b2 = 0; b2 < d; ++b2) {
                        SpMat lhs = G[a1][b1] * G[a2][b2] - G[a2][b2] * G[a1][b1];
                        SpMat rhs(n, n);
                        if (a1 == b2) rhs = rhs + G[a2][b1];
                        if (a2 == b1) rhs = rhs - G[a1][b2];
                        if (a1 == a2) rhs = rhs + G[b1][b2];
                        if (b1 == b2) rhs = rhs - G[a2][a1];
                        if (!(lhs == rhs)) {
                            rep_out.detail = "lie relation violated";
                            return rep_out;
                        }
                    }
        rep_out.pass = true;
        return rep_out;
    }
    if (which == GenRelation::symmetry) {
        // delta^{a1a2}(G^{b1b2} + G^{b2b1}) = (G^{a2a1} + G^{a1a2}) delta_{b1b2}
        for (int a1 = 0; a1 < d; ++a1)
            for (int a2 = 0; a2 < d; ++a2)
                for (int b1 = 0; b1 < d; ++b1)
                    for (int b2 = 0; b2 < d; ++b2) {
                        SpMat lhs(n, n), rhs(n, n);
                        if (a1 == a2) lhs = G[b1][b2] + G[b2][b1];
                        if (b1 == b2) rhs = G[a2][a1] + G[a1][a2];
                        if (!(lhs == rhs)) {
                            rep_out.detail = "symmetry condition violated";
                            return rep_out;
                        }
                    }
        rep_out.pass = true;
        return rep_out;
    }
    // constraint: solve for beta in
    // delta^{a1a2}(sum_c G^{c b1} G^{c b2} - beta G^{b1 b2})
    //   = (sum_c G^{a2 c} G^{a1 c} - beta G^{a2 a1}) delta_{b1 b2}
    std::optional<GR> beta;
    for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
            for (int b1 = 0; b1 < d; ++b1)
                for (int b2 = 0; b2 < d; ++b2) {
                    SpMat cst(n, n), lin(n, n);
                    if (a1 == a2) {
                        for (int c = 0; c < d; ++c) cst = cst + G[c][b1] * G[c][b2];
                        lin = lin - G[b1][b2];
                    }
                    if (b1 == b2) {
                        for (int c = 0; c < d; ++c) cst = cst - G[a2][c] * G[a1][c];
                        lin = lin + G[a2][a1];
                    }
                    // cst + beta*lin == 0
                    if (lin.is_zero()) {
                        if (!cst.is_zero()) {
                            rep_out.detail = "constraint inconsistent (no beta)";
                            return rep_out;
                        }
                        continue;
                    }
                    for (auto& [k, v] : lin.d) {
                        GR b = (-cst.at(k.first, k.second)) / v;
                        if (!beta) beta = b;
                        else if (!(*beta == b)) {
                            rep_out.detail = "constraint inconsistent (beta not unique)";
                            return rep_out;
                        }
                    }
                }
    if (!beta || beta->im != 0) {
        rep_out.detail = "no rational beta";
        return rep_out;
    }
    // verify
    GR b = *beta;
    for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
            for (int b1 = 0; b1 < d; ++b1)
                for (int b2 = 0; b2 < d; ++b2) {
                    SpMat lhs(n, n), rhs(n, n);
                    if (a1 == a2) {
                        for (int c = 0; c < d; ++c) lhs = lhs + G[c][b1] * G[c][b2];
                        lhs = lhs - G[b1][b2].smul(b);
                    }
                    if (b1 == b2) {
                        for (int c = 0; c < d; ++c) rhs = rhs + G[a2][c] * G[a1][c];
                        rhs = rhs - G[a2][a1].smul(b);
                    }
                    if (!(lhs == rhs)) {
                        rep_out.detail = "constraint fails at solved beta";
                        return rep_out;
                    }
                }
    rep_out.pass = true;
    rep_out.beta = beta->re;
    return rep_out;
}

} // namespace ybx
