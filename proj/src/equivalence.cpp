#include "ybx/equivalence.hpp"
#include <algorithm>

namespace ybx {

std::vector<SpMat> intertwiner_space(const PMat& RA, const PMat& RB,
                                     const Rat& alpha, const Rat& gamma0,
                                     const std::vector<Rat>& samples,
                                     const std::function<GR(const Rat&)>& lambda) {
    if (RA.rows != RB.rows || RA.rows != RA.cols || RB.rows != RB.cols)
        throw std::invalid_argument("intertwiner_space: dimension mismatch");
    int n = RA.rows; // G is n x n, unknowns vec(G) row-major
    SpMat sys(static_cast<int>(samples.size()) * n * n, n * n);
    int off = 0;
    for (const Rat& u : samples) {
        SpMat B = RB.eval(GR(alpha * u + gamma0));
        SpMat A = RA.eval(GR(u));
        GR lam = lambda(u);
        // row (i,j) of B.G - lam G.A: sum_k B[i,k] G[k,j] - lam sum_k G[i,k] A[k,j]
        for (auto& [k, v] : B.d)
            for (int j = 0; j < n; ++j)
                sys.add_at(off + k.first * n + j, k.second * n + j, v);
        for (auto& [k, v] : A.d)
            for (int i = 0; i < n; ++i)
                sys.add_at(off + i * n + k.second, i * n + k.first, -(lam * v));
        off += n * n;
    }
    std::vector<SpMat> basis;
    for (auto& vec : nullspace(sys)) {
        SpMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!vec[i * n + j].is_zero()) g.d[{i, j}] = vec[i * n + j];
        basis.push_back(g);
    }
    return basis;
}

namespace {

// exact square root in Q(i) for the cases arising here: nonnegative/negative
// rational squares
std::optional<GR> gr_sqrt(const GR& c) {
    auto rat_sqrt = [](const Rat& r) -> std::optional<Rat> {
        if (r < 0) return std::nullopt;
        Int num = sqrt(numerator(r)), den = sqrt(denominator(r));
        if (num * num == numerator(r) && den * den == denominator(r)) return Rat(num, den);
        return std::nullopt;
    };
    if (c.im == 0) {
        if (auto s = rat_sqrt(c.re)) return GR(*s);
        if (auto s = rat_sqrt(-c.re)) return GR(Rat(0), *s);
    }
    return std::nullopt;
}

} // namespace

std::optional<KronFactor> kron_factorize(const SpMat& G, int n) {
    if (G.rows != n * n || G.cols != n * n) throw std::invalid_argument("kron_factorize: size");
    // reshuffle: Rsh[(i1,j1),(i2,j2)] = G[(i1,i2),(j1,j2)]
    SpMat rsh(n * n, n * n);
    for (auto& [k, v] : G.d) {
        int i1 = k.first / n, i2 = k.first % n;
        int j1 = k.second / n, j2 = k.second % n;
        rsh.d[{i1 * n + j1, i2 * n + j2}] = v;
    }
    if (rsh.is_zero()) return std::nullopt;
    auto [r0c0, pivot] = *rsh.d.begin();
    SpMat g(n, n), h(n, n);
    for (auto& [k, v] : rsh.d) {
        if (k.second == r0c0.second) g.d[{k.first / n, k.first % n}] = v;
        if (k.first == r0c0.first) h.d[{k.second / n, k.second % n}] = v / pivot;
    }
    if (!(kron(g, h) == G)) return std::nullopt;
    KronFactor f;
    f.g = g;
    f.h = h;
    // symmetric split when h is proportional to g with a square scalar
    GR c = h.d.begin()->second / g.at(h.d.begin()->first.first, h.d.begin()->first.second);
    if (!c.is_zero() && h == g.smul(c)) {
        if (auto s = gr_sqrt(c)) {
            f.symmetric = true;
            f.g = g.smul(*s);
            f.h = f.g;
        }
    }
    return f;
}

SpMat similarity_V4() {
    SpMat v(4, 4);
    for (auto [i, j] : {std::pair{1, 1}, {2, 4}, {3, 3}, {4, 2}}) v.d[{i - 1, j - 1}] = GR(1);
    return v;
}

SpMat similarity_V6() {
    SpMat v(8, 8);
    for (auto [i, j] :
         {std::pair{1, 1}, {2, 7}, {3, 6}, {4, 4}, {5, 5}, {6, 3}, {7, 2}, {8, 8}})
        v.d[{i - 1, j - 1}] = GR(1);
    return v;
}

BlockDecomposition block_decompose(const PMat& R, const std::optional<SpMat>& V) {
    BlockDecomposition bd;
    int n2 = R.rows;
    PMat C = R;
    if (V) {
        bd.V = *V;
        PMat VV = PMat::from_const(kron(*V, *V));
        C = VV * R * VV;
    } else {
        int n = 0;
        while (n * n < n2) ++n;
        bd.V = SpMat::identity(n);
    }
    // union-find over indices occurring in the support
    std::vector<int> parent(n2);
    for (int i = 0; i < n2; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [k, p] : C.d) parent[find(k.first)] = find(k.second);
    std::map<int, std::vector<int>> comps;
    for (auto& [k, p] : C.d) {
        comps[find(k.first)]; // ensure roots exist
    }
    for (int i = 0; i < n2; ++i) {
        bool used = false;
        for (auto& [k, p] : C.d)
            if (k.first == i || k.second == i) {
                used = true;
                break;
            }
        if (used) comps[find(i)].push_back(i);
    }
    // with an explicit similarity the blocks follow its presentation: the
    // conjugated matrix is block-diagonal on the two index half-windows, so
    // components are merged per half; automatic mode keeps the finest
    // (connected-component) decomposition
    std::map<int, std::vector<int>> merged;
    if (V) {
        for (auto& [root, idx] : comps) {
            std::vector<int>& dst = merged[idx.front() < n2 / 2 ? 0 : 1];
            dst.insert(dst.end(), idx.begin(), idx.end());
        }
        for (auto& [w, idx] : merged) std::sort(idx.begin(), idx.end());
    } else {
        merged = std::move(comps);
    }
    for (auto& [root, idx] : merged) {
        std::map<int, int> pos;
        for (size_t t = 0; t < idx.size(); ++t) pos[idx[t]] = static_cast<int>(t);
        PMat b(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (auto& [k, p] : C.d)
            if (pos.count(k.first)) b.d[{pos[k.first], pos[k.second]}] = p;
        bd.blocks.push_back({idx, b});
    }
    return bd;
}

namespace {

bool conjugate_matches(const PMat& R, const PMat& table, int n,
                       const std::vector<int>& perm, const std::vector<GR>& phase) {
    // s = sum_j phase[j] E_{perm[j], j}; (s x s) R (s x s)^{-1} entry check:
    // table[(perm i1, perm i2),(perm j1, perm j2)]
    //   = phase[i1] phase[i2] / (phase[j1] phase[j2]) * R[(i1,i2),(j1,j2)]
    size_t count = 0;
    for (auto& [k, p] : R.d) {
        int i1 = k.first / n, i2 = k.first % n;
        int j1 = k.second / n, j2 = k.second % n;
        GR f = (phase[i1] * phase[i2]) / (phase[j1] * phase[j2]);
        Poly want = table.at(perm[i1] * n + perm[i2], perm[j1] * n + perm[j2]);
        if (!peq(psmul(p, f), want)) return false;
        ++count;
    }
    return count == table.d.size();
}

} // namespace

std::optional<BasisMatch> paper_basis_match(const PMat& R, const PMat& table, int n) {
    if (R.rows != table.rows || R.cols != table.cols)
        return std::nullopt;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::vector<GR> ones(n, GR(1));
    if (conjugate_matches(R, table, n, id, ones)) {
        BasisMatch bm;
        bm.perm = id;
        bm.phase = ones;
        return bm;
    }
    // diagonal multiset prune: conjugation permutes diagonal entries without
    // phase factors, so the diagonal polynomial multisets must agree
    auto diag_key = [n](const PMat& m, int i1, int i2) { return m.at(i1 * n + i2, i1 * n + i2); };
    std::vector<int> perm = id;
    const GR phases[4] = {GR(1), GR(-1), gr_i(), -gr_i()};
    do {
        bool ok = true;
        for (int i1 = 0; i1 < n && ok; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                if (!peq(diag_key(R, i1, i2), diag_key(table, perm[i1], perm[i2]))) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        // phase search with the global phase fixed on index 0
        std::vector<GR> phase(n, GR(1));
        std::function<bool(int)> assign = [&](int pos) -> bool {
            if (pos == n) return conjugate_matches(R, table, n, perm, phase);
            for (const GR& ph : phases) {
                phase[pos] = ph;
                // partial prune: entries among indices 0..pos must already match
                bool fine = true;
                for (auto& [k, p] : R.d) {
                    int i1 = k.first / n, i2 = k.first % n;
                    int j1 = k.second / n, j2 = k.second % n;
                    if (std::max({i1, i2, j1, j2}) != pos) continue;
                    GR f = (phase[i1] * phase[i2]) / (phase[j1] * phase[j2]);
                    if (!peq(psmul(p, f),
                             table.at(perm[i1] * n + perm[i2], perm[j1] * n + perm[j2]))) {
                        fine = false;
                        break;
                    }
                }
                if (fine && assign(pos + 1)) return true;
            }
            return false;
        };
        if (assign(1)) {
            BasisMatch bm;
            bm.perm = perm;
            bm.phase = phase;
            return bm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::set<std::pair<int, int>> rtt_pattern(const PMat& R, int n) {
    if (n > 8) throw std::invalid_argument("rtt_pattern: factor dimension too large");
    std::set<std::pair<int, int>> supp;
    for (auto& [k, p] : R.d) supp.insert(k);
    auto idx = [n](int r) { return std::pair{r / n, r % n}; };
    std::set<std::pair<int, int>> zeros;

    // fixpoint rules: a single surviving product on one side with an empty
    // other side forces its non-diagonal-partner factor (or a square) to zero
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int e = 0; e < n; ++e)
                    for (int f = 0; f < n; ++f) {
                        std::vector<std::pair<int, int>> lhs, rhs;
                        for (auto& [rr, cc] : supp) {
                            auto [aa, bb] = idx(rr);
                            auto [c, dd] = idx(cc);
                            if (aa == a && bb == b && !zeros.count({c, e}) &&
                                !zeros.count({dd, f}))
                                lhs.push_back({c, dd}); // term T^c_e T^d_f
                            auto [c2, d2] = idx(rr);
                            auto [e2, f2] = idx(cc);
                            if (e2 == e && f2 == f && !zeros.count({b, d2}) &&
                                !zeros.count({a, c2}))
                                rhs.push_back({c2, d2}); // term T^b_{d2} T^a_{c2}
                        }
                        auto force = [&](std::pair<int, int> t) {
                            if (!zeros.count(t)) {
                                zeros.insert(t);
                                changed = true;
                            }
                        };
                        if (lhs.size() == 1 && rhs.empty()) {
                            auto [c, dd] = lhs[0]; // T^c_e T^d_f = 0
                            if (c == e) force({dd, f});
                            else if (dd == f) force({c, e});
                            else if (std::pair{c, e} == std::pair{dd, f}) force({c, e});
                        }
                        if (lhs.empty() && rhs.size() == 1) {
                            auto [c2, d2] = rhs[0]; // T^b_{d2} T^a_{c2} = 0
                            if (b == d2) force({a, c2});
                            else if (a == c2) force({b, d2});
                            else if (std::pair{b, d2} == std::pair{a, c2}) force({b, d2});
                        }
                    }
    }

    // nondegeneracy closure: an off-diagonal survivor whose every remaining
    // equation is vacuous or a pure commutation relation carries no
    // constraint and is discarded
    changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<int, int>> genuine;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int e = 0; e < n; ++e)
                    for (int f = 0; f < n; ++f) {
                        using Term = std::pair<std::pair<int, int>, std::pair<int, int>>;
                        std::vector<Term> L, Rt;
                        for (auto& [rr, cc] : supp) {
                            auto [aa, bb] = idx(rr);
                            auto [c, dd] = idx(cc);
                            if (aa == a && bb == b && !zeros.count({c, e}) &&
                                !zeros.count({dd, f}))
                                L.push_back({{c, e}, {dd, f}});
                            auto [c2, d2] = idx(rr);
                            auto [e2, f2] = idx(cc);
                            if (e2 == e && f2 == f && !zeros.count({b, d2}) &&
                                !zeros.count({a, c2}))
                                Rt.push_back({{b, d2}, {a, c2}});
                        }
                        if (L.empty() && Rt.empty()) continue;
                        if (L.size() == 1 && Rt.size() == 1 &&
                            L[0] == Term{Rt[0].second, Rt[0].first})
                            continue; // pure commutation
                        if (L.size() + Rt.size() >= 2) {
                            for (auto& t : L) {
                                genuine.insert(t.first);
                                genuine.insert(t.second);
                            }
                            for (auto& t : Rt) {
                                genuine.insert(t.first);
                                genuine.insert(t.second);
                            }
                        }
                    }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !zeros.count({i, j}) && !genuine.count({i, j})) {
                    zeros.insert({i, j});
                    changed = true;
                }
    }
    return zeros;
}

} // namespace ybx
