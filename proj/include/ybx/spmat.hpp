#pragma once
// Sparse matrices with constant GR entries plus the exact linear-algebra
// kernels (kron, partial trace, rank, nullspace) used everywhere else.
#include "ybx/scalars.hpp"
#include <map>
#include <utility>
#include <vector>

namespace ybx {

struct SpMat {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, GR> d;

    SpMat() = default;
    SpMat(int r, int c) : rows(r), cols(c) {}

    static SpMat identity(int n) {
        SpMat m(n, n);
        for (int i = 0; i < n; ++i) m.d[{i, i}] = GR(1);
        return m;
    }

    void set(int i, int j, const GR& v) {
        if (v.is_zero()) d.erase({i, j});
        else d[{i, j}] = v;
    }
    void add_at(int i, int j, const GR& v) {
        auto it = d.find({i, j});
        if (it == d.end()) {
            if (!v.is_zero()) d[{i, j}] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) d.erase(it);
        }
    }
    GR at(int i, int j) const {
        auto it = d.find({i, j});
        return it == d.end() ? GR(0) : it->second;
    }
    bool is_zero() const { return d.empty(); }

    friend bool operator==(const SpMat& a, const SpMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.d == b.d;
    }

    friend SpMat operator+(const SpMat& a, const SpMat& b) {
        SpMat r = a;
        for (auto& [k, v] : b.d) r.add_at(k.first, k.second, v);
        return r;
    }
    friend SpMat operator-(const SpMat& a, const SpMat& b) {
        SpMat r = a;
        for (auto& [k, v] : b.d) r.add_at(k.first, k.second, -v);
        return r;
    }
    SpMat smul(const GR& s) const {
        SpMat r(rows, cols);
        if (s.is_zero()) return r;
        for (auto& [k, v] : d) r.d[k] = v * s;
        return r;
    }
    friend SpMat operator*(const SpMat& a, const SpMat& b) {
        // row-major accumulation over b's row adjacency
        std::vector<std::vector<std::pair<int, GR>>> brows(b.rows);
        for (auto& [k, v] : b.d) brows[k.first].push_back({k.second, v});
        SpMat r(a.rows, b.cols);
        for (auto& [k, va] : a.d) {
            for (auto& [j, vb] : brows[k.second]) r.add_at(k.first, j, va * vb);
        }
        return r;
    }

    SpMat transpose() const {
        SpMat r(cols, rows);
        for (auto& [k, v] : d) r.d[{k.second, k.first}] = v;
        return r;
    }

    GR trace() const {
        GR t;
        for (auto& [k, v] : d)
            if (k.first == k.second) t += v;
        return t;
    }
};

inline SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat r(a.rows * b.rows, a.cols * b.cols);
    for (auto& [ka, va] : a.d)
        for (auto& [kb, vb] : b.d)
            r.d[{ka.first * b.rows + kb.first, ka.second * b.cols + kb.second}] = va * vb;
    return r;
}

// swap operator on C^n (x) C^n
inline SpMat swap_op(int n) {
    SpMat r(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.d[{i * n + j, j * n + i}] = GR(1);
    return r;
}

// trace out tensor factor `which` (1 or 2) of a (d1*d2)x(d1*d2) matrix
inline SpMat partial_trace(const SpMat& m, int d1, int d2, int which) {
    if (m.rows != d1 * d2 || m.cols != d1 * d2)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    SpMat r(which == 1 ? d2 : d1, which == 1 ? d2 : d1);
    for (auto& [k, v] : m.d) {
        int i1 = k.first / d2, i2 = k.first % d2;
        int j1 = k.second / d2, j2 = k.second % d2;
        if (which == 1 && i1 == j1) r.add_at(i2, j2, v);
        if (which == 2 && i2 == j2) r.add_at(i1, j1, v);
    }
    return r;
}

// exact rank by Gaussian elimination on sparse rows
inline int rank_elim(const SpMat& m) {
    std::map<int, std::map<int, GR>> rows;
    for (auto& [k, v] : m.d) rows[k.first][k.second] = v;
    std::map<int, std::map<int, GR>> pivots; // leading col -> row
    int rank = 0;
    for (auto& [ri, rv0] : rows) {
        std::map<int, GR> rv = rv0;
        while (!rv.empty()) {
            int c = rv.begin()->first;
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                pivots[c] = rv;
                ++rank;
                break;
            }
            GR f = rv.begin()->second / it->second.at(c);
            for (auto& [cc, vv] : it->second) {
                auto jt = rv.find(cc);
                GR nv = (jt == rv.end() ? GR(0) : jt->second) - f * vv;
                if (nv.is_zero()) rv.erase(cc);
                else rv[cc] = nv;
            }
        }
    }
    return rank;
}

// exact basis of the right kernel; vectors returned as column maps
inline std::vector<std::vector<GR>> nullspace(const SpMat& m) {
    // dense-ish reduced row echelon over the columns actually present
    int n = m.cols;
    std::vector<std::map<int, GR>> rows;
    {
        std::map<int, std::map<int, GR>> byrow;
        for (auto& [k, v] : m.d) byrow[k.first][k.second] = v;
        for (auto& [ri, rv] : byrow) rows.push_back(rv);
    }
    std::map<int, std::map<int, GR>> pivots; // pivot col -> normalized row
    for (auto rv : rows) {
        while (!rv.empty()) {
            int c = rv.begin()->first;
            auto p = pivots.find(c);
            if (p == pivots.end()) break;
            GR f = rv.begin()->second;
            for (auto& [cc, vv] : p->second) {
                auto jt = rv.find(cc);
                GR nv = (jt == rv.end() ? GR(0) : jt->second) - f * vv;
                if (nv.is_zero()) rv.erase(cc);
                else rv[cc] = nv;
            }
        }
        if (!rv.empty()) {
            GR lead = rv.begin()->second;
            for (auto& [cc, vv] : rv) vv = vv / lead;
            pivots[rv.begin()->first] = rv;
        }
    }
    // back-substitute to full reduced form
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (auto& [pc, prow] : pivots) {
            if (pc == it->first) continue;
            auto jt = prow.find(it->first);
            if (jt == prow.end()) continue;
            GR f = jt->second;
            for (auto& [cc, vv] : it->second) {
                auto kt = prow.find(cc);
                GR nv = (kt == prow.end() ? GR(0) : kt->second) - f * vv;
                if (nv.is_zero()) prow.erase(cc);
                else prow[cc] = nv;
            }
        }
    }
    std::vector<std::vector<GR>> basis;
    for (int c = 0; c < n; ++c) {
        if (pivots.count(c)) continue;
        std::vector<GR> v(n, GR(0));
        v[c] = GR(1);
        for (auto& [pc, prow] : pivots) {
            auto it = prow.find(c);
            if (it != prow.end()) v[pc] = -it->second;
        }
        basis.push_back(v);
    }
    return basis;
}

// rank of a verified idempotent equals its trace
inline int rank_idempotent(const SpMat& p) {
    if (!(p * p == p)) throw std::logic_error("rank_idempotent: matrix is not idempotent");
    GR t = p.trace();
    if (t.im != 0 || denominator(t.re) != 1) throw std::logic_error("idempotent trace not integral");
    return static_cast<int>(numerator(t.re));
}

} // namespace ybx
