#pragma once
// Sparse matrices with polynomial entries in the spectral parameter u.
#include "ybx/poly.hpp"
#include "ybx/spmat.hpp"

namespace ybx {

struct PMat {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, Poly> d;

    PMat() = default;
    PMat(int r, int c) : rows(r), cols(c) {}

    static PMat from_const(const SpMat& m) {
        PMat r(m.rows, m.cols);
        for (auto& [k, v] : m.d) r.d[k] = pconst(v);
        return r;
    }
    static PMat identity(int n) { return from_const(SpMat::identity(n)); }

    void add_at(int i, int j, const Poly& p) {
        auto it = d.find({i, j});
        if (it == d.end()) {
            if (!p.empty()) d[{i, j}] = p;
        } else {
            it->second = padd(it->second, p);
            if (it->second.empty()) d.erase(it);
        }
    }
    Poly at(int i, int j) const {
        auto it = d.find({i, j});
        return it == d.end() ? Poly{} : it->second;
    }

    int degree() const {
        int dg = -1;
        for (auto& [k, p] : d) dg = std::max(dg, pdeg(p));
        return dg;
    }

    friend bool operator==(const PMat& a, const PMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.d == b.d;
    }
    friend PMat operator+(const PMat& a, const PMat& b) {
        PMat r = a;
        for (auto& [k, p] : b.d) r.add_at(k.first, k.second, p);
        return r;
    }
    friend PMat operator-(const PMat& a, const PMat& b) {
        PMat r = a;
        for (auto& [k, p] : b.d) r.add_at(k.first, k.second, psmul(p, GR(-1)));
        return r;
    }
    PMat pscale(const Poly& s) const {
        PMat r(rows, cols);
        for (auto& [k, p] : d) {
            Poly q = pmul(p, s);
            if (!q.empty()) r.d[k] = q;
        }
        return r;
    }
    PMat smul(const GR& s) const { return pscale(pconst(s)); }

    friend PMat operator*(const PMat& a, const PMat& b) {
        std::vector<std::vector<std::pair<int, const Poly*>>> brows(b.rows);
        for (auto& [k, p] : b.d) brows[k.first].push_back({k.second, &p});
        PMat r(a.rows, b.cols);
        for (auto& [k, pa] : a.d)
            for (auto& [j, pb] : brows[k.second]) r.add_at(k.first, j, pmul(pa, *pb));
        return r;
    }

    SpMat eval(const GR& u) const {
        SpMat r(rows, cols);
        for (auto& [k, p] : d) {
            GR v = peval(p, u);
            if (!v.is_zero()) r.d[k] = v;
        }
        return r;
    }
};

inline PMat kron(const PMat& a, const PMat& b) {
    PMat r(a.rows * b.rows, a.cols * b.cols);
    for (auto& [ka, pa] : a.d)
        for (auto& [kb, pb] : b.d)
            r.d[{ka.first * b.rows + kb.first, ka.second * b.cols + kb.second}] = pmul(pa, pb);
    return r;
}

inline PMat partial_trace(const PMat& m, int d1, int d2, int which) {
    if (m.rows != d1 * d2 || m.cols != d1 * d2)
        throw std::invalid_argument("partial_trace: dimension mismatch");
    int n = which == 1 ? d2 : d1;
    PMat r(n, n);
    for (auto& [k, p] : m.d) {
        int i1 = k.first / d2, i2 = k.first % d2;
        int j1 = k.second / d2, j2 = k.second % d2;
        if (which == 1 && i1 == j1) r.add_at(i2, j2, p);
        if (which == 2 && i2 == j2) r.add_at(i1, j1, p);
    }
    return r;
}

} // namespace ybx
