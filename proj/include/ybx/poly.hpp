#pragma once
// Univariate polynomials in the spectral parameter u over GR,
// stored as coefficient vectors by ascending degree with no trailing zeros.
#include "ybx/scalars.hpp"
#include <vector>

namespace ybx {

using Poly = std::vector<GR>;

inline void ptrim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int pdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

inline Poly pconst(const GR& c) {
    if (c.is_zero()) return {};
    return {c};
}

// the monomial u
inline Poly pu() { return {GR(0), GR(1)}; }

inline Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), GR(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ptrim(r);
    return r;
}

inline Poly psub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), GR(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ptrim(r);
    return r;
}

inline Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, GR(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ptrim(r);
    return r;
}

inline Poly psmul(const Poly& a, const GR& s) {
    if (s.is_zero()) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

inline GR peval(const Poly& p, const GR& u) {
    GR v;
    for (size_t i = p.size(); i-- > 0;) v = v * u + p[i];
    return v;
}

inline bool peq(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// quotient and remainder of a by b (b nonzero)
inline std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("poly division by zero");
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GR(0));
    while (a.size() >= b.size() && !a.empty()) {
        GR c = a.back() / b.back();
        size_t sh = a.size() - b.size();
        q[sh] = c;
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        ptrim(a);
    }
    ptrim(q);
    return {q, a};
}

// monic gcd
inline Poly pgcd(Poly a, Poly b) {
    while (!b.empty()) {
        auto [q, r] = pdivmod(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        GR lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

inline std::string pstr(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p[i].str() + ")";
        if (i == 1) s += "*u";
        else if (i > 1) s += "*u^" + std::to_string(i);
    }
    return s;
}

} // namespace ybx
