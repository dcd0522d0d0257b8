#pragma once
// Exact scalar arithmetic: rationals and Gaussian rationals (Q(i)).
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <stdexcept>
#include <string>

namespace ybx {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// Gaussian rational a + b*i with exact rational a, b.
struct GR {
    Rat re, im;

    GR() : re(0), im(0) {}
    GR(long r) : re(r), im(0) {}
    GR(const Rat& r) : re(r), im(0) {}
    GR(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GR operator+(const GR& a, const GR& b) { return {a.re + b.re, a.im + b.im}; }
    friend GR operator-(const GR& a, const GR& b) { return {a.re - b.re, a.im - b.im}; }
    friend GR operator-(const GR& a) { return {-a.re, -a.im}; }
    friend GR operator*(const GR& a, const GR& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GR operator/(const GR& a, const GR& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero GR");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GR& operator+=(const GR& b) { re += b.re; im += b.im; return *this; }
    GR& operator-=(const GR& b) { re -= b.re; im -= b.im; return *this; }
    GR& operator*=(const GR& b) { *this = *this * b; return *this; }
    friend bool operator==(const GR& a, const GR& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GR& a, const GR& b) { return !(a == b); }

    std::string str() const {
        if (im == 0) return rat_str(re);
        if (re == 0) return rat_str(im) + "i";
        return rat_str(re) + (im > 0 ? "+" : "") + rat_str(im) + "i";
    }
};

inline GR gr_i() { return GR(Rat(0), Rat(1)); }

} // namespace ybx
