#pragma once
// Embedding of a two-factor operator (aux (x) one site) into aux (x) site^N.
#include "ybx/polymat.hpp"

namespace ybx {

// m acts on A (x) B with dim(A)=n1, dim(B)=n2; the result acts on
// A (x) B^N with m applied to the aux factor and site `site` (0-based)
template <class Mat>
Mat embed_aux_site(const Mat& m, int n1, int n2, int N, int site) {
    long full = 1;
    for (int j = 0; j < N; ++j) full *= n2;
    long right = 1;
    for (int j = site + 1; j < N; ++j) right *= n2;
    long rest = full / n2;
    Mat out(static_cast<int>(n1 * full), static_cast<int>(n1 * full));
    for (auto& [k, v] : m.d) {
        int x = k.first / n2, y = k.first % n2;
        int xc = k.second / n2, yc = k.second % n2;
        for (long other = 0; other < rest; ++other) {
            long lo = other % right;
            long hi = other / right;
            long base = hi * (right * n2) + lo;
            out.d[{static_cast<int>(x * full + base + y * right),
                   static_cast<int>(xc * full + base + yc * right)}] = v;
        }
    }
    return out;
}

} // namespace ybx
