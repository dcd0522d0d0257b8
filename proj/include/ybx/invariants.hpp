#pragma once
// Two-site invariant z on S(x)S, the invariant tower I_k, characteristic
// polynomials, eigenspace and chirality projectors, and the permutation
// operator in its spectral and gamma-sum forms.
#include "ybx/clifford.hpp"
#include <map>

namespace ybx {

// eigenvalues of z: even d=2m -> {-m..m}; odd d -> {(-1)^k(2k+1)/2, k=0..m}
std::vector<Rat> z_roots(int d);

// z = (1/2) sum_a gamma^a (x) gamma^a
SpMat build_z(const CliffordRep& rep);

// J_k = sum over k-subsets A of gamma^A (x) gamma^A (ordered products)
SpMat gamma_subset_sum(const CliffordRep& rep, int k);

// scalar polynomial I_k(t, d) from the iteration
// I_{m+1} = t*I_m - (m/4)(d-m+1)*I_{m-1}, I_0 = 1, I_1 = t
Poly tower_poly(int d, int k);

// matrix tower I_0..I_{k_max} via the same iteration with z in place of t
std::vector<SpMat> invariant_tower(const CliffordRep& rep, int k_max);

// direct contraction form of I_k: (k!/2^k) J_k
SpMat invariant_direct(const CliffordRep& rep, int k);

// minimal polynomial of z: even d -> t*prod_{k=1..m}(t^2-k^2);
// odd d -> prod over the m+1 distinct roots
Poly characteristic_poly(int d);

// Lagrange projectors onto the z-eigenspaces, keyed by root
std::map<Rat, SpMat> eigen_projectors(const CliffordRep& rep, const SpMat& z);

// (Pi_plus, Pi_minus) with Pi_plus the projector owning the odd-integer roots;
// built as (I +- eta * chi(x)chi)/2 with the orientation eta fixed by ownership
std::pair<SpMat, SpMat> chirality_projectors(const CliffordRep& rep);

enum class PermMethod { spectral, gamma_sum };

SpMat permutation_operator(const CliffordRep& rep, PermMethod method);

struct SpinorPairSpace {
    CliffordRep rep;
    SpMat z;
    std::vector<Rat> roots;
    std::map<Rat, SpMat> projectors;
    std::optional<SpMat> chirality_plus, chirality_minus; // even d only
    SpMat permutation;
};

SpinorPairSpace make_pair_space(const CliffordRep& rep);

} // namespace ybx
