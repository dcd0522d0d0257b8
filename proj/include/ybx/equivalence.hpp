#pragma once
// Coincidence machinery: intertwiner spaces, Kronecker factorization, block
// decomposition under similarity transforms, entry-table basis matching, and
// the abstract RTT zero-pattern derivation.
#include "ybx/rmatrix.hpp"
#include <functional>
#include <set>

namespace ybx {

// exact basis of {G : R_B(alpha*u+gamma0) G = lambda(u) G R_A(u)} over the
// given sample points (sufficient samples = degree bound + 1)
std::vector<SpMat> intertwiner_space(const PMat& RA, const PMat& RB,
                                     const Rat& alpha, const Rat& gamma0,
                                     const std::vector<Rat>& samples,
                                     const std::function<GR(const Rat&)>& lambda);

struct KronFactor {
    bool symmetric = false; // G = g (x) g (possibly after rescaling)
    SpMat g, h;             // always G = g (x) h
};

// rank-one reshuffle factorization of an n^2 x n^2 matrix; nullopt when the
// matrix is not a Kronecker product
std::optional<KronFactor> kron_factorize(const SpMat& G, int n);

struct BlockDecomposition {
    SpMat V; // one-factor similarity applied as (V x V) . R . (V x V)
    std::vector<std::pair<std::vector<int>, PMat>> blocks;
};

// blocks of the nonzero pattern of (V x V) R (V x V): with an explicit V the
// connected components are merged per index half-window (the block-diagonal
// presentation the similarity exposes); without V the finest
// connected-component decomposition is returned
BlockDecomposition block_decompose(const PMat& R, const std::optional<SpMat>& V);

// the published one-factor similarity matrices (1-based index pairs)
SpMat similarity_V4();
SpMat similarity_V6();

struct BasisMatch {
    std::vector<int> perm;  // column j of the factor matrix carries e_{perm[j]}
    std::vector<GR> phase;  // entry phase[j] in {1,-1,i,-i}
};

// search for a signed monomial one-factor matrix s with
// (s x s) R (s x s)^{-1} equal to the table; identity tried first and the
// permutation search pruned by diagonal-entry multisets
std::optional<BasisMatch> paper_basis_match(const PMat& R, const PMat& table, int n);

// abstract RTT zero pattern: entries (i,j) of a generic T forced to vanish by
// the support of R under the fixpoint rules plus the nondegeneracy reading
// (off-diagonal generators appearing only in vacuous or pure-commutation
// equations are discarded)
std::set<std::pair<int, int>> rtt_pattern(const PMat& R, int n);

} // namespace ybx
