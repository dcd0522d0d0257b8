#pragma once
// Gamma-matrix representations, antisymmetrized products, chirality,
// L-operators, and the generator-relation checks.
#include "ybx/polymat.hpp"
#include <optional>
#include <vector>

namespace ybx {

struct CliffordRep {
    int d = 0;                     // space dimension
    std::vector<SpMat> gammas;     // d matrices of size 2^(d/2)
    std::optional<SpMat> chir;     // present iff d even
    int spinor_dim() const { return gammas.empty() ? 0 : gammas[0].rows; }
};

// fixed recursive Pauli-block basis; 2 <= d <= 12
CliffordRep build_gammas(int d);

// product gamma^1...gamma^d times the phase in {1,i,-1,-i} making its square I
SpMat chirality(const CliffordRep& rep);

// (1/k!) antisymmetrization of gamma^{a_1}...gamma^{a_k}; equals the plain
// ordered product for distinct indices, and 0 for repeated indices.
SpMat antisym_product(const CliffordRep& rep, const std::vector<int>& idx, bool* repeated = nullptr);

// normalized commutator (1/2)[gamma^a, gamma^b]
SpMat gamma_ab(const CliffordRep& rep, int a, int b);

// L^{ab}(u) = u delta^{ab} - (1/2) gamma^{ab} on V (x) S, rows (a, alpha)
PMat L_operator(const CliffordRep& rep);
// same operator on S (x) V, rows (alpha, a)
PMat L_operator_sv(const CliffordRep& rep);

struct GeneratorReport {
    bool pass = false;
    std::optional<Rat> beta;   // set by the 'constraint' check
    std::string detail;
};

enum class GenRelation { lie, symmetry, constraint };

// checks Lie-algebra / symmetry / Yangian-constraint relations of the
// generators G^{ab} = -(1/2) gamma^{ab} with the orthogonal metric
GeneratorReport verify_generator_relations(const CliffordRep& rep, GenRelation which);

} // namespace ybx
