#pragma once
// Exact identity testing for Yang-Baxter-type relations via degree-bounded
// evaluation on rational grids.
#include "ybx/rmatrix.hpp"
#include <functional>

namespace ybx {

struct IdentityReport {
    std::string identity_name;
    std::map<std::string, std::string> parameters;
    std::vector<std::pair<Rat, Rat>> grid;
    bool pass = true;
    struct Violation {
        Rat u, v;
        int row = 0, col = 0;
        GR lhs, rhs;
    };
    std::optional<Violation> first_violation;

    void record(const Rat& u, const Rat& v, const SpMat& lhs, const SpMat& rhs);
};

// embeddings of a two-factor operator into slots of C^n (x) C^n (x) C^n
SpMat emb12(const SpMat& r, int n);
SpMat emb13(const SpMat& r, int n);
SpMat emb23(const SpMat& r, int n);

// R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v); all three factors
// evaluated from the same family of matrices indexed by slot
IdentityReport check_rrr(const std::function<SpMat(const Rat&)>& R12,
                         const std::function<SpMat(const Rat&)>& R13,
                         const std::function<SpMat(const Rat&)>& R23,
                         int n, int max_degree, int grid_scale = 1);

IdentityReport check_rrr(const RObject& R, int factor_dim, int grid_scale = 1);

enum class RllLayout { vector_aux, spinor_aux, spinor_aux_check };

// vector_aux: R_vv(u) intertwines two vector-spinor L's on V1(x)V2(x)S;
// spinor_aux_check: Rhat_ss(u) on V(x)S1(x)S2 in the check form;
// spinor_aux: unchecked R_ss(u), alternative index layout (reported, not
// required by the acceptance gate)
IdentityReport check_rll(const PMat& R, const CliffordRep& rep, RllLayout layout,
                         int grid_scale = 1);

// L(u+beta+1/2) L(-u-1/2) = -u(u+beta+1) I on S(x)V
IdentityReport check_inversion(const CliffordRep& rep, const Rat& beta);

// solve for beta from the vanishing of the off-diagonal part of the
// inversion product; nullopt when no single rational beta works
std::optional<Rat> solve_inversion_beta(const CliffordRep& rep);

// L(u+beta-1/2) gamma_{b0} L(-1/2-u) = -sum_{a0} R^{a0 a1}_{b0 b1}(u) gamma_{a0}
IdentityReport check_llr_fusion(const CliffordRep& rep, const Rat& beta);

// T(u+beta-1/2) gamma_{b0} T~(-u-1/2) = (-1)^N sum TT^{a0.}_{b0.}(u) gamma_{a0}
// with T~ the reversed factor product; for d=4 also asserts the trace and
// full-matrix forms of the fused transfer relation
IdentityReport check_monodromy_fusion(const CliffordRep& rep, int N, const Rat& beta);

} // namespace ybx
