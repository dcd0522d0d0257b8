#pragma once
// Periodic-chain monodromy and transfer matrices with vector or spinor
// auxiliary space, commuting-family checks, and the fused trace identity.
#include "ybx/verifier.hpp"

namespace ybx {

enum class AuxKind { vector, spinor_L, spinor_R };

struct Monodromy {
    AuxKind aux = AuxKind::vector;
    int d = 0, N = 0;
    int aux_dim = 0, site_dim = 0;
    Chirality chirality = Chirality::na; // spinor_R chains only
    PMat matrix;                          // on aux (x) site^N
};

// ordered product of fundamental so(d) R factors R_{01}...R_{0N}
Monodromy vector_monodromy(int d, int N);

// ordered product of L factors, spinor auxiliary and vector sites
Monodromy spinor_monodromy_L(const CliffordRep& rep, int N);

// ordered product of spinorial (unchecked) R factors of one chirality,
// spinor auxiliary and spinor sites
Monodromy spinor_monodromy_R(const CliffordRep& rep, Chirality chir, int N);

// trace over the auxiliary factor
PMat transfer(const Monodromy& m);

// [t(u), t(v)] = 0 on a grid exceeding the degree bound
IdentityReport check_commuting_family(const PMat& t, int grid_scale = 1);

// d=4 fused trace identity relating the vector transfer trace to the
// bilinear block combination of the spinorial monodromy; wrong_shift replaces
// u+1/2 by u+3/2 to serve as a negative control
IdentityReport fusion_trace_identity(const CliffordRep& rep, int N, bool wrong_shift = false);

} // namespace ybx
