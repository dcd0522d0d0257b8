#pragma once
// Fundamental (vector-vector) R-matrices for orthogonal and symplectic
// symmetry, and spinorial R-matrices from the Beta-function spectral
// decomposition, normalized to primitive polynomial matrices.
#include "ybx/invariants.hpp"

namespace ybx {

enum class Symmetry { so, sp };
enum class RepPair { vector_vector, spinor_spinor };
enum class Chirality { plus, minus, full, na };

struct RObject {
    Symmetry symmetry = Symmetry::so;
    int n = 0;                     // vector dimension d, or 2m for sp
    RepPair rep_pair = RepPair::vector_vector;
    Chirality chirality = Chirality::na;
    bool checked = false;          // true: matrix is Rhat = P * R
    std::vector<Rat> roots;        // spinor-spinor: roots of the parity class
    PMat matrix;
    int degree() const { return matrix.degree(); }
};

struct BetaCoefficient {
    Rat z_k, z_ref;
    Poly num, den;                 // ratio B((z_k+1-u)/2,u) / B((z_ref+1-u)/2,u)
};

// exact ratio via the functional equation B(x+1,y) = x/(x+y) B(x,y);
// requires z_k - z_ref even
BetaCoefficient beta_ratio(const Rat& zk, const Rat& zref);

// R(u) = u(u+beta) I + (u+beta) P - eps u K with beta = n/2 - eps;
// eps=+1 orthogonal (K from the delta metric), eps=-1 symplectic
// (metric eps^{ab} = (-1)^{a+1} delta_{a+b,n-1}, 0-based)
RObject fundamental_R(int eps, int n);

struct SpinorRPart {
    Chirality chirality;           // plus/minus for even d, full for odd d
    std::vector<Rat> roots;
    PMat rhat;                     // checked form, content-normalized
    PMat r;                        // unchecked form P * rhat
};

// one part per root parity class, keyed plus = odd-root class
std::vector<SpinorRPart> spinor_R(const CliffordRep& rep);

RObject spinor_R_object(const CliffordRep& rep, Chirality which, bool checked);

// Shankar-Witten expansion restricted to one parity, evaluated at rational u:
// sum over k of fixed parity of (r_k/r_{k0}) (1/2^k) J_k
SpMat sw_expansion(const CliffordRep& rep, int parity, const Rat& u);

struct RelationReport {
    bool symmetry_pass = false;    // [Rhat, gamma1^a gamma1^b + gamma2^a gamma2^b] = 0
    bool v0_pass = false;          // the v^0 relation of the RLL expansion
    bool ladder_pass = false;      // spectral coefficient recursion on adjacent roots
    std::string detail;
    bool pass() const { return symmetry_pass && v0_pass && ladder_pass; }
};

RelationReport verify_defining_relations(const CliffordRep& rep, const SpinorRPart& part);

} // namespace ybx
