#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/rmatrix.hpp"

using namespace ybx;

namespace {

Poly lin(const Rat& c0, const Rat& c1) {
    Poly p{GR(c0), GR(c1)};
    ptrim(p);
    return p;
}

// A == c * B entrywise for some nonzero scalar c
bool proportional(const SpMat& a, const SpMat& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto& [key, val] = *b.d.begin();
    GR c = a.at(key.first, key.second) / val;
    return !c.is_zero() && a == b.smul(c);
}

} // namespace

TEST_CASE("beta function ratios follow the functional-equation ladder") {
    // B((z+1-u)/2, u) ratios: one ladder step per unit of (z_ref - z_k)/2
    BetaCoefficient b = beta_ratio(Rat(0), Rat(2));
    CHECK(peq(pmul(b.num, lin(1, -1)), pmul(b.den, lin(1, 1)))); // (1+u)/(1-u)
    BetaCoefficient b2 = beta_ratio(Rat(1), Rat(3));
    CHECK(peq(pmul(b2.num, lin(2, -1)), pmul(b2.den, lin(2, 1)))); // (2+u)/(2-u)
    BetaCoefficient b0 = beta_ratio(Rat(2), Rat(2));
    CHECK(peq(pmul(b0.num, Poly{GR(1)}), b0.den)); // trivial ratio
    CHECK_THROWS(beta_ratio(Rat(0), Rat(1)));      // parity mismatch
}

TEST_CASE("fundamental R: structure and special values") {
    for (auto [eps, n] : {std::pair{1, 3}, {1, 4}, {-1, 2}, {-1, 4}}) {
        CAPTURE(eps);
        CAPTURE(n);
        RObject R = fundamental_R(eps, n);
        CHECK(R.symmetry == (eps == 1 ? Symmetry::so : Symmetry::sp));
        CHECK(R.n == n);
        CHECK(R.degree() == 2);
        // R(0) = beta * P with beta = n/2 - eps
        SpMat at0 = R.matrix.eval(GR(0));
        CHECK(at0 == swap_op(n).smul(GR(Rat(n, 2) - eps)));
        // P commutes with the whole family
        SpMat at3 = R.matrix.eval(GR(3));
        CHECK(swap_op(n) * at3 == at3 * swap_op(n));
    }
}

TEST_CASE("sp(2) fundamental R is the rescaled sl(2) form") {
    RObject sp2 = fundamental_R(-1, 2);
    // u(u+1) I + 2(u+1) P  ==  2(u+1) [ (u/2) I + P ]
    PMat model = PMat::identity(4).pscale(Poly{GR(0), GR(1), GR(1)}) +
                 PMat::from_const(swap_op(2)).pscale(lin(2, 2));
    CHECK(sp2.matrix == model);
}

TEST_CASE("so(3) spinorial R is 2u I + P") {
    CliffordRep rep = build_gammas(3);
    auto parts = spinor_R(rep);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].chirality == Chirality::full);
    PMat model = PMat::identity(4).pscale(lin(0, 2)) + PMat::from_const(swap_op(2));
    CHECK(parts[0].r == model);
}

TEST_CASE("so(4) spinorial parts: projector combination and constant part") {
    CliffordRep rep = build_gammas(4);
    auto parts = spinor_R(rep);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].chirality == Chirality::minus);
    CHECK(parts[1].chirality == Chirality::plus);
    // minus part: (u-1)(P_2 + P_-2) + (u+1) P_0
    auto projs = eigen_projectors(rep, build_z(rep));
    PMat model = (PMat::from_const(projs.at(2)) + PMat::from_const(projs.at(-2)))
                     .pscale(lin(-1, 1)) +
                 PMat::from_const(projs.at(0)).pscale(lin(1, 1));
    CHECK(parts[0].r == model);
    CHECK(parts[0].rhat == PMat::from_const(swap_op(4)) * model);
    // plus part: constant, eight unit entries, involutive on its support
    CHECK(parts[1].rhat.degree() == 0);
    CHECK(parts[1].rhat.d.size() == 8);
    SpMat c = parts[1].rhat.eval(GR(0));
    SpMat support(16, 16);
    for (auto& [k, v] : c.d) {
        CHECK(v == GR(1));
        support.d[{k.first, k.first}] = GR(1);
    }
    CHECK(c * c == support);
}

TEST_CASE("so(5) spinorial R equals fundamental sp(4) at doubled argument") {
    CliffordRep rep = build_gammas(5);
    auto parts = spinor_R(rep);
    REQUIRE(parts.size() == 1);
    RObject sp4 = fundamental_R(-1, 4);
    for (Rat u : {Rat(0), Rat(1), Rat(-2), Rat(5, 3)})
        CHECK(parts[0].r.eval(GR(u)) == sp4.matrix.eval(GR(2 * u)));
}

TEST_CASE("spinor R object wrapper selects part and form") {
    CliffordRep rep = build_gammas(4);
    auto parts = spinor_R(rep);
    RObject checked = spinor_R_object(rep, Chirality::minus, true);
    CHECK(checked.matrix == parts[0].rhat);
    CHECK(checked.checked);
    RObject unchecked = spinor_R_object(rep, Chirality::minus, false);
    CHECK(unchecked.matrix == parts[0].r);
}

TEST_CASE("defining relations hold for every part, d = 3..5") {
    for (int d = 3; d <= 5; ++d) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        for (const auto& part : spinor_R(rep)) {
            RelationReport rr = verify_defining_relations(rep, part);
            CHECK(rr.symmetry_pass);
            CHECK(rr.v0_pass);
            CHECK(rr.ladder_pass);
        }
    }
}

TEST_CASE("parity-restricted expansion is proportional to a chiral part") {
    CliffordRep rep = build_gammas(4);
    auto parts = spinor_R(rep);
    Rat u(1, 3);
    for (int parity : {0, 1}) {
        CAPTURE(parity);
        SpMat e = sw_expansion(rep, parity, u);
        bool matched = false;
        for (const auto& part : parts)
            if (proportional(e, part.rhat.eval(GR(u)))) matched = true;
        CHECK(matched);
    }
}
