#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/clifford.hpp"

using namespace ybx;

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
    for (int d = 2; d <= 8; ++d) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        int ns = rep.spinor_dim();
        CHECK(ns == 1 << (d / 2));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                SpMat anti = rep.gammas[a] * rep.gammas[b] + rep.gammas[b] * rep.gammas[a];
                CHECK(anti == SpMat::identity(ns).smul(GR(a == b ? 2 : 0)));
            }
    }
}

TEST_CASE("chirality squares to one and anticommutes with the gammas") {
    for (int d = 4; d <= 8; d += 2) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        REQUIRE(rep.chir.has_value());
        const SpMat& c = *rep.chir;
        CHECK(c * c == SpMat::identity(rep.spinor_dim()));
        for (int a = 0; a < d; ++a)
            CHECK((c * rep.gammas[a] + rep.gammas[a] * c).is_zero());
    }
}

TEST_CASE("odd dimension appends the chirality of the even predecessor") {
    CliffordRep rep4 = build_gammas(4);
    CliffordRep rep5 = build_gammas(5);
    CHECK(rep5.gammas[4] == chirality(rep4));
    CHECK_FALSE(rep5.chir.has_value());
}

TEST_CASE("antisymmetrized products") {
    CliffordRep rep = build_gammas(4);
    bool repeated = false;
    SpMat g12 = antisym_product(rep, {0, 1}, &repeated);
    CHECK_FALSE(repeated);
    CHECK(g12 == rep.gammas[0] * rep.gammas[1]);
    SpMat rep2 = antisym_product(rep, {1, 1}, &repeated);
    CHECK(repeated);
    CHECK(rep2.is_zero());
    // full antisymmetry
    CHECK(antisym_product(rep, {1, 0}) == g12.smul(GR(-1)));
    // top product relates to chirality up to the fixed phase
    SpMat top = antisym_product(rep, {0, 1, 2, 3});
    CHECK(top * top == SpMat::identity(4).smul(GR(Rat(-1))) * SpMat::identity(4).smul(GR(Rat(-1))));
}

TEST_CASE("gamma_ab is the normalized commutator") {
    CliffordRep rep = build_gammas(5);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            SpMat direct = (rep.gammas[a] * rep.gammas[b] - rep.gammas[b] * rep.gammas[a])
                               .smul(GR(Rat(1, 2)));
            CHECK(gamma_ab(rep, a, b) == direct);
        }
}

TEST_CASE("L operator layout") {
    CliffordRep rep = build_gammas(3);
    int ns = rep.spinor_dim(), d = rep.d;
    PMat L = L_operator(rep);
    PMat Lsv = L_operator_sv(rep);
    // same content, transposed factor order
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int al = 0; al < ns; ++al)
                for (int be = 0; be < ns; ++be) {
                    Poly p = L.at(a * ns + al, b * ns + be);
                    CHECK(peq(p, Lsv.at(al * d + a, be * d + b)));
                    GR expect = gamma_ab(rep, a, b).at(al, be) * GR(Rat(-1, 2));
                    Poly want = pconst(expect);
                    if (a == b && al == be) want = padd(want, pu());
                    CHECK(peq(p, want));
                }
}

TEST_CASE("generator relations hold and fix the constraint parameter") {
    for (int d = 3; d <= 6; ++d) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        CHECK(verify_generator_relations(rep, GenRelation::lie).pass);
        CHECK(verify_generator_relations(rep, GenRelation::symmetry).pass);
        GeneratorReport c = verify_generator_relations(rep, GenRelation::constraint);
        CHECK(c.pass);
        REQUIRE(c.beta.has_value());
        CHECK(*c.beta == Rat(d - 2, 2));
    }
}
