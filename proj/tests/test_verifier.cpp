#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/verifier.hpp"

using namespace ybx;

TEST_CASE("slot embeddings") {
    SpMat r = swap_op(2);
    CHECK(emb12(r, 2) == kron(r, SpMat::identity(2)));
    CHECK(emb23(r, 2) == kron(SpMat::identity(2), r));
    // 13-embedding swaps the outer factors
    SpMat e13 = emb13(r, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                CHECK(e13.at(c * 4 + b * 2 + a, a * 4 + b * 2 + c) == GR(1));
}

TEST_CASE("Yang-Baxter holds for the fundamental R and fails when corrupted") {
    RObject R = fundamental_R(1, 3);
    IdentityReport ok = check_rrr(R, 3);
    CHECK(ok.pass);
    CHECK_FALSE(ok.first_violation.has_value());
    CHECK(!ok.grid.empty());

    auto clean = [&](const Rat& u) { return R.matrix.eval(GR(u)); };
    auto corrupt = [&](const Rat& u) {
        SpMat m = R.matrix.eval(GR(u));
        m.add_at(0, 1, GR(u)); // off-support perturbation
        return m;
    };
    IdentityReport bad = check_rrr(corrupt, clean, clean, 3, R.degree());
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_violation.has_value());
}

TEST_CASE("violation recording") {
    IdentityReport rep;
    rep.record(Rat(1), Rat(2), SpMat::identity(2), SpMat::identity(2));
    CHECK(rep.pass);
    SpMat other = SpMat::identity(2).smul(GR(3));
    rep.record(Rat(4), Rat(5), SpMat::identity(2), other);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_violation.has_value());
    CHECK(rep.first_violation->u == Rat(4));
    CHECK(rep.first_violation->lhs == GR(1));
    CHECK(rep.first_violation->rhs == GR(3));
}

TEST_CASE("RLL intertwining, vector and spinor auxiliary layouts") {
    CliffordRep rep = build_gammas(3);
    RObject Rvv = fundamental_R(1, 3);
    CHECK(check_rll(Rvv.matrix, rep, RllLayout::vector_aux).pass);
    auto parts = spinor_R(rep);
    CHECK(check_rll(parts[0].rhat, rep, RllLayout::spinor_aux_check).pass);
    CHECK(check_rll(parts[0].r, rep, RllLayout::spinor_aux).pass);
}

TEST_CASE("inversion identity fixes the shift parameter") {
    CliffordRep rep4 = build_gammas(4);
    CHECK(check_inversion(rep4, Rat(1)).pass);
    CHECK_FALSE(check_inversion(rep4, Rat(2)).pass);
    for (int d = 3; d <= 6; ++d) {
        CAPTURE(d);
        auto beta = solve_inversion_beta(build_gammas(d));
        REQUIRE(beta.has_value());
        CHECK(*beta == Rat(d - 2, 2));
    }
}

TEST_CASE("fusion of L pairs into the fundamental R") {
    CliffordRep rep3 = build_gammas(3);
    CHECK(check_llr_fusion(rep3, Rat(1, 2)).pass);
    CHECK(check_llr_fusion(build_gammas(4), Rat(1)).pass);
}

TEST_CASE("monodromy-level fusion at small chain length") {
    CliffordRep rep3 = build_gammas(3);
    CHECK(check_monodromy_fusion(rep3, 1, Rat(1, 2)).pass);
    CHECK(check_monodromy_fusion(rep3, 2, Rat(1, 2)).pass);
    CHECK_THROWS(check_monodromy_fusion(rep3, 4, Rat(1, 2)));
}
