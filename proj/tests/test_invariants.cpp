#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/invariants.hpp"

using namespace ybx;

TEST_CASE("z roots") {
    CHECK(z_roots(4) == std::vector<Rat>{-2, -1, 0, 1, 2});
    CHECK(z_roots(6) == std::vector<Rat>{-3, -2, -1, 0, 1, 2, 3});
    CHECK(z_roots(3) == std::vector<Rat>{Rat(1, 2), Rat(-3, 2)});
    CHECK(z_roots(5) == std::vector<Rat>{Rat(1, 2), Rat(-3, 2), Rat(5, 2)});
}

TEST_CASE("projectors resolve the identity with binomial ranks") {
    CliffordRep rep = build_gammas(4);
    SpMat z = build_z(rep);
    auto projs = eigen_projectors(rep, z);
    REQUIRE(projs.size() == 5);
    SpMat sum(16, 16);
    std::map<Rat, int> expected{{-2, 1}, {-1, 4}, {0, 6}, {1, 4}, {2, 1}};
    for (auto& [root, P] : projs) {
        CHECK(P * P == P);
        CHECK(z * P == P.smul(GR(root)));
        CHECK(rank_idempotent(P) == expected.at(root));
        sum = sum + P;
    }
    CHECK(sum == SpMat::identity(16));
}

TEST_CASE("tower polynomial reproduces the even characteristic polynomial") {
    // I_5(z,4) = z(z^2-1)(z^2-4)
    Poly w4{GR(0), GR(4), GR(0), GR(Rat(-5)), GR(0), GR(1)};
    CHECK(peq(tower_poly(4, 5), w4));
    CHECK(peq(characteristic_poly(4), w4));
}

TEST_CASE("matrix tower equals the direct contraction") {
    for (int d : {3, 4, 5}) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        auto tower = invariant_tower(rep, d + 1);
        for (int k = 0; k <= d + 1; ++k) CHECK(tower[k] == invariant_direct(rep, k));
        CHECK(tower[d + 1].is_zero());
    }
    CHECK_THROWS(invariant_tower(build_gammas(4), 6));
}

TEST_CASE("gamma subset sum edge cases") {
    CliffordRep rep = build_gammas(3);
    CHECK(gamma_subset_sum(rep, 0) == SpMat::identity(4));
    CHECK(gamma_subset_sum(rep, 4).is_zero()); // no 4-subsets of 3 indices
    CHECK(gamma_subset_sum(rep, 1) == build_z(rep).smul(GR(2)));
}

TEST_CASE("permutation operator: spectral and gamma-sum forms agree with the swap") {
    for (int d = 3; d <= 6; ++d) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        SpMat s = permutation_operator(rep, PermMethod::spectral);
        CHECK(s == permutation_operator(rep, PermMethod::gamma_sum));
        CHECK(s == swap_op(rep.spinor_dim()));
    }
}

TEST_CASE("chirality projectors split the pair space") {
    for (int d : {4, 6}) {
        CAPTURE(d);
        CliffordRep rep = build_gammas(d);
        auto [plus, minus] = chirality_projectors(rep);
        int n2 = rep.spinor_dim() * rep.spinor_dim();
        CHECK(plus * plus == plus);
        CHECK(minus * minus == minus);
        CHECK((plus * minus).is_zero());
        CHECK(plus + minus == SpMat::identity(n2));
        // plus owns the odd-integer roots
        SpMat z = build_z(rep);
        auto projs = eigen_projectors(rep, z);
        CHECK(plus * projs.at(1) == projs.at(1));
        CHECK((minus * projs.at(1)).is_zero());
        CHECK(minus * projs.at(0) == projs.at(0));
    }
}

TEST_CASE("pair space bundle is consistent") {
    CliffordRep rep = build_gammas(5);
    SpinorPairSpace ps = make_pair_space(rep);
    CHECK(ps.roots == z_roots(5));
    CHECK(ps.permutation == swap_op(4));
    CHECK_FALSE(ps.chirality_plus.has_value());
    SpMat sum(16, 16);
    for (auto& [root, P] : ps.projectors) sum = sum + P;
    CHECK(sum == SpMat::identity(16));
}
