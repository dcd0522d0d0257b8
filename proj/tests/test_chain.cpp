#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/chain.hpp"

using namespace ybx;

TEST_CASE("vector monodromy layout and commuting transfer") {
    Monodromy m = vector_monodromy(3, 2);
    CHECK(m.aux == AuxKind::vector);
    CHECK(m.aux_dim == 3);
    CHECK(m.site_dim == 3);
    CHECK(m.matrix.rows == 27);
    PMat t = transfer(m);
    CHECK(t.rows == 9);
    CHECK(check_commuting_family(t).pass);
}

TEST_CASE("spinor-auxiliary L monodromy gives a commuting family") {
    CliffordRep rep = build_gammas(3);
    Monodromy m = spinor_monodromy_L(rep, 2);
    CHECK(m.aux_dim == rep.spinor_dim());
    CHECK(m.site_dim == 3);
    CHECK(check_commuting_family(transfer(m)).pass);
}

TEST_CASE("spinorial R monodromy respects the auxiliary block classes") {
    CliffordRep rep = build_gammas(4);
    Monodromy m = spinor_monodromy_R(rep, Chirality::minus, 2);
    CHECK(m.chirality == Chirality::minus);
    CHECK(m.aux_dim == 4);
    CHECK(m.site_dim == 4);
    // auxiliary-space support splits into the classes {0,3} and {1,2}
    std::vector<int> cls{0, 1, 1, 0};
    long site = static_cast<long>(m.site_dim) * m.site_dim;
    for (auto& [k, p] : m.matrix.d)
        CHECK(cls[static_cast<int>(k.first / site)] == cls[static_cast<int>(k.second / site)]);
    CHECK(check_commuting_family(transfer(m)).pass);
}

TEST_CASE("fused trace identity and its negative control") {
    CliffordRep rep = build_gammas(4);
    CHECK(fusion_trace_identity(rep, 1).pass);
    CHECK_FALSE(fusion_trace_identity(rep, 1, true).pass);
    CHECK(fusion_trace_identity(rep, 2).pass);
}

TEST_CASE("resource guards") {
    CHECK_THROWS(vector_monodromy(7, 1));
    CHECK_THROWS(vector_monodromy(3, 4));
    CHECK_THROWS(fusion_trace_identity(build_gammas(3), 1));
    CHECK_THROWS(fusion_trace_identity(build_gammas(4), 3));
}
