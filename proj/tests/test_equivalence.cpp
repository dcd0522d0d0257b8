#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/equivalence.hpp"

using namespace ybx;

namespace {

const std::vector<Rat> samples{0, 1, 2, 3, 4};
const auto unit_lambda = [](const Rat&) { return GR(1); };

} // namespace

TEST_CASE("intertwiner space: self-intertwiners of the fundamental R") {
    RObject R = fundamental_R(1, 3);
    auto basis = intertwiner_space(R.matrix, R.matrix, Rat(1), Rat(0), samples, unit_lambda);
    CHECK(!basis.empty());
    // every basis element really commutes with the family, checked at a
    // fresh argument outside the sample grid
    SpMat at7 = R.matrix.eval(GR(7));
    for (const SpMat& g : basis) CHECK(at7 * g == g * at7);
}

TEST_CASE("intertwiner space: so(3) spinorial vs rescaled sl(2) form") {
    CliffordRep rep = build_gammas(3);
    PMat RA = spinor_R(rep)[0].r; // equals 2u I + P
    PMat RB = PMat::identity(4).pscale(pu()) + PMat::from_const(swap_op(2));
    // RB(2u) == RA(u), so the space contains the identity
    auto basis = intertwiner_space(RA, RB, Rat(2), Rat(0), samples, unit_lambda);
    CHECK(!basis.empty());
    for (const SpMat& g : basis)
        CHECK(RB.eval(GR(10)) * g == g * RA.eval(GR(5)));
}

TEST_CASE("Kronecker factorization") {
    SpMat g(2, 2), h(2, 2);
    g.d[{0, 0}] = GR(1);
    g.d[{0, 1}] = GR(2);
    g.d[{1, 1}] = GR(3);
    h.d[{0, 1}] = GR(1);
    h.d[{1, 0}] = GR(Rat(-1, 2));
    auto f = kron_factorize(kron(g, h), 2);
    REQUIRE(f.has_value());
    CHECK(kron(f->g, f->h) == kron(g, h));
    CHECK_FALSE(f->symmetric);

    auto sym = kron_factorize(kron(g, g), 2);
    REQUIRE(sym.has_value());
    CHECK(sym->symmetric);
    CHECK(kron(sym->g, sym->g) == kron(g, g));

    // negative proportionality resolved through the imaginary unit
    auto neg = kron_factorize(kron(g, g.smul(GR(-1))), 2);
    REQUIRE(neg.has_value());
    CHECK(neg->symmetric);
    CHECK(kron(neg->g, neg->g) == kron(g, g.smul(GR(-1))));

    // the swap operator is not a Kronecker product
    CHECK_FALSE(kron_factorize(swap_op(2), 2).has_value());
}

TEST_CASE("similarity matrices are involutions") {
    CHECK(similarity_V4() * similarity_V4() == SpMat::identity(4));
    CHECK(similarity_V6() * similarity_V6() == SpMat::identity(8));
}

TEST_CASE("block decomposition of the so(4) minus part") {
    CliffordRep rep = build_gammas(4);
    PMat R = spinor_R(rep)[0].r;
    BlockDecomposition bd = block_decompose(R, similarity_V4());
    REQUIRE(bd.blocks.size() == 2);
    PMat sl2 = PMat::identity(4).pscale(pu()) + PMat::from_const(swap_op(2));
    for (auto& [idx, block] : bd.blocks) {
        CHECK(idx.size() == 4);
        CHECK(block == sl2);
    }
    // automatic mode on the pre-conjugated matrix refines the partition:
    // every connected component stays inside one of the two windows
    SpMat vv = kron(similarity_V4(), similarity_V4());
    PMat conj = PMat::from_const(vv) * R * PMat::from_const(vv);
    BlockDecomposition autod = block_decompose(conj, std::nullopt);
    for (auto& [idx, block] : autod.blocks) {
        bool lo = idx.front() < 8;
        for (int i : idx) CHECK((i < 8) == lo);
    }
}

TEST_CASE("block decomposition of a diagonal R is one-by-one") {
    CliffordRep rep = build_gammas(4);
    PMat R = spinor_R(rep)[1].r; // constant diagonal in the unchecked form
    BlockDecomposition bd = block_decompose(R, std::nullopt);
    CHECK(bd.blocks.size() == 8);
    for (auto& [idx, block] : bd.blocks) CHECK(idx.size() == 1);
}

TEST_CASE("entry-table basis matching") {
    CliffordRep rep = build_gammas(3);
    PMat R = spinor_R(rep)[0].r;
    auto self = paper_basis_match(R, R, 2);
    REQUIRE(self.has_value());
    CHECK(self->perm == std::vector<int>{0, 1});
    CHECK(self->phase == std::vector<GR>{GR(1), GR(1)});

    // recover a signed permutation: s e_0 = -e_1, s e_1 = e_0
    SpMat s(2, 2), sinv(2, 2);
    s.d[{1, 0}] = GR(-1);
    s.d[{0, 1}] = GR(1);
    sinv.d[{0, 1}] = GR(-1);
    sinv.d[{1, 0}] = GR(1);
    PMat table = PMat::from_const(kron(s, s)) * R * PMat::from_const(kron(sinv, sinv));
    auto found = paper_basis_match(R, table, 2);
    REQUIRE(found.has_value());
    // the found transform reproduces the table
    SpMat t(2, 2);
    for (int j = 0; j < 2; ++j) t.d[{found->perm[j], j}] = found->phase[j];
    SpMat tt = kron(t, t);
    SpMat tinv = t.transpose(); // signed permutations: inverse = conjugate transpose
    for (auto& [k, v] : tinv.d) v = GR(v.re, -v.im);
    CHECK(PMat::from_const(tt) * R * PMat::from_const(kron(tinv, tinv)) == table);
}

TEST_CASE("RTT zero patterns for the so(4) parts") {
    CliffordRep rep = build_gammas(4);
    auto parts = spinor_R(rep);
    // minus part: generators split into the classes {1,4} and {2,3} (1-based)
    std::set<std::pair<int, int>> to41;
    std::vector<int> cls{0, 1, 1, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (cls[i] != cls[j]) to41.insert({i, j});
    CHECK(rtt_pattern(parts[0].r, 4) == to41);
    // plus part: everything off-diagonal is forced to vanish
    std::set<std::pair<int, int>> diag_only;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) diag_only.insert({i, j});
    CHECK(rtt_pattern(parts[1].r, 4) == diag_only);
}
