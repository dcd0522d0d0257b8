#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/json_io.hpp"

using namespace ybx;

TEST_CASE("scalar round trips") {
    for (Rat r : {Rat(0), Rat(7), Rat(-3, 8), Rat(123456789, 65537)})
        CHECK(json_to_rat(json_rat(r)) == r);
    for (GR v : {GR(1), GR(Rat(0), Rat(-1)), GR(Rat(2, 3), Rat(-5, 7))})
        CHECK(json_to_gr(json_gr(v)) == v);
}

TEST_CASE("polynomial round trip preserves normalization") {
    Poly p{GR(Rat(1, 2)), GR(0), GR(Rat(-3), Rat(4))};
    CHECK(peq(json_to_poly(json_poly(p)), p));
    CHECK(json_to_poly(json_poly(Poly{})).empty());
    // vars list is always present
    CHECK(json_poly(p).contains("vars"));
}

TEST_CASE("matrix round trip and sorted deterministic dumps") {
    PMat m(3, 3);
    m.d[{2, 0}] = Poly{GR(1), GR(2)};
    m.d[{0, 1}] = Poly{GR(Rat(-1, 3))};
    ordered_json j = json_matrix(m);
    CHECK(json_to_matrix(j) == m);
    // entries sorted by (row, col)
    CHECK(j["entries"][0][0] == 0);
    CHECK(j["entries"][0][1] == 1);
    CHECK(j["entries"][1][0] == 2);
    // byte-identical serialization on repeat
    CHECK(json_dump(j) == json_dump(json_matrix(m)));
    CHECK(json_dump(j).back() == '\n');
}

TEST_CASE("identity report serialization carries verdict and grid") {
    IdentityReport rep;
    rep.identity_name = "demo";
    rep.parameters["d"] = "4";
    rep.record(Rat(1), Rat(2), SpMat::identity(2), SpMat::identity(2).smul(GR(2)));
    ordered_json j = json_report(rep);
    CHECK(j["identity"] == "demo");
    CHECK(j["pass"] == false);
    CHECK(j.contains("grid_points"));
    CHECK(j.contains("first_violation"));
}

TEST_CASE("fixtures load with corrections applied where recorded") {
    Fixture ro4 = load_fixture("fixtures/ro4.json");
    CHECK(ro4.n == 4);
    CHECK(ro4.table.rows == 16);
    CHECK(ro4.table.d.size() == 12);
    CHECK(ro4.corrected == ro4.table); // no corrections for this table

    Fixture r621 = load_fixture("fixtures/r621.json");
    CHECK(r621.n == 8);
    int differing = 0;
    for (auto& [k, p] : r621.corrected.d)
        if (!peq(p, r621.table.at(k.first, k.second))) ++differing;
    CHECK(differing == 8);
    CHECK(!r621.notes.empty());
}

TEST_CASE("all shipped fixtures parse and are square tables") {
    for (const char* name : {"ro3", "ro4", "r411", "r611", "r621", "r44"}) {
        CAPTURE(name);
        Fixture f = load_fixture(std::string("fixtures/") + name + ".json");
        CHECK(f.n > 0);
        CHECK(f.table.rows == f.n * f.n);
        CHECK(f.table.cols == f.table.rows);
        CHECK(!f.table.d.empty());
        CHECK(!f.equation.empty());
    }
}
