#pragma once
// Deterministic JSON (de)serialization for scalars, polynomials, matrices,
// identity reports, and the shipped entry-table fixtures.
#include "ybx/verifier.hpp"
#include "json.hpp"

namespace ybx {

using ordered_json = nlohmann::ordered_json;

ordered_json json_rat(const Rat& r);
Rat json_to_rat(const ordered_json& j);

ordered_json json_gr(const GR& v);
GR json_to_gr(const ordered_json& j);

// {"vars":["u"], "coeffs":[gr,...]} by ascending degree, no trailing zeros
ordered_json json_poly(const Poly& p);
Poly json_to_poly(const ordered_json& j);

// {"rows","cols","entries":[[i,j,poly],...]} sorted by (i,j)
ordered_json json_matrix(const PMat& m);
PMat json_to_matrix(const ordered_json& j);

ordered_json json_spmat(const SpMat& m); // constant-entry special case

ordered_json json_report(const IdentityReport& r);

struct Fixture {
    std::string name;       // file stem, e.g. "r611"
    std::string equation;   // equation tag the table reproduces
    std::string description;
    int n = 0;              // one-factor dimension; table acts on C^n (x) C^n
    PMat table;             // entries exactly as printed
    PMat corrected;         // table with any typo corrections applied
    std::vector<std::string> notes;
};

Fixture load_fixture(const std::string& path);

std::string json_dump(const ordered_json& j); // 2-space indent + newline
void write_json(const std::string& path, const ordered_json& j);

} // namespace ybx
