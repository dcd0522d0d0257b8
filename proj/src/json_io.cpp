#include "ybx/json_io.hpp"
#include <fstream>

namespace ybx {

ordered_json json_rat(const Rat& r) { return rat_str(r); }

Rat json_to_rat(const ordered_json& j) { return rat_parse(j.get<std::string>()); }

ordered_json json_gr(const GR& v) {
    ordered_json j;
    j["re"] = rat_str(v.re);
    j["im"] = rat_str(v.im);
    return j;
}

GR json_to_gr(const ordered_json& j) {
    return GR(rat_parse(j.at("re").get<std::string>()),
              rat_parse(j.at("im").get<std::string>()));
}

ordered_json json_poly(const Poly& p) {
    ordered_json j;
    j["vars"] = ordered_json::array({"u"});
    ordered_json cs = ordered_json::array();
    for (const GR& c : p) cs.push_back(json_gr(c));
    j["coeffs"] = cs;
    return j;
}

Poly json_to_poly(const ordered_json& j) {
    Poly p;
    for (const auto& c : j.at("coeffs")) p.push_back(json_to_gr(c));
    ptrim(p);
    return p;
}

ordered_json json_matrix(const PMat& m) {
    ordered_json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    ordered_json es = ordered_json::array();
    for (const auto& [k, p] : m.d) // std::map iterates sorted by (i,j)
        es.push_back(ordered_json::array({k.first, k.second, json_poly(p)}));
    j["entries"] = es;
    return j;
}

PMat json_to_matrix(const ordered_json& j) {
    PMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries")) {
        Poly p = json_to_poly(e.at(2));
        if (!p.empty()) m.d[{e.at(0).get<int>(), e.at(1).get<int>()}] = p;
    }
    return m;
}

ordered_json json_spmat(const SpMat& m) { return json_matrix(PMat::from_const(m)); }

ordered_json json_report(const IdentityReport& r) {
    ordered_json j;
    j["identity"] = r.identity_name;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["grid_points"] = r.grid.size();
    j["pass"] = r.pass;
    if (r.first_violation) {
        const auto& v = *r.first_violation;
        ordered_json fv;
        fv["u"] = rat_str(v.u);
        fv["v"] = rat_str(v.v);
        fv["row"] = v.row;
        fv["col"] = v.col;
        fv["lhs"] = json_gr(v.lhs);
        fv["rhs"] = json_gr(v.rhs);
        j["first_violation"] = fv;
    }
    return j;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    ordered_json j = ordered_json::parse(in);
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.equation = j.at("equation").get<std::string>();
    f.description = j.at("description").get<std::string>();
    f.n = j.at("n").get<int>();
    f.table = json_to_matrix(j.at("table"));
    f.corrected = f.table;
    if (j.contains("corrected_entries"))
        for (const auto& e : j.at("corrected_entries")) {
            Poly p = json_to_poly(e.at(2));
            std::pair<int, int> k{e.at(0).get<int>(), e.at(1).get<int>()};
            if (p.empty()) f.corrected.d.erase(k);
            else f.corrected.d[k] = p;
        }
    if (j.contains("notes"))
        for (const auto& s : j.at("notes")) f.notes.push_back(s.get<std::string>());
    return f;
}

std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << json_dump(j);
}

} // namespace ybx
