// Command-line entry point: construction, verification, equivalence, chain
// commands, and the full-suite runner, all with deterministic JSON output.
#include "ybx/suite.hpp"
#include "CLI11.hpp"
#include <iostream>

using namespace ybx;

namespace {

struct Output {
    std::string json_path;
    bool quiet = false;

    void emit(const ordered_json& j) const {
        if (!json_path.empty()) write_json(json_path, j);
        else if (!quiet) std::cout << json_dump(j);
    }
};

Chirality parse_chirality(const std::string& s) {
    if (s == "plus") return Chirality::plus;
    if (s == "minus") return Chirality::minus;
    if (s == "full") return Chirality::full;
    throw CLI::ValidationError("--chirality", "expected plus|minus|full");
}

// rspec mini-format: fund-so-<n>, fund-sp-<n>, spin-so-<d>[-plus|-minus|-full],
// slform-<n> (u*I + P on C^n (x) C^n)
PMat parse_rspec(const std::string& spec, int& dim) {
    auto fail = [&]() -> PMat {
        throw CLI::ValidationError("rspec", "unrecognized R specification: " + spec);
    };
    auto starts = [&](const std::string& p) { return spec.rfind(p, 0) == 0; };
    if (starts("fund-so-") || starts("fund-sp-")) {
        int n = std::stoi(spec.substr(8));
        dim = n;
        return fundamental_R(spec[5] == 'o' ? 1 : -1, n).matrix;
    }
    if (starts("spin-so-")) {
        std::string rest = spec.substr(8);
        auto dash = rest.find('-');
        int d = std::stoi(rest.substr(0, dash));
        Chirality ch = Chirality::full;
        if (dash != std::string::npos) ch = parse_chirality(rest.substr(dash + 1));
        CliffordRep rep = build_gammas(d);
        dim = rep.spinor_dim();
        return spinor_R_object(rep, ch, false).matrix;
    }
    if (starts("slform-")) {
        int n = std::stoi(spec.substr(7));
        dim = n;
        return PMat::identity(n * n).pscale(pu()) + PMat::from_const(swap_op(n));
    }
    return fail();
}

ordered_json report_json(const IdentityReport& r) { return json_report(r); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spinorial and fundamental R-matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);
    Output out;
    app.add_option("--json", out.json_path, "write JSON output to this path");
    app.add_flag("--quiet", out.quiet, "suppress stdout output");

    int exit_code = 0;

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "gamma matrices and chirality");
    int gamma_d = 4;
    gamma_cmd->add_option("--d", gamma_d, "space dimension")->required();
    gamma_cmd->callback([&] {
        CliffordRep rep = build_gammas(gamma_d);
        ordered_json j;
        j["d"] = gamma_d;
        j["spinor_dim"] = rep.spinor_dim();
        ordered_json gs = ordered_json::array();
        for (const SpMat& g : rep.gammas) gs.push_back(json_spmat(g));
        j["gammas"] = gs;
        if (rep.chir) j["chirality"] = json_spmat(*rep.chir);
        out.emit(j);
    });

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "invariant z, projectors, permutation");
    int inv_d = 4;
    std::string inv_emit = "z";
    inv_cmd->add_option("--d", inv_d, "space dimension")->required();
    inv_cmd->add_option("--emit", inv_emit, "z|projectors|permutation|tower")
        ->check(CLI::IsMember({"z", "projectors", "permutation", "tower"}));
    inv_cmd->callback([&] {
        CliffordRep rep = build_gammas(inv_d);
        ordered_json j;
        j["d"] = inv_d;
        if (inv_emit == "z") {
            j["z"] = json_spmat(build_z(rep));
        } else if (inv_emit == "projectors") {
            SpMat z = build_z(rep);
            ordered_json ps = ordered_json::object();
            for (auto& [root, P] : eigen_projectors(rep, z)) ps[rat_str(root)] = json_spmat(P);
            j["projectors"] = ps;
        } else if (inv_emit == "permutation") {
            j["permutation"] = json_spmat(permutation_operator(rep, PermMethod::spectral));
        } else {
            ordered_json ts = ordered_json::array();
            for (const SpMat& t : invariant_tower(rep, inv_d + 1)) ts.push_back(json_spmat(t));
            j["tower"] = ts;
        }
        out.emit(j);
    });

    // rmatrix
    auto* rm_cmd = app.add_subcommand("rmatrix", "construct an R-matrix");
    std::string rm_sym = "so", rm_pair = "vv", rm_chir = "full";
    int rm_d = 4;
    bool rm_checked = false;
    rm_cmd->add_option("--symmetry", rm_sym)->check(CLI::IsMember({"so", "sp"}));
    rm_cmd->add_option("--d", rm_d, "dimension")->required();
    rm_cmd->add_option("--pair", rm_pair)->check(CLI::IsMember({"vv", "ss"}));
    rm_cmd->add_option("--chirality", rm_chir)->check(CLI::IsMember({"plus", "minus", "full"}));
    rm_cmd->add_flag("--checked", rm_checked, "emit the check form");
    rm_cmd->callback([&] {
        RObject ro;
        if (rm_pair == "vv") {
            ro = fundamental_R(rm_sym == "so" ? 1 : -1, rm_d);
        } else {
            if (rm_sym != "so") throw CLI::ValidationError("--pair", "ss requires --symmetry so");
            ro = spinor_R_object(build_gammas(rm_d), parse_chirality(rm_chir), rm_checked);
        }
        ordered_json j;
        j["symmetry"] = rm_sym;
        j["n"] = ro.n;
        j["pair"] = rm_pair;
        j["checked"] = ro.checked;
        ordered_json roots = ordered_json::array();
        for (const Rat& z : ro.roots) roots.push_back(rat_str(z));
        j["roots"] = roots;
        j["matrix"] = json_matrix(ro.matrix);
        out.emit(j);
    });

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "verify an algebraic identity");
    std::string ver_what, ver_chir = "full", ver_layout = "vector";
    int ver_d = 4, ver_N = 1;
    ver_cmd->add_option("what", ver_what, "rrr|rll|inversion|llr|fusion")
        ->required()
        ->check(CLI::IsMember({"rrr", "rll", "inversion", "llr", "fusion"}));
    ver_cmd->add_option("--d", ver_d)->required();
    ver_cmd->add_option("--chirality", ver_chir)->check(CLI::IsMember({"plus", "minus", "full"}));
    ver_cmd->add_option("--layout", ver_layout)
        ->check(CLI::IsMember({"vector", "spinor", "spinor-check"}));
    ver_cmd->add_option("--N", ver_N, "number of chain sites");
    ver_cmd->callback([&] {
        CliffordRep rep = build_gammas(ver_d);
        IdentityReport report;
        if (ver_what == "rrr") {
            RObject ro = spinor_R_object(rep, parse_chirality(ver_chir), false);
            report = check_rrr(ro, rep.spinor_dim());
        } else if (ver_what == "rll") {
            if (ver_layout == "vector") {
                report = check_rll(fundamental_R(1, ver_d).matrix, rep, RllLayout::vector_aux);
            } else {
                bool check_form = ver_layout == "spinor-check";
                RObject ro = spinor_R_object(rep, parse_chirality(ver_chir), check_form);
                report = check_rll(ro.matrix, rep,
                                   check_form ? RllLayout::spinor_aux_check
                                              : RllLayout::spinor_aux);
            }
        } else if (ver_what == "inversion") {
            auto beta = solve_inversion_beta(rep);
            if (!beta) throw std::runtime_error("no rational inversion point found");
            report = check_inversion(rep, *beta);
        } else if (ver_what == "llr") {
            report = check_llr_fusion(rep, Rat(ver_d - 2, 2));
        } else {
            report = check_monodromy_fusion(rep, ver_N, Rat(ver_d - 2, 2));
        }
        out.emit(report_json(report));
        if (!report.pass) exit_code = 1;
    });

    // equiv
    auto* eq_cmd = app.add_subcommand("equiv", "coincidences and structure analysis");
    std::string eq_left, eq_right, eq_reparam = "1,0";
    eq_cmd->add_option("--left", eq_left, "left R specification");
    eq_cmd->add_option("--right", eq_right, "right R specification");
    eq_cmd->add_option("--reparam", eq_reparam, "alpha,gamma for u -> alpha*u+gamma");
    auto* eq_blocks = eq_cmd->add_subcommand("blocks", "block decomposition under V");
    int eqb_d = 4;
    std::string eqb_chir = "minus";
    eq_blocks->add_option("--d", eqb_d)->required();
    eq_blocks->add_option("--chirality", eqb_chir)
        ->check(CLI::IsMember({"plus", "minus", "full"}));
    auto* eq_rtt = eq_cmd->add_subcommand("rtt-pattern", "forced zero pattern of T");
    int eqr_d = 4;
    std::string eqr_chir = "minus";
    eq_rtt->add_option("--d", eqr_d)->required();
    eq_rtt->add_option("--chirality", eqr_chir)
        ->check(CLI::IsMember({"plus", "minus", "full"}));
    eq_cmd->callback([&] {
        if (eq_blocks->parsed()) {
            RObject ro = spinor_R_object(build_gammas(eqb_d), parse_chirality(eqb_chir), false);
            std::optional<SpMat> v;
            if (eqb_d == 4) v = similarity_V4();
            if (eqb_d == 6) v = similarity_V6();
            auto bd = block_decompose(ro.matrix, v);
            ordered_json j;
            j["d"] = eqb_d;
            j["chirality"] = eqb_chir;
            ordered_json bs = ordered_json::array();
            for (auto& [idx, mat] : bd.blocks) {
                ordered_json b;
                b["indices"] = idx;
                b["matrix"] = json_matrix(mat);
                bs.push_back(b);
            }
            j["blocks"] = bs;
            out.emit(j);
            return;
        }
        if (eq_rtt->parsed()) {
            CliffordRep rep = build_gammas(eqr_d);
            RObject ro = spinor_R_object(rep, parse_chirality(eqr_chir), false);
            auto zeros = rtt_pattern(ro.matrix, rep.spinor_dim());
            ordered_json j;
            j["d"] = eqr_d;
            j["chirality"] = eqr_chir;
            ordered_json zs = ordered_json::array();
            for (auto& [i, jj] : zeros) zs.push_back(ordered_json::array({i, jj}));
            j["forced_zero"] = zs;
            out.emit(j);
            return;
        }
        if (eq_left.empty() || eq_right.empty())
            throw CLI::ValidationError("equiv", "--left and --right are required");
        int nl = 0, nr = 0;
        PMat RA = parse_rspec(eq_left, nl);
        PMat RB = parse_rspec(eq_right, nr);
        auto comma = eq_reparam.find(',');
        Rat alpha = rat_parse(eq_reparam.substr(0, comma));
        Rat gamma0 = comma == std::string::npos ? Rat(0) : rat_parse(eq_reparam.substr(comma + 1));
        int deg = std::max(RA.degree(), RB.degree());
        std::vector<Rat> samples;
        for (int i = 0; i <= deg + 2; ++i) samples.push_back(Rat(i));
        auto basis = intertwiner_space(RA, RB, alpha, gamma0, samples,
                                       [](const Rat&) { return GR(1); });
        ordered_json j;
        j["left"] = eq_left;
        j["right"] = eq_right;
        j["alpha"] = rat_str(alpha);
        j["gamma"] = rat_str(gamma0);
        j["dimension"] = basis.size();
        ordered_json gs = ordered_json::array();
        bool any_kron = false;
        for (const SpMat& g : basis) {
            ordered_json e;
            e["matrix"] = json_spmat(g);
            e["invertible"] = rank_elim(g) == g.rows;
            if (nl == nr) {
                auto kf = kron_factorize(g, nl);
                if (kf) {
                    any_kron = true;
                    e["kron_symmetric"] = kf->symmetric;
                    e["g"] = json_spmat(kf->g);
                    e["h"] = json_spmat(kf->h);
                }
            }
            gs.push_back(e);
        }
        j["intertwiners"] = gs;
        out.emit(j);
        if (basis.empty() || !any_kron) exit_code = 1;
    });

    // chain
    auto* ch_cmd = app.add_subcommand("chain", "monodromy and transfer matrices");
    std::string ch_what, ch_aux = "vector", ch_chir = "minus";
    int ch_d = 4, ch_N = 1;
    ch_cmd->add_option("what", ch_what, "monodromy|transfer|commute|fusion")
        ->required()
        ->check(CLI::IsMember({"monodromy", "transfer", "commute", "fusion"}));
    ch_cmd->add_option("--d", ch_d)->required();
    ch_cmd->add_option("--N", ch_N, "number of sites");
    ch_cmd->add_option("--aux", ch_aux)->check(CLI::IsMember({"vector", "spinor", "spinor-r"}));
    ch_cmd->add_option("--chirality", ch_chir)->check(CLI::IsMember({"plus", "minus", "full"}));
    ch_cmd->callback([&] {
        CliffordRep rep = build_gammas(ch_d);
        auto make = [&]() {
            if (ch_aux == "vector") return vector_monodromy(ch_d, ch_N);
            if (ch_aux == "spinor") return spinor_monodromy_L(rep, ch_N);
            return spinor_monodromy_R(rep, parse_chirality(ch_chir), ch_N);
        };
        ordered_json j;
        j["d"] = ch_d;
        j["N"] = ch_N;
        j["aux"] = ch_aux;
        if (ch_what == "monodromy") {
            j["matrix"] = json_matrix(make().matrix);
        } else if (ch_what == "transfer") {
            j["matrix"] = json_matrix(transfer(make()));
        } else if (ch_what == "commute") {
            IdentityReport rep2 = check_commuting_family(transfer(make()));
            j["report"] = report_json(rep2);
            if (!rep2.pass) exit_code = 1;
        } else {
            IdentityReport rep2 = fusion_trace_identity(rep, ch_N);
            j["report"] = report_json(rep2);
            if (!rep2.pass) exit_code = 1;
        }
        out.emit(j);
    });

    // suite
    auto* su_cmd = app.add_subcommand("suite", "run the full verification suite");
    SuiteConfig cfg;
    su_cmd->add_option("--dims", cfg.dims, "dimensions to cover");
    su_cmd->add_flag("--include-so8-rrr", cfg.include_so8_rrr,
                     "include the so(8) triple-product Yang-Baxter check");
    su_cmd->add_option("--grid-scale", cfg.grid_scale, "grid multiplier")
        ->check(CLI::PositiveNumber);
    su_cmd->add_option("--output-dir", cfg.output_dir, "write per-check reports here");
    su_cmd->add_option("--fixture-dir", cfg.fixture_dir, "entry-table fixture directory");
    su_cmd->callback([&] {
        auto results = run_suite(cfg);
        out.emit(suite_json(results));
        bool all = true;
        for (const auto& r : results) {
            all = all && r.pass;
            if (!out.quiet)
                std::cerr << "criterion " << r.criterion << " (" << r.name
                          << "): " << (r.pass ? "PASS" : "FAIL")
                          << (r.pass || r.detail.empty() ? "" : " [" + r.detail + "]") << "\n";
        }
        if (!all) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
