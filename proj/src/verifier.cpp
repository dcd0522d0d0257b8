#include "ybx/verifier.hpp"
#include "ybx/embed.hpp"

namespace ybx {

void IdentityReport::record(const Rat& u, const Rat& v, const SpMat& lhs, const SpMat& rhs) {
    grid.push_back({u, v});
    if (!pass) return;
    if (lhs == rhs) return;
    pass = false;
    SpMat diff = lhs - rhs;
    auto it = diff.d.begin();
    Violation vio;
    vio.u = u;
    vio.v = v;
    vio.row = it->first.first;
    vio.col = it->first.second;
    vio.lhs = lhs.at(vio.row, vio.col);
    vio.rhs = rhs.at(vio.row, vio.col);
    first_violation = vio;
}

SpMat emb12(const SpMat& r, int n) { return kron(r, SpMat::identity(n)); }
SpMat emb23(const SpMat& r, int n) { return kron(SpMat::identity(n), r); }
SpMat emb13(const SpMat& r, int n) {
    SpMat s = kron(SpMat::identity(n), swap_op(n));
    return s * kron(r, SpMat::identity(n)) * s;
}

namespace {

std::vector<Rat> grid_points(int count) {
    std::vector<Rat> pts;
    for (int i = 0; i < count; ++i) pts.push_back(Rat(i));
    return pts;
}

} // namespace

IdentityReport check_rrr(const std::function<SpMat(const Rat&)>& R12,
                         const std::function<SpMat(const Rat&)>& R13,
                         const std::function<SpMat(const Rat&)>& R23,
                         int n, int max_degree, int grid_scale) {
    IdentityReport rep;
    rep.identity_name = "rrr";
    int pts = (3 * max_degree + 1) * grid_scale;
    auto us = grid_points(pts);
    for (const Rat& u : us) {
        for (const Rat& v : us) {
            SpMat a = emb12(R12(u - v), n) * emb13(R13(u), n) * emb23(R23(v), n);
            SpMat b = emb23(R23(v), n) * emb13(R13(u), n) * emb12(R12(u - v), n);
            rep.record(u, v, a, b);
            if (!rep.pass) return rep;
        }
    }
    return rep;
}

IdentityReport check_rrr(const RObject& R, int factor_dim, int grid_scale) {
    auto f = [&R](const Rat& x) { return R.matrix.eval(GR(x)); };
    IdentityReport rep = check_rrr(f, f, f, factor_dim, std::max(R.degree(), 1), grid_scale);
    rep.parameters["n"] = std::to_string(R.n);
    return rep;
}

IdentityReport check_rll(const PMat& R, const CliffordRep& rep, RllLayout layout,
                         int grid_scale) {
    int d = rep.d, ns = rep.spinor_dim();
    IdentityReport report;
    PMat Lvs = L_operator(rep); // V (x) S
    int deg = std::max(R.degree(), 1);
    auto us = grid_points((deg + 2) * grid_scale);
    auto vs = grid_points(3 * grid_scale);
    if (layout == RllLayout::vector_aux) {
        report.identity_name = "rll2";
        // space V1 (x) V2 (x) S
        auto embedL = [&](const GR& x, int which) {
            SpMat L = Lvs.eval(x);
            SpMat out(d * d * ns, d * d * ns);
            for (auto& [k, v] : L.d) {
                int a = k.first / ns, al = k.first % ns;
                int b = k.second / ns, be = k.second % ns;
                for (int o = 0; o < d; ++o) {
                    int r = which == 1 ? (a * d + o) * ns + al : (o * d + a) * ns + al;
                    int c = which == 1 ? (b * d + o) * ns + be : (o * d + b) * ns + be;
                    out.d[{r, c}] = v;
                }
            }
            return out;
        };
        for (const Rat& u : us)
            for (const Rat& v : vs) {
                SpMat R12 = kron(R.eval(GR(u)), SpMat::identity(ns));
                SpMat L1 = embedL(GR(u + v), 1), L2 = embedL(GR(v), 2);
                report.record(u, v, R12 * L1 * L2, L2 * L1 * R12);
                if (!report.pass) return report;
            }
        return report;
    }
    // spinor-aux layouts on V (x) S1 (x) S2
    report.identity_name = layout == RllLayout::spinor_aux_check ? "rll3c" : "rll3";
    auto LS = [&](const GR& x, int which) {
        SpMat L = Lvs.eval(x);
        SpMat out(d * ns * ns, d * ns * ns);
        for (auto& [k, v] : L.d) {
            int a = k.first / ns, al = k.first % ns;
            int b = k.second / ns, be = k.second % ns;
            for (int o = 0; o < ns; ++o) {
                int r = which == 1 ? (a * ns + al) * ns + o : (a * ns + o) * ns + al;
                int c = which == 1 ? (b * ns + be) * ns + o : (b * ns + o) * ns + be;
                out.d[{r, c}] = v;
            }
        }
        return out;
    };
    for (const Rat& u : us)
        for (const Rat& v : vs) {
            SpMat Remb = kron(SpMat::identity(d), R.eval(GR(u)));
            SpMat L1uv = LS(GR(u + v), 1), L2v = LS(GR(v), 2);
            SpMat lhs = Remb * L1uv * L2v;
            SpMat rhs;
            if (layout == RllLayout::spinor_aux_check)
                rhs = LS(GR(v), 1) * LS(GR(u + v), 2) * Remb;
            else
                rhs = L2v * LS(GR(u + v), 1) * Remb;
            report.record(u, v, lhs, rhs);
            if (!report.pass) return report;
        }
    return report;
}

IdentityReport check_inversion(const CliffordRep& rep, const Rat& beta) {
    IdentityReport report;
    report.identity_name = "invL";
    report.parameters["beta"] = rat_str(beta);
    PMat L = L_operator_sv(rep);
    int n = L.rows;
    for (const Rat& u : grid_points(4)) {
        SpMat prod = L.eval(GR(u + beta + Rat(1, 2))) * L.eval(GR(-u - Rat(1, 2)));
        SpMat want = SpMat::identity(n).smul(GR(-u * (u + beta + 1)));
        report.record(u, Rat(0), prod, want);
        if (!report.pass) return report;
    }
    return report;
}

std::optional<Rat> solve_inversion_beta(const CliffordRep& rep) {
    // L(x) = x I + A; off-diagonal of L(u+b+1/2) L(-u-1/2) is b*A + A^2
    PMat L = L_operator_sv(rep);
    SpMat A(L.rows, L.cols);
    for (auto& [k, p] : L.d) {
        GR c = p.empty() ? GR(0) : p[0];
        if (k.first == k.second) continue; // diagonal constant part is u-only here
        if (!c.is_zero()) A.d[k] = c;
    }
    SpMat A2 = A * A;
    std::optional<GR> beta;
    for (auto& [k, v] : A.d) {
        if (k.first == k.second) continue;
        GR b = -A2.at(k.first, k.second) / v;
        if (!beta) beta = b;
        else if (!(*beta == b)) return std::nullopt;
    }
    for (auto& [k, v] : A2.d) {
        if (k.first == k.second) continue;
        if (A.at(k.first, k.second).is_zero()) return std::nullopt;
    }
    if (!beta || beta->im != 0) return std::nullopt;
    Rat b = beta->re;
    return check_inversion(rep, b).pass ? std::optional<Rat>(b) : std::nullopt;
}

IdentityReport check_llr_fusion(const CliffordRep& rep, const Rat& beta) {
    IdentityReport report;
    report.identity_name = "llr";
    int d = rep.d, ns = rep.spinor_dim();
    PMat L = L_operator_sv(rep);
    RObject Rvv = fundamental_R(1, d);
    for (const Rat& u : grid_points(4)) {
        SpMat Rm = Rvv.matrix.eval(GR(u));
        SpMat L1 = L.eval(GR(u + beta - Rat(1, 2)));
        SpMat L2 = L.eval(GR(-Rat(1, 2) - u));
        for (int b0 = 0; b0 < d; ++b0) {
            SpMat lhs = L1 * kron(rep.gammas[b0], SpMat::identity(d)) * L2;
            SpMat rhs(ns * d, ns * d);
            for (int a0 = 0; a0 < d; ++a0)
                for (int a1 = 0; a1 < d; ++a1)
                    for (int b1 = 0; b1 < d; ++b1) {
                        GR rv = Rm.at(a0 * d + a1, b0 * d + b1);
                        if (rv.is_zero()) continue;
                        for (auto& [k, gv] : rep.gammas[a0].d)
                            rhs.add_at(k.first * d + a1, k.second * d + b1, -(rv * gv));
                    }
            report.record(u, Rat(b0), lhs, rhs);
            if (!report.pass) return report;
        }
    }
    return report;
}

IdentityReport check_monodromy_fusion(const CliffordRep& rep, int N, const Rat& beta) {
    if (N > 3) throw std::invalid_argument("check_monodromy_fusion: N > 3");
    IdentityReport report;
    report.identity_name = "t2t";
    report.parameters["N"] = std::to_string(N);
    int d = rep.d, ns = rep.spinor_dim();
    long dN = 1;
    for (int j = 0; j < N; ++j) dN *= d;
    PMat L = L_operator_sv(rep);
    RObject Rvv = fundamental_R(1, d);
    int sign = N % 2 ? -1 : 1;
    for (const Rat& u : grid_points(2 * N + 2)) {
        SpMat T = SpMat::identity(static_cast<int>(ns * dN));
        SpMat Tt = SpMat::identity(static_cast<int>(ns * dN));
        for (int i = 0; i < N; ++i) {
            T = T * embed_aux_site(L.eval(GR(u + beta - Rat(1, 2))), ns, d, N, i);
            Tt = embed_aux_site(L.eval(GR(-u - Rat(1, 2))), ns, d, N, i) * Tt;
        }
        SpMat TT = SpMat::identity(static_cast<int>(d * dN));
        for (int i = 0; i < N; ++i)
            TT = TT * embed_aux_site(Rvv.matrix.eval(GR(u)), d, d, N, i);
        for (int b0 = 0; b0 < d; ++b0) {
            SpMat lhs = T * kron(rep.gammas[b0], SpMat::identity(static_cast<int>(dN))) * Tt;
            SpMat rhs(static_cast<int>(ns * dN), static_cast<int>(ns * dN));
            for (auto& [k, v] : TT.d) {
                int a0 = static_cast<int>(k.first / dN), rr = static_cast<int>(k.first % dN);
                int bb0 = static_cast<int>(k.second / dN), cc = static_cast<int>(k.second % dN);
                if (bb0 != b0) continue;
                for (auto& [gk, gv] : rep.gammas[a0].d)
                    rhs.add_at(static_cast<int>(gk.first * dN + rr),
                               static_cast<int>(gk.second * dN + cc), GR(sign) * v * gv);
            }
            report.record(u, Rat(b0), lhs, rhs);
            if (!report.pass) return report;
        }
        if (d == 4) {
            // trace form: sign * tr_aux TT equals the bilinear block combination
            // of the spinorial monodromy at u+1/2 and its reversed partner
            SpMat Ts = SpMat::identity(static_cast<int>(ns * dN));
            SpMat Tb = SpMat::identity(static_cast<int>(ns * dN));
            for (int i = 0; i < N; ++i) {
                Ts = Ts * embed_aux_site(L.eval(GR(u + Rat(1, 2))), ns, d, N, i);
                Tb = embed_aux_site(L.eval(GR(-u - Rat(1, 2))), ns, d, N, i) * Tb;
            }
            SpMat tvv = partial_trace(TT, d, static_cast<int>(dN), 1);
            auto block = [&](const SpMat& big, int i, int j) {
                SpMat b(static_cast<int>(dN), static_cast<int>(dN));
                for (auto& [k, v] : big.d) {
                    if (k.first / dN == i && k.second / dN == j)
                        b.d[{static_cast<int>(k.first % dN), static_cast<int>(k.second % dN)}] = v;
                }
                return b;
            };
            SpMat rhs3 = ((block(Ts, 0, 0) + block(Ts, 3, 3)) * (block(Tb, 1, 1) + block(Tb, 2, 2)))
                             .smul(GR(Rat(1, 2))) +
                         ((block(Ts, 1, 1) + block(Ts, 2, 2)) * (block(Tb, 0, 0) + block(Tb, 3, 3)))
                             .smul(GR(Rat(1, 2)));
            report.record(u, Rat(-1), tvv.smul(GR(sign)), rhs3);
            if (!report.pass) {
                report.identity_name = "ttt3";
                return report;
            }
            // full matrix form: (1/ns) tr_S(gamma^{a0} Ts gamma_{b0} Tb) = sign*TT block
            for (int a0 = 0; a0 < d; ++a0)
                for (int b0 = 0; b0 < d; ++b0) {
                    SpMat x = kron(rep.gammas[a0], SpMat::identity(static_cast<int>(dN))) * Ts *
                              kron(rep.gammas[b0], SpMat::identity(static_cast<int>(dN))) * Tb;
                    SpMat got = partial_trace(x, ns, static_cast<int>(dN), 1)
                                    .smul(GR(Rat(1, ns)));
                    SpMat want(static_cast<int>(dN), static_cast<int>(dN));
                    for (auto& [k, v] : TT.d)
                        if (k.first / dN == a0 && k.second / dN == b0)
                            want.d[{static_cast<int>(k.first % dN),
                                    static_cast<int>(k.second % dN)}] = GR(sign) * v;
                    report.record(u, Rat(a0 * d + b0), got, want);
                    if (!report.pass) {
                        report.identity_name = "ttt4";
                        return report;
                    }
                }
        }
    }
    return report;
}

} // namespace ybx
