#include "ybx/chain.hpp"
#include "ybx/embed.hpp"

namespace ybx {

namespace {

void guard(int d, int N) {
    if (d > 6 || N > 3 || N < 1)
        throw std::invalid_argument("chain: resource guard (d <= 6, 1 <= N <= 3)");
}

} // namespace

Monodromy vector_monodromy(int d, int N) {
    guard(d, N);
    RObject R = fundamental_R(1, d);
    Monodromy m;
    m.aux = AuxKind::vector;
    m.d = d;
    m.N = N;
    m.aux_dim = d;
    m.site_dim = d;
    long full = 1;
    for (int j = 0; j < N; ++j) full *= d;
    m.matrix = PMat::identity(static_cast<int>(d * full));
    for (int i = 0; i < N; ++i)
        m.matrix = m.matrix * embed_aux_site(R.matrix, d, d, N, i);
    return m;
}

Monodromy spinor_monodromy_L(const CliffordRep& rep, int N) {
    guard(rep.d, N);
    PMat L = L_operator_sv(rep);
    int ns = rep.spinor_dim(), d = rep.d;
    Monodromy m;
    m.aux = AuxKind::spinor_L;
    m.d = d;
    m.N = N;
    m.aux_dim = ns;
    m.site_dim = d;
    long full = 1;
    for (int j = 0; j < N; ++j) full *= d;
    m.matrix = PMat::identity(static_cast<int>(ns * full));
    for (int i = 0; i < N; ++i) m.matrix = m.matrix * embed_aux_site(L, ns, d, N, i);
    return m;
}

Monodromy spinor_monodromy_R(const CliffordRep& rep, Chirality chir, int N) {
    guard(rep.d, N);
    RObject R = spinor_R_object(rep, chir, false);
    int ns = rep.spinor_dim();
    Monodromy m;
    m.aux = AuxKind::spinor_R;
    m.d = rep.d;
    m.N = N;
    m.aux_dim = ns;
    m.site_dim = ns;
    m.chirality = chir;
    long full = 1;
    for (int j = 0; j < N; ++j) full *= ns;
    m.matrix = PMat::identity(static_cast<int>(ns * full));
    for (int i = 0; i < N; ++i) m.matrix = m.matrix * embed_aux_site(R.matrix, ns, ns, N, i);
    return m;
}

PMat transfer(const Monodromy& m) {
    long full = 1;
    for (int j = 0; j < m.N; ++j) full *= m.site_dim;
    return partial_trace(m.matrix, m.aux_dim, static_cast<int>(full), 1);
}

IdentityReport check_commuting_family(const PMat& t, int grid_scale) {
    IdentityReport report;
    report.identity_name = "commuting_family";
    int deg = std::max(t.degree(), 1);
    int pts = (deg + 1) * grid_scale;
    for (int i = 0; i < pts; ++i)
        for (int j = 0; j < pts; ++j) {
            Rat u(i), v(j);
            SpMat tu = t.eval(GR(u)), tv = t.eval(GR(v));
            report.record(u, v, tu * tv, tv * tu);
            if (!report.pass) return report;
        }
    return report;
}

IdentityReport fusion_trace_identity(const CliffordRep& rep, int N, bool wrong_shift) {
    if (rep.d != 4) throw std::invalid_argument("fusion_trace_identity: d must be 4");
    if (N > 2) throw std::invalid_argument("fusion_trace_identity: N must be <= 2");
    IdentityReport report;
    report.identity_name = "ttt3";
    report.parameters["N"] = std::to_string(N);
    int d = 4, ns = 4;
    long dN = 1;
    for (int j = 0; j < N; ++j) dN *= d;
    PMat L = L_operator_sv(rep);
    RObject Rvv = fundamental_R(1, d);
    Rat shift = wrong_shift ? Rat(3, 2) : Rat(1, 2);
    int sign = N % 2 ? -1 : 1;
    for (int i = 0; i < 2 * N + 2; ++i) {
        Rat u(i);
        SpMat Ts = SpMat::identity(static_cast<int>(ns * dN));
        SpMat Tb = SpMat::identity(static_cast<int>(ns * dN));
        SpMat TT = SpMat::identity(static_cast<int>(d * dN));
        for (int s = 0; s < N; ++s) {
            Ts = Ts * embed_aux_site(L.eval(GR(u + shift)), ns, d, N, s);
            Tb = embed_aux_site(L.eval(GR(-u - Rat(1, 2))), ns, d, N, s) * Tb;
            TT = TT * embed_aux_site(Rvv.matrix.eval(GR(u)), d, d, N, s);
        }
        SpMat tvv = partial_trace(TT, d, static_cast<int>(dN), 1);
        auto block = [&](const SpMat& big, int bi, int bj) {
            SpMat b(static_cast<int>(dN), static_cast<int>(dN));
            for (auto& [k, v] : big.d)
                if (k.first / dN == bi && k.second / dN == bj)
                    b.d[{static_cast<int>(k.first % dN), static_cast<int>(k.second % dN)}] = v;
            return b;
        };
        SpMat rhs = ((block(Ts, 0, 0) + block(Ts, 3, 3)) * (block(Tb, 1, 1) + block(Tb, 2, 2)))
                        .smul(GR(Rat(1, 2))) +
                    ((block(Ts, 1, 1) + block(Ts, 2, 2)) * (block(Tb, 0, 0) + block(Tb, 3, 3)))
                        .smul(GR(Rat(1, 2)));
        report.record(u, Rat(0), tvv.smul(GR(sign)), rhs);
        if (!report.pass) return report;
    }
    return report;
}

} // namespace ybx
