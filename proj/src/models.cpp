#include "kronx/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace kronx {

NLevelHamiltonian::NLevelHamiltonian(XSum<ComplexFloat> h, double tol) : h_(std::move(h)) {
    if (max_abs_diff(h_, adjoint(h_)) > tol) throw DomainError("NLevelHamiltonian: matrix is not Hermitian");
}

XSum<ComplexFloat> givens_unitary(int n, int k, int m, double absalpha, double mu) {
    if (k < 1 || m > n || k >= m) throw IndexError("givens_unitary: need 1 <= k < m <= n");
    XSum<ComplexFloat> u = identity<ComplexFloat>(n);
    const double c = std::cos(absalpha), s = std::sin(absalpha);
    u.set(k, k, c);
    u.set(m, m, c);
    u.set(k, m, std::polar(s, mu));
    u.set(m, k, -std::polar(s, -mu));
    return u;
}

namespace {

using Dense = std::vector<ComplexFloat>;

struct Angle {
    double theta = 0.0, mu = 0.0;
    bool rotate = false;
};

Angle choose_angle(double a, double b, ComplexFloat v) {
    Angle an;
    const double av = std::abs(v);
    if (av == 0.0) return an;
    an.rotate = true;
    const double phi = std::arg(v);
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) <= 1e-15 * scale) {
        an.theta = std::numbers::pi / 4;
        an.mu = phi > 0.0 ? phi : phi + std::numbers::pi;
    } else if (a > b) {
        an.theta = 0.5 * std::atan2(2.0 * av, a - b);
        an.mu = phi;
    } else {
        an.theta = 0.5 * std::atan2(2.0 * av, b - a);
        an.mu = phi + std::numbers::pi;
    }
    return an;
}

// H <- U H U^dagger in the (k, m) plane (0-based), W <- U W
void rotate_dense(Dense& h, Dense* w, int n, int k, int m, const Angle& an) {
    const double c = std::cos(an.theta), s = std::sin(an.theta);
    const ComplexFloat e = std::polar(1.0, an.mu);
    auto at = [n](Dense& d, int i, int j) -> ComplexFloat& { return d[static_cast<std::size_t>(i) * n + j]; };
    auto rows = [&](Dense& d) {
        for (int j = 0; j < n; ++j) {
            const ComplexFloat xk = at(d, k, j), xm = at(d, m, j);
            at(d, k, j) = c * xk + e * s * xm;
            at(d, m, j) = -std::conj(e) * s * xk + c * xm;
        }
    };
    rows(h);
    for (int i = 0; i < n; ++i) {
        const ComplexFloat xk = at(h, i, k), xm = at(h, i, m);
        at(h, i, k) = c * xk + std::conj(e) * s * xm;
        at(h, i, m) = -e * s * xk + c * xm;
    }
    at(h, k, m) = 0.0;
    at(h, m, k) = 0.0;
    at(h, k, k) = at(h, k, k).real();
    at(h, m, m) = at(h, m, m).real();
    if (w) rows(*w);
}

Dense dense_of(const XSum<ComplexFloat>& a) {
    const int n = a.order();
    Dense d(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [key, x] : a.terms()) d[static_cast<std::size_t>(key.first - 1) * n + (key.second - 1)] = x;
    return d;
}

XSum<ComplexFloat> xsum_of(const Dense& d, int n) {
    XSum<ComplexFloat> a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.add_term(i + 1, j + 1, d[static_cast<std::size_t>(i) * n + j]);
    return a;
}

double off_diagonal_norm(const Dense& h, int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m = std::max(m, std::abs(h[static_cast<std::size_t>(i) * n + j]));
    return m;
}

}  // namespace

RotationStep rotate_step(const XSum<ComplexFloat>& h, int k, int m) {
    const int n = h.order();
    if (k < 1 || m > n || k >= m) throw IndexError("rotate_step: need 1 <= k < m <= n");
    const Angle an = choose_angle(h.coef(k, k).real(), h.coef(m, m).real(), h.coef(k, m));
    RotationStep st;
    if (!an.rotate) {
        st.h = h;
        st.u = identity<ComplexFloat>(n);
        return st;
    }
    Dense d = dense_of(h);
    rotate_dense(d, nullptr, n, k - 1, m - 1, an);
    st.h = xsum_of(d, n);
    st.u = givens_unitary(n, k, m, an.theta, an.mu);
    st.absalpha = an.theta;
    st.mu = an.mu;
    return st;
}

Diagonalization diagonalize(const XSum<ComplexFloat>& hin, double tol, int max_sweeps, bool single_sweep) {
    NLevelHamiltonian check(hin, std::max(tol, 1e-12));
    const int n = hin.order();
    Dense h = dense_of(hin);
    Dense w(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 1.0;

    Diagonalization out;
    out.off_norm = off_diagonal_norm(h, n);
    while (out.off_norm >= tol) {
        if (out.sweeps >= max_sweeps)
            throw ConvergenceError("diagonalize: no convergence after " + std::to_string(max_sweeps) + " sweeps",
                                   out.off_norm);
        for (int k = 0; k < n; ++k)
            for (int m = k + 1; m < n; ++m) {
                const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
                const Angle an = choose_angle(h[idx(k, k)].real(), h[idx(m, m)].real(), h[idx(k, m)]);
                if (an.rotate) rotate_dense(h, &w, n, k, m, an);
            }
        ++out.sweeps;
        out.off_norm = off_diagonal_norm(h, n);
        if (single_sweep) break;
    }

    out.diagonal.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.diagonal[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i) * n + i].real();
    out.order.resize(static_cast<std::size_t>(n));
    std::iota(out.order.begin(), out.order.end(), 1);
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        return out.diagonal[static_cast<std::size_t>(a - 1)] < out.diagonal[static_cast<std::size_t>(b - 1)];
    });
    for (int i : out.order) out.eigenvalues.push_back(out.diagonal[static_cast<std::size_t>(i - 1)]);
    out.u = adjoint(xsum_of(w, n));
    return out;
}

// ---- spin chains -----------------------------------------------------------

XSum<Rational> pauli_x() {
    XSum<Rational> s(2);
    s.add_term(1, 2, 1);
    s.add_term(2, 1, 1);
    return s;
}

XSum<ComplexFloat> pauli_y() {
    XSum<ComplexFloat> s(2);
    s.add_term(1, 2, {0.0, -1.0});
    s.add_term(2, 1, {0.0, 1.0});
    return s;
}

XSum<Rational> pauli_z() {
    XSum<Rational> s(2);
    s.add_term(1, 1, 1);
    s.add_term(2, 2, -1);
    return s;
}

namespace {

// sigma_y = i tau, tau = [[0,-1],[1,0]], so sy_a sy_b = -tau_a tau_b stays real
XSum<Rational> tau_y() {
    XSum<Rational> s(2);
    s.add_term(1, 2, -1);
    s.add_term(2, 1, 1);
    return s;
}

}  // namespace

XSum<Rational> heisenberg_h(const SpinChainParams& p, bool periodic) {
    const int n = p.sites;
    if (n < 2) throw DomainError("heisenberg_h: need at least 2 sites");
    if (n > 12) throw ResourceError("heisenberg_h: 2^sites exceeds the supported size");
    const long dim = 1L << n;
    XSum<Rational> h(static_cast<int>(dim));
    const auto sx = pauli_x(), ty = tau_y(), sz = pauli_z();
    const int bonds = periodic ? n : n - 1;
    for (int j = 1; j <= bonds; ++j) {
        const int a = j, b = j % n + 1;
        auto pair = [&](const XSum<Rational>& op) { return mul(site_embed(op, a, n), site_embed(op, b, n)); };
        XSum<Rational> bond = add(scale(p.jx, pair(sx)), scale(Rational(-p.jy), pair(ty)));
        bond = add(bond, scale(p.jz, pair(sz)));
        h = add(h, bond);
    }
    return scale(Rational(-1, 2), h);
}

XSum<Rational> heisenberg_two_site_printed(const Rational& J) {
    XSum<Rational> h(4);
    const Rational q = -J / 4;
    h.add_term(1, 1, q);
    h.add_term(2, 2, -q);
    h.add_term(3, 3, -q);
    h.add_term(4, 4, q);
    h.add_term(2, 3, -2 * J);
    h.add_term(3, 2, -2 * J);
    return h;
}

XSum<Rational> total_sz(int sites) {
    XSum<Rational> s(1 << sites);
    for (int j = 1; j <= sites; ++j) s = add(s, site_embed(pauli_z(), j, sites));
    return s;
}

// ---- Hubbard ---------------------------------------------------------------

HubbardParams HubbardParams::chain(int sites, const Rational& eps, const Rational& mu, const Rational& U,
                                   const Rational& hop) {
    HubbardParams p;
    p.sites = sites;
    p.e0 = 0;
    p.e1 = eps - mu;
    p.e2 = 2 * p.e1 + U;
    p.t.assign(static_cast<std::size_t>(sites), std::vector<Rational>(static_cast<std::size_t>(sites), Rational(0)));
    for (int i = 0; i + 1 < sites; ++i) {
        p.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = hop;
        p.t[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = hop;
    }
    return p;
}

HubbardSiteOps hubbard_site_ops() {
    // basis index: 0 -> 1, + -> 2, - -> 3, 2 -> 4
    HubbardSiteOps o{XSum<Rational>(4), XSum<Rational>(4), XSum<Rational>(4), XSum<Rational>(4)};
    o.c_up_dag.add_term(2, 1, 1);   // X^{+,0}
    o.c_up_dag.add_term(4, 3, 1);   // X^{2,-}
    o.c_dn_dag.add_term(3, 1, 1);   // X^{-,0}
    o.c_dn_dag.add_term(4, 2, -1);  // -X^{2,+}
    o.c_up = transpose(o.c_up_dag);
    o.c_dn = transpose(o.c_dn_dag);
    return o;
}

XSum<Rational> hubbard_h(const HubbardParams& p, int max_sites) {
    const int N = p.sites;
    if (N < 1) throw DomainError("hubbard_h: need at least one site");
    if (N > max_sites) throw ResourceError("hubbard_h: sites above cap " + std::to_string(max_sites));
    if (static_cast<int>(p.t.size()) != N) throw DimensionError("hubbard_h: hopping matrix size mismatch");
    for (int i = 0; i < N; ++i) {
        if (static_cast<int>(p.t[static_cast<std::size_t>(i)].size()) != N)
            throw DimensionError("hubbard_h: hopping matrix size mismatch");
        for (int j = 0; j < N; ++j)
            if (p.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                p.t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw DomainError("hubbard_h: hopping matrix must be symmetric");
    }
    XSum<Rational> local(4);
    local.add_term(1, 1, p.e0);
    local.add_term(2, 2, p.e1);
    local.add_term(3, 3, p.e1);
    local.add_term(4, 4, p.e2);

    const auto ops = hubbard_site_ops();
    int dim = 1;
    for (int i = 0; i < N; ++i) dim *= 4;
    XSum<Rational> h(dim);
    for (int i = 1; i <= N; ++i) h = add(h, site_embed(local, i, N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const Rational& t = p.t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (t == 0) continue;
            const auto hop = add(mul(site_embed(ops.c_up_dag, i, N), site_embed(ops.c_up, j, N)),
                                 mul(site_embed(ops.c_dn_dag, i, N), site_embed(ops.c_dn, j, N)));
            h = add(h, scale(t, hop));
        }
    return h;
}

// ---- Jaynes-Cummings ---------------------------------------------------------

XSum<ComplexFloat> jc_hamiltonian(const JCConfig& cfg) {
    if (cfg.cutoff < 1) throw DomainError("jc: cutoff must be >= 1");
    const int f = cfg.cutoff + 1;
    XSum<ComplexFloat> a(f);
    for (int n = 1; n <= cfg.cutoff; ++n) a.add_term(n, n + 1, std::sqrt(static_cast<double>(n)));
    const auto sp = x_op<ComplexFloat>(2, 1, 2), sm = x_op<ComplexFloat>(2, 2, 1);
    return scale(ComplexFloat(cfg.gamma), add(kron(sp, a), kron(sm, adjoint(a))));
}

XSum<ComplexFloat> jc_evolution(const JCConfig& cfg, double t) {
    if (cfg.cutoff < 1) throw DomainError("jc: cutoff must be >= 1");
    XSum<ComplexFloat> u(cfg.dim());
    const double gt = cfg.gamma * t;
    for (int n = 0; n <= cfg.cutoff; ++n) {
        // N_1 = sqrt(n+1) on |e,n>, N_2 = sqrt(n) on |g,n>
        u.add_term(cfg.index(1, n), cfg.index(1, n), std::cos(gt * std::sqrt(n + 1.0)));
        u.add_term(cfg.index(2, n), cfg.index(2, n), std::cos(gt * std::sqrt(static_cast<double>(n))));
        if (n < cfg.cutoff) {
            const ComplexFloat off(0.0, -std::sin(gt * std::sqrt(n + 1.0)));
            u.add_term(cfg.index(1, n), cfg.index(2, n + 1), off);
            u.add_term(cfg.index(2, n + 1), cfg.index(1, n), off);
        }
    }
    return u;
}

XSum<ComplexFloat> jc_excitation_number(const JCConfig& cfg) {
    const int f = cfg.cutoff + 1;
    XSum<ComplexFloat> num(f);
    for (int n = 1; n <= cfg.cutoff; ++n) num.add_term(n + 1, n + 1, static_cast<double>(n));
    return add(kron(x_op<ComplexFloat>(2, 1, 1), identity<ComplexFloat>(f)), kron(identity<ComplexFloat>(2), num));
}

XSum<ComplexFloat> two_cavity_evolution(const JCConfig& c1, const JCConfig& c2, double t) {
    return kron(jc_evolution(c1, t), jc_evolution(c2, t));
}

}  // namespace kronx
