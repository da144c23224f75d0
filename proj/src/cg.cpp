#include "kronx/cg.hpp"

#include <cmath>
#include <cstdlib>

namespace kronx {

namespace {

Rational fact(long n) { return Rational(factorial(n)); }

void check_twoj(int twoJ1, int twoJ2) {
    if (twoJ1 < 0 || twoJ2 < 0) throw DomainError("twoJ must be nonnegative");
    if (twoJ1 > kMaxTwoJ || twoJ2 > kMaxTwoJ)
        throw ResourceError("twoJ above the supported cap of " + std::to_string(kMaxTwoJ));
}

SqrtRational signed_root(int sign, const Rational& rad) {
    if (sgn(rad) < 0) throw DomainError("internal: negative radicand in CG closed form");
    return sgn(rad) == 0 ? SqrtRational() : SqrtRational(sign, rad);
}

}  // namespace

int cg_row(const CouplingLayout& L, int alpha, int beta) { return alpha * L.n2 + beta; }
int cg_col(const CouplingLayout& L, int k, int r) { return L.z(k - 1) + r; }

SqrtRational s_first_block(int twoJ1, int twoJ2, int alpha, int beta) {
    check_twoj(twoJ1, twoJ2);
    const int r = alpha + beta;
    if (alpha < 0 || alpha > twoJ1 || beta < 1 || beta > twoJ2 + 1) return {};
    if (r < 1 || r > twoJ1 + twoJ2 + 1) return {};
    const Rational rad(binomial(twoJ1, alpha) * binomial(twoJ2, beta - 1), binomial(twoJ1 + twoJ2, r - 1));
    return signed_root(1, rad);
}

SqrtRational s_rone(int twoJ1, int twoJ2, int k, int alpha, int beta) {
    check_twoj(twoJ1, twoJ2);
    const int A = twoJ1, B = twoJ2;
    const int n0 = std::min(A, B) + 1;
    if (k < 1 || k > n0 || alpha < 0 || alpha > k - 1 || alpha > A) return {};
    if (beta != k - alpha || beta < 1 || beta > B + 1) return {};
    // (2j1)_falling(k-1) / (2j1)_falling(alpha) = (2j1-alpha)_falling(k-1-alpha)
    const Rational rad = rising(beta, alpha) / fact(alpha) * falling(B - beta + 1, alpha) *
                         falling(A - alpha, k - 1 - alpha) / falling(A + B - k + 2, k - 1);
    return signed_root(alpha % 2 ? -1 : 1, rad);
}

std::pair<Rational, Rational> s_general_parts(int twoJ1, int twoJ2, int k, int r, int alpha, int beta) {
    const int A = twoJ1, B = twoJ2;
    const int rho = r - 1;
    const long d = beta - rho, e = B - beta + rho + 1;
    Rational F;
    if (d >= 1) {
        // lower Pochhammers are all nonzero: prefactor times the terminating series
        F = rising(d, rho) * falling(e, rho) * hyp3f2_terminating(rho, alpha, A - alpha + 1, d, e);
    } else {
        F = hyp3f2_scaled(rho, alpha, A - alpha + 1, d, e);
    }
    const Rational theta2 = fact(k - 1) * fact(A - alpha) * fact(B - beta + 1) /
                            (fact(alpha) * fact(beta - 1) * fact(A - k + 1) * fact(B - k + 1) *
                             falling(A + B - k + 2, k - 1) * fact(rho) * falling(A + B - 2 * k + 2, rho));
    return {F, theta2};
}

SqrtRational s_general(int twoJ1, int twoJ2, int k, int r, int alpha, int beta) {
    check_twoj(twoJ1, twoJ2);
    const auto L = layout(twoJ1, twoJ2);
    if (k < 1 || k > L.n0 || r < 1 || r > L.d(k)) return {};
    if (alpha < 0 || alpha > twoJ1 || beta < 1 || beta > L.n2) return {};
    if (k + r != alpha + beta + 1) return {};
    auto [F, theta2] = s_general_parts(twoJ1, twoJ2, k, r, alpha, beta);
    const int sign = sgn(F) * (alpha % 2 ? -1 : 1);
    return signed_root(sign, F * F * theta2);
}

IntertwiningReport verify_intertwining(const CGMatrix& s) {
    const auto& L = s.layout;
    IntertwiningReport rep;
    const auto& S = s.values;
    const Generator gens[] = {Generator::j3, Generator::plus, Generator::minus};
    double* slots[] = {&rep.res3, &rep.res_plus, &rep.res_minus};
    for (int g = 0; g < 3; ++g) {
        const auto J = convert<double>(product_gen_ceiling(L.twoJ1, L.twoJ2, gens[g]));
        const auto Jt = convert<double>(block_gen_formula(L.twoJ1, L.twoJ2, gens[g]));
        *slots[g] = max_abs_diff(mul(J, S), mul(S, Jt));
    }
    // m_{p'}^{(j1)} + m_{p+n2-n2p'}^{(j2)} must equal the block weight of column q
    for (const auto& [key, v] : S.terms()) {
        (void)v;
        const int p = key.first, q = key.second;
        const int pp = static_cast<int>(ceil_ratio(p, L.n2));
        const int inner = p + L.n2 - L.n2 * pp;
        const int two_m = (L.twoJ1 + 2 - 2 * pp) + (L.twoJ2 + 2 - 2 * inner);
        int k = 1;
        while (q > L.z(k)) ++k;
        const int r = q - L.z(k - 1);
        if (two_m != L.block_twoJ(k) + 2 - 2 * r) rep.diagonal_exact = false;
    }
    return rep;
}

CGMatrix build_S(int twoJ1, int twoJ2) {
    check_twoj(twoJ1, twoJ2);
    CGMatrix s;
    s.layout = layout(twoJ1, twoJ2);
    const auto& L = s.layout;
    s.entries = XSum<SqrtRational>(L.total());
    for (int k = 1; k <= L.n0; ++k) {
        for (int r = 1; r <= L.d(k); ++r) {
            for (int alpha = 0; alpha <= twoJ1; ++alpha) {
                const int beta = k + r - alpha - 1;
                if (beta < 1 || beta > L.n2) continue;
                SqrtRational v;
                if (k == 1) v = s_first_block(twoJ1, twoJ2, alpha, beta);
                else if (r == 1) v = s_rone(twoJ1, twoJ2, k, alpha, beta);
                else v = s_general(twoJ1, twoJ2, k, r, alpha, beta);
                s.entries.add_term(cg_row(L, alpha, beta), cg_col(L, k, r), v);
            }
        }
    }
    s.values = convert<double>(s.entries);
    if (!verify_intertwining(s).ok(1e-8)) {
        CGMatrix o = ladder_oracle_S(twoJ1, twoJ2);
        return o;
    }
    return s;
}

CGMatrix ladder_oracle_S(int twoJ1, int twoJ2) {
    check_twoj(twoJ1, twoJ2);
    CGMatrix s;
    s.layout = layout(twoJ1, twoJ2);
    s.exact = false;
    const auto& L = s.layout;
    const int N = L.total();
    const auto Jm = convert<double>(product_gen(twoJ1, twoJ2, Generator::minus));

    std::vector<std::vector<double>> cols(static_cast<std::size_t>(N) + 1);
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double t = 0;
        for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
        return t;
    };
    auto normalize = [&](std::vector<double>& v) {
        const double nv = std::sqrt(dot(v, v));
        for (double& x : v) x /= nv;
    };
    for (int k = 1; k <= L.n0; ++k) {
        // top state: weight space alpha + beta = k, orthogonal to earlier blocks
        const int p0 = cg_row(L, 0, k);
        std::vector<double> v(static_cast<std::size_t>(N), 0.0);
        v[static_cast<std::size_t>(p0 - 1)] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (int kk = 1; kk < k; ++kk) {
                const auto& c = cols[static_cast<std::size_t>(cg_col(L, kk, k - kk + 1))];
                const double t = dot(v, c);
                for (int i = 0; i < N; ++i) v[static_cast<std::size_t>(i)] -= t * c[static_cast<std::size_t>(i)];
            }
        }
        normalize(v);
        if (v[static_cast<std::size_t>(p0 - 1)] < 0)
            for (double& x : v) x = -x;
        cols[static_cast<std::size_t>(cg_col(L, k, 1))] = v;
        for (int r = 2; r <= L.d(k); ++r) {
            std::vector<double> w(static_cast<std::size_t>(N), 0.0);
            for (const auto& [key, c] : Jm.terms())
                w[static_cast<std::size_t>(key.first - 1)] += c * v[static_cast<std::size_t>(key.second - 1)];
            normalize(w);
            v = w;
            cols[static_cast<std::size_t>(cg_col(L, k, r))] = v;
        }
    }
    s.values = XSum<double>(N);
    for (int q = 1; q <= N; ++q)
        for (int p = 1; p <= N; ++p) {
            const double x = cols[static_cast<std::size_t>(q)][static_cast<std::size_t>(p - 1)];
            if (std::fabs(x) > 1e-14) s.values.add_term(p, q, x);
        }
    return s;
}

double unitarity_residual(const CGMatrix& s) {
    const int N = s.layout.total();
    const auto id = identity<double>(N);
    return std::max(max_abs_diff(mul(transpose(s.values), s.values), id),
                    max_abs_diff(mul(s.values, transpose(s.values)), id));
}

bool columns_normalized_exact(const CGMatrix& s) {
    if (!s.exact) return false;
    const int N = s.layout.total();
    std::vector<Rational> norm(static_cast<std::size_t>(N) + 1, Rational(0));
    for (const auto& [key, v] : s.entries.terms()) norm[static_cast<std::size_t>(key.second)] += v.radicand();
    for (int q = 1; q <= N; ++q)
        if (norm[static_cast<std::size_t>(q)] != 1) return false;
    return true;
}

SqrtRational cg_coefficient(int twoJ1, int twoM1, int twoJ2, int twoM2, int twoJ, int twoM) {
    check_twoj(twoJ1, twoJ2);
    auto valid = [](int tj, int tm) { return std::abs(tm) <= tj && (tj - tm) % 2 == 0; };
    if (!valid(twoJ1, twoM1) || !valid(twoJ2, twoM2))
        throw DomainError("cg_coefficient: m outside [-j, j] or wrong parity");
    if (twoJ < std::abs(twoJ1 - twoJ2) || twoJ > twoJ1 + twoJ2 || (twoJ1 + twoJ2 - twoJ) % 2 != 0)
        throw DomainError("cg_coefficient: J outside the coupling range");
    if (!valid(twoJ, twoM)) throw DomainError("cg_coefficient: M outside [-J, J] or wrong parity");
    if (twoM != twoM1 + twoM2) return {};
    const int alpha = (twoJ1 - twoM1) / 2;     // k1 - 1
    const int beta = (twoJ2 - twoM2) / 2 + 1;  // k2
    const int k = (twoJ1 + twoJ2 - twoJ) / 2 + 1;
    const int r = (twoJ - twoM) / 2 + 1;
    return s_general(twoJ1, twoJ2, k, r, alpha, beta);
}

}  // namespace kronx
