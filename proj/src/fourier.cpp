#include "kronx/fourier.hpp"

#include <cmath>
#include <numbers>

namespace kronx {

namespace {

ComplexFloat root_of_unity(long e, long n) {
    e %= n;
    if (e < 0) e += n;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n));
}

bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

XSum<ComplexFloat> fourier_matrix(int n) {
    if (n < 1) throw DomainError("fourier_matrix: n must be >= 1");
    XSum<ComplexFloat> f(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) f.add_term(i, j, root_of_unity(static_cast<long>(i - 1) * (j - 1), n));
    return f;
}

XSum<ComplexFloat> omega_diag(int k, int n) {
    if (k < 1) throw DomainError("omega_diag: k must be >= 1");
    if (n == 0) n = 2 * k;
    XSum<ComplexFloat> o(k);
    for (int i = 1; i <= k; ++i) o.add_term(i, i, root_of_unity(i - 1, n));
    return o;
}

XSum<ComplexFloat> butterfly(int n) {
    if (n < 2 || n % 2) throw DomainError("butterfly: n must be even");
    const int m = n / 2;
    const auto om = omega_diag(m, n);
    XSum<ComplexFloat> b(n);
    for (int i = 1; i <= m; ++i) {
        const ComplexFloat w = om.coef(i, i);
        b.add_term(i, i, 1.0);
        b.add_term(i, m + i, w);
        b.add_term(m + i, i, 1.0);
        b.add_term(m + i, m + i, -w);
    }
    return b;
}

Permutation odd_even_perm(int k) {
    if (k < 1) throw DomainError("odd_even_perm: k must be >= 1");
    std::vector<int> v;
    for (int j = 1; j <= k; j += 2) v.push_back(j);
    for (int j = 2; j <= k; j += 2) v.push_back(j);
    return Permutation(std::move(v));
}

XSum<ComplexFloat> odd_even_matrix(int k) { return transpose(perm_matrix<ComplexFloat>(odd_even_perm(k))); }

Permutation bit_reversal(int n) {
    if (!power_of_two(n)) throw DomainError("bit_reversal: n must be a power of two");
    int t = 0;
    while ((1 << t) < n) ++t;
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        int r = 0;
        for (int b = 0; b < t; ++b)
            if (j & (1 << b)) r |= 1 << (t - 1 - b);
        v[static_cast<std::size_t>(j)] = r + 1;
    }
    return Permutation(std::move(v));
}

FourierFactorization cooley_tukey(int n) {
    if (n < 2 || !power_of_two(n)) throw DomainError("cooley_tukey: n must be a power of two >= 2");
    FourierFactorization f;
    f.n = n;
    for (int copies = 1; copies < n; copies *= 2)
        f.factors.push_back(kron(identity<ComplexFloat>(copies), butterfly(n / copies)));
    f.bit_reversal = bit_reversal(n);
    return f;
}

XSum<ComplexFloat> FourierFactorization::product() const {
    XSum<ComplexFloat> acc = identity<ComplexFloat>(n);
    for (const auto& s : factors) acc = mul(acc, s);
    return mul(acc, transpose(perm_matrix<ComplexFloat>(bit_reversal)));
}

bool is_hadamard(const XSum<ComplexFloat>& h, double tol) {
    const int n = h.order();
    if (static_cast<long>(h.size()) != static_cast<long>(n) * n) return false;
    for (const auto& [k, x] : h.terms())
        if (std::abs(std::abs(x) - 1.0) > tol) return false;
    return max_abs_diff(mul(h, adjoint(h)), scale(ComplexFloat(n), identity<ComplexFloat>(n))) <= tol * n;
}

Dephasing dephase(const XSum<ComplexFloat>& h, double tol) {
    if (!is_hadamard(h, tol)) throw DomainError("dephase: input is not a complex Hadamard matrix");
    const int n = h.order();
    Dephasing d{XSum<ComplexFloat>(n), {}, XSum<ComplexFloat>(n)};
    for (int i = 1; i <= n; ++i) {
        const ComplexFloat x = h.coef(i, 1);
        d.dr.add_term(i, i, std::conj(x) / std::abs(x));
    }
    const auto hr = mul(d.dr, h);
    for (int j = 1; j <= n; ++j) {
        const ComplexFloat x = hr.coef(1, j);
        d.dc.add_term(j, j, std::conj(x) / std::abs(x));
    }
    d.h0 = mul(hr, d.dc);
    return d;
}

double equivalence_residual(const XSum<ComplexFloat>& h1, const XSum<ComplexFloat>& d1, const Permutation& p1,
                            const XSum<ComplexFloat>& h2, const Permutation& p2, const XSum<ComplexFloat>& d2) {
    const auto rhs = mul(mul(mul(mul(d1, perm_matrix<ComplexFloat>(p1)), h2), perm_matrix<ComplexFloat>(p2)), d2);
    return max_abs_diff(h1, rhs);
}

}  // namespace kronx
