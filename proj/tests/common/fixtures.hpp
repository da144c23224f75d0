#pragma once

// Test helpers: matrices typed in as strings, random generators, dense oracles.

#include <random>
#include <string>
#include <vector>

#include "kronx/xsum.hpp"

namespace fx {

using namespace kronx;

// "3/2", "-1", "s2" (= sqrt 2), "-s1/3" (= -sqrt(1/3))
inline SqrtRational sq(std::string s) {
    int sign = 1;
    if (!s.empty() && s[0] == '-') {
        sign = -1;
        s.erase(0, 1);
    }
    if (!s.empty() && s[0] == 's') {
        const Rational q = parse_rational(s.substr(1));
        return sgn(q) == 0 ? SqrtRational() : SqrtRational(sign, q);
    }
    const Rational q = parse_rational(s);
    return SqrtRational::from_rational(sign < 0 ? Rational(-q) : q);
}

inline XSum<SqrtRational> sq_matrix(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    XSum<SqrtRational> a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.add_term(i + 1, j + 1, sq(rows[i][j]));
    return a;
}

inline XSum<Rational> q_matrix(const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    XSum<Rational> a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.add_term(i + 1, j + 1, parse_rational(rows[i][j]));
    return a;
}

inline Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return make_rational(num(rng), den(rng));
}

inline XSum<Rational> random_rational(std::mt19937_64& rng, int n, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    XSum<Rational> a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (keep(rng)) a.add_term(i, j, random_q(rng));
    return a;
}

inline Ket<Rational> random_ket(std::mt19937_64& rng, int n) {
    Ket<Rational> x(n);
    for (int i = 1; i <= n; ++i) x(i) = random_q(rng);
    return x;
}

inline XSum<ComplexFloat> random_complex(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    XSum<ComplexFloat> a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a.add_term(i, j, {g(rng), g(rng)});
    return a;
}

inline XSum<ComplexFloat> random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    XSum<ComplexFloat> h(n);
    for (int i = 1; i <= n; ++i) {
        h.add_term(i, i, g(rng));
        for (int j = i + 1; j <= n; ++j) {
            const ComplexFloat v(g(rng), g(rng));
            h.add_term(i, j, v);
            h.add_term(j, i, std::conj(v));
        }
    }
    return h;
}

// Kronecker product by the block definition [a_ij B], on dense storage
template <class S>
XSum<S> kron_blocks(const XSum<S>& a, const XSum<S>& b) {
    const int n = a.order(), m = b.order();
    std::vector<S> c(static_cast<std::size_t>(n * m) * (n * m), Scalar<S>::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const S aij = a.coef(i + 1, j + 1);
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    c[static_cast<std::size_t>(i * m + k) * (n * m) + (j * m + l)] = aij * b.coef(k + 1, l + 1);
        }
    XSum<S> out(n * m);
    for (int p = 0; p < n * m; ++p)
        for (int q = 0; q < n * m; ++q) out.add_term(p + 1, q + 1, c[static_cast<std::size_t>(p) * (n * m) + q]);
    return out;
}

// row-by-column product on dense storage
template <class S>
XSum<S> mul_dense(const XSum<S>& a, const XSum<S>& b) {
    const int n = a.order();
    XSum<S> c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            S s = Scalar<S>::zero();
            for (int k = 1; k <= n; ++k) s += a.coef(i, k) * b.coef(k, j);
            c.add_term(i, j, s);
        }
    return c;
}

}  // namespace fx
