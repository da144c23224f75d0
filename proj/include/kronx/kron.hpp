#pragma once

#include <thread>
#include <vector>

#include "kronx/xsum.hpp"

namespace kronx {

// X_m^{i,j} (x) X_n^{k,l} = X_{mn}^{n(i-1)+k, n(j-1)+l}
inline HubbardTerm kron_term(const HubbardTerm& a, const HubbardTerm& b) {
    return {a.order * b.order, b.order * (a.row - 1) + b.row, b.order * (a.col - 1) + b.col};
}

// position of e_{i1} (x) e_{i2} in the product basis
inline int basis_kron_index(int i1, int n1, int i2, int n2) {
    if (i1 < 1 || i1 > n1 || i2 < 1 || i2 > n2) throw IndexError("basis_kron_index: index out of range");
    return (i1 - 1) * n2 + i2;
}

// Sparse path: every term pair maps to exactly one product term, so the
// result never needs accumulation. With threads > 1 the terms of A are
// split into contiguous chunks and merged in order.
template <class S>
XSum<S> kron(const XSum<S>& a, const XSum<S>& b, int threads = 1) {
    const int m = a.order(), n = b.order();
    XSum<S> c(m * n);
    using Entry = std::pair<typename XSum<S>::Key, S>;
    auto work = [&](auto first, auto last, std::vector<Entry>& out) {
        for (auto it = first; it != last; ++it) {
            const auto& [ka, x] = *it;
            for (const auto& [kb, y] : b.terms()) {
                HubbardTerm t = kron_term({m, ka.first, ka.second}, {n, kb.first, kb.second});
                out.emplace_back(typename XSum<S>::Key{t.row, t.col}, x * y);
            }
        }
    };
    const auto& ta = a.terms();
    if (threads <= 1 || ta.size() < 2) {
        std::vector<Entry> out;
        work(ta.begin(), ta.end(), out);
        for (auto& [k, v] : out) c.add_term(k.first, k.second, v);
        return c;
    }
    const std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(threads), ta.size());
    std::vector<std::vector<Entry>> outs(parts);
    std::vector<std::thread> pool;
    auto it = ta.begin();
    for (std::size_t p = 0; p < parts; ++p) {
        std::size_t len = ta.size() / parts + (p < ta.size() % parts ? 1 : 0);
        auto first = it;
        std::advance(it, static_cast<long>(len));
        pool.emplace_back([&, first, last = it, p] { work(first, last, outs[p]); });
    }
    for (auto& t : pool) t.join();
    for (auto& out : outs)
        for (auto& [k, v] : out) c.add_term(k.first, k.second, v);
    return c;
}

// Closed-form path: c_{p,q} = a_{p',q'} b_{p+m-mp', q+m-mq'}, p' = ceil(p/m),
// with m the order of B. Visits every (p, q).
template <class S>
XSum<S> kron_closed(const XSum<S>& a, const XSum<S>& b) {
    const int m = b.order();
    const int N = a.order() * m;
    XSum<S> c(N);
    for (int p = 1; p <= N; ++p) {
        const int pp = static_cast<int>(ceil_ratio(p, m));
        for (int q = 1; q <= N; ++q) {
            const int qq = static_cast<int>(ceil_ratio(q, m));
            S x = a.coef(pp, qq);
            if (Scalar<S>::is_zero(x)) continue;
            c.add_term(p, q, x * b.coef(p + m - m * pp, q + m - m * qq));
        }
    }
    return c;
}

template <class S>
XSum<S> kron_many(const std::vector<XSum<S>>& factors, int threads = 1) {
    if (factors.empty()) throw DimensionError("kron_many: no factors");
    XSum<S> acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i], threads);
    return acc;
}

// Closed form for A^(1) (x) ... (x) A^(k+1):
//   a~_{p,q} = a^(1)_{p_k,q_k} prod_{s=0}^{k-1} a^(k-s+1)_{p_s + n_{k-s+1} - n_{k-s+1} p_{s+1}, ...}
// with p_0 = p and p_s = ceil(p / (n_{k+1} n_k ... n_{k-s+2})).
template <class S>
XSum<S> kron_many_closed(const std::vector<XSum<S>>& factors) {
    if (factors.empty()) throw DimensionError("kron_many: no factors");
    const int K = static_cast<int>(factors.size()) - 1;  // k in the formula
    auto nn = [&](int r) { return static_cast<long>(factors[static_cast<std::size_t>(r - 1)].order()); };
    long N = 1;
    for (const auto& f : factors) N *= f.order();
    // divisor for p_s
    std::vector<long> div(static_cast<std::size_t>(K + 1), 1);
    for (int s = 1; s <= K; ++s) div[static_cast<std::size_t>(s)] = div[static_cast<std::size_t>(s - 1)] * nn(K - s + 2);

    XSum<S> c(static_cast<int>(N));
    std::vector<long> ps(static_cast<std::size_t>(K + 1)), qs(static_cast<std::size_t>(K + 1));
    for (long p = 1; p <= N; ++p) {
        for (int s = 0; s <= K; ++s) ps[static_cast<std::size_t>(s)] = ceil_ratio(p, div[static_cast<std::size_t>(s)]);
        for (long q = 1; q <= N; ++q) {
            for (int s = 0; s <= K; ++s) qs[static_cast<std::size_t>(s)] = ceil_ratio(q, div[static_cast<std::size_t>(s)]);
            S x = factors[0].coef(static_cast<int>(ps[static_cast<std::size_t>(K)]), static_cast<int>(qs[static_cast<std::size_t>(K)]));
            for (int s = 0; s < K && !Scalar<S>::is_zero(x); ++s) {
                const long n = nn(K - s + 1);
                const auto u = static_cast<std::size_t>(s);
                x *= factors[static_cast<std::size_t>(K - s)].coef(static_cast<int>(ps[u] + n - n * ps[u + 1]),
                                                                   static_cast<int>(qs[u] + n - n * qs[u + 1]));
            }
            c.add_term(static_cast<int>(p), static_cast<int>(q), x);
        }
    }
    return c;
}

template <class S>
XSum<S> kron_power(const XSum<S>& a, int t, int threads = 1) {
    if (t < 1) throw DomainError("kron_power: t must be >= 1");
    return kron_many(std::vector<XSum<S>>(static_cast<std::size_t>(t), a), threads);
}

// a^(k+1)_{p,q} = a_{p_k,q_k} prod_{s=0}^{k-1} a_{p_s+n-n p_{s+1}, q_s+n-n q_{s+1}},  p_s = ceil(p/n^s)
template <class S>
XSum<S> kron_power_closed(const XSum<S>& a, int t) {
    if (t < 1) throw DomainError("kron_power: t must be >= 1");
    const long n = a.order();
    const int k = t - 1;
    std::vector<long> npow(static_cast<std::size_t>(t), 1);
    for (int s = 1; s < t; ++s) npow[static_cast<std::size_t>(s)] = npow[static_cast<std::size_t>(s - 1)] * n;
    const long N = npow.back() * n;
    XSum<S> c(static_cast<int>(N));
    std::vector<long> ps(static_cast<std::size_t>(t)), qs(static_cast<std::size_t>(t));
    for (long p = 1; p <= N; ++p) {
        for (int s = 0; s <= k; ++s) ps[static_cast<std::size_t>(s)] = ceil_ratio(p, npow[static_cast<std::size_t>(s)]);
        for (long q = 1; q <= N; ++q) {
            for (int s = 0; s <= k; ++s) qs[static_cast<std::size_t>(s)] = ceil_ratio(q, npow[static_cast<std::size_t>(s)]);
            S x = a.coef(static_cast<int>(ps[static_cast<std::size_t>(k)]), static_cast<int>(qs[static_cast<std::size_t>(k)]));
            for (int s = 0; s < k && !Scalar<S>::is_zero(x); ++s) {
                const auto u = static_cast<std::size_t>(s);
                x *= a.coef(static_cast<int>(ps[u] + n - n * ps[u + 1]), static_cast<int>(qs[u] + n - n * qs[u + 1]));
            }
            c.add_term(static_cast<int>(p), static_cast<int>(q), x);
        }
    }
    return c;
}

// ---- Hadamard -------------------------------------------------------------

// (1/sqrt 2) sum (-1)^{(i-1)(j-1)} X_2^{i,j}
XSum<SqrtRational> hadamard();

enum class HadamardForm { ceiling, binary };

// H^{(x)t} = 2^{-t/2} * signs, with the +-1 lattice kept exact
struct HadamardPower {
    int t = 0;
    XSum<Rational> signs;
    SqrtRational scale;
    XSum<SqrtRational> matrix() const;
};

HadamardPower hadamard_power(int t, HadamardForm form = HadamardForm::ceiling);
// exponent of (-1) at entry (p, q) of H^{(x)t}
long hadamard_exponent(long p, long q, int t, HadamardForm form);

// ---- spectra of Kronecker products ----------------------------------------

struct EigenPair {
    ComplexFloat value;
    Ket<ComplexFloat> vector;
};

struct EigenPairReport {
    double max_product_residual = 0.0;  // (A (x) B)(a (x) b) - ab (a (x) b)
    double max_sum_residual = 0.0;      // (A (x) I + I (x) B)(a (x) b) - (a+b)(a (x) b)
    std::vector<std::pair<int, int>> failures;
    bool ok() const { return failures.empty(); }
};

template <class S>
Ket<S> kron_ket(const Ket<S>& x, const Ket<S>& y) {
    Ket<S> z(x.dim() * y.dim());
    for (int i = 1; i <= x.dim(); ++i)
        for (int k = 1; k <= y.dim(); ++k) z(basis_kron_index(i, x.dim(), k, y.dim())) = x(i) * y(k);
    return z;
}

EigenPairReport eigen_pair_check(const XSum<ComplexFloat>& a, const XSum<ComplexFloat>& b,
                                 const std::vector<EigenPair>& pa, const std::vector<EigenPair>& pb,
                                 double tol = 1e-10);

}  // namespace kronx
