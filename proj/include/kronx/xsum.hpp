#pragma once

// Matrices as weighted sums of Hubbard operators X_n^{i,j} = |e_i><e_j|.
// Indices are 1-based everywhere in the public interface.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kronx/exactnum.hpp"

namespace kronx {

template <class S>
struct Scalar;

template <>
struct Scalar<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational conj(const Rational& x) { return x; }
    static ComplexFloat to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
    static double abs(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct Scalar<SqrtRational> {
    static constexpr bool exact = true;
    static bool is_zero(const SqrtRational& x) { return x.is_zero(); }
    static SqrtRational zero() { return {}; }
    static SqrtRational one() { return SqrtRational(1, Rational(1)); }
    static SqrtRational conj(const SqrtRational& x) { return x; }
    static ComplexFloat to_complex(const SqrtRational& x) { return {x.to_double(), 0.0}; }
    static double abs(const SqrtRational& x) { return std::fabs(x.to_double()); }
};

template <>
struct Scalar<double> {
    static constexpr bool exact = false;
    static bool is_zero(double x) { return x == 0.0; }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double conj(double x) { return x; }
    static ComplexFloat to_complex(double x) { return {x, 0.0}; }
    static double abs(double x) { return std::fabs(x); }
};

template <>
struct Scalar<ComplexFloat> {
    static constexpr bool exact = false;
    static bool is_zero(const ComplexFloat& x) { return x == ComplexFloat(0.0, 0.0); }
    static ComplexFloat zero() { return {0.0, 0.0}; }
    static ComplexFloat one() { return {1.0, 0.0}; }
    static ComplexFloat conj(const ComplexFloat& x) { return std::conj(x); }
    static ComplexFloat to_complex(const ComplexFloat& x) { return x; }
    static double abs(const ComplexFloat& x) { return std::abs(x); }
};

struct HubbardTerm {
    int order, row, col;
    friend bool operator==(const HubbardTerm&, const HubbardTerm&) = default;
};

template <class S>
class XSum {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, S>;

    XSum() : n_(0) {}
    explicit XSum(int n) : n_(n) {
        if (n < 0) throw DimensionError("negative matrix order");
    }

    int order() const { return n_; }
    const Map& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool empty() const { return t_.empty(); }

    S coef(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Scalar<S>::zero() : it->second;
    }

    // accumulate c into entry (i, j); exact zeros never stay in the map
    void add_term(int i, int j, const S& c) {
        check(i, j);
        if (Scalar<S>::is_zero(c)) return;
        auto [it, fresh] = t_.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (Scalar<S>::is_zero(it->second)) t_.erase(it);
        }
    }

    void set(int i, int j, const S& c) {
        check(i, j);
        if (Scalar<S>::is_zero(c)) t_.erase({i, j});
        else t_[{i, j}] = c;
    }

    // terms of row i, in column order
    auto row_begin(int i) const { return t_.lower_bound({i, 0}); }
    auto row_end(int i) const { return t_.lower_bound({i + 1, 0}); }

    friend bool operator==(const XSum& a, const XSum& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const XSum& a, const XSum& b) { return !(a == b); }

private:
    void check(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_)
            throw IndexError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside order " +
                             std::to_string(n_));
    }

    int n_;
    Map t_;
};

template <class S>
class Ket {
public:
    Ket() = default;
    explicit Ket(int dim) : v_(static_cast<std::size_t>(dim), Scalar<S>::zero()) {}
    Ket(std::initializer_list<S> xs) : v_(xs) {}
    explicit Ket(std::vector<S> xs) : v_(std::move(xs)) {}

    int dim() const { return static_cast<int>(v_.size()); }
    S& operator()(int k) { return v_.at(static_cast<std::size_t>(k - 1)); }
    const S& operator()(int k) const { return v_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<S>& data() const { return v_; }

    friend bool operator==(const Ket& a, const Ket& b) { return a.v_ == b.v_; }

private:
    std::vector<S> v_;
};

template <class S>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Scalar<S>::zero()) {}
    int order() const { return n_; }
    S& operator()(int i, int j) { return a_[idx(i, j)]; }
    const S& operator()(int i, int j) const { return a_[idx(i, j)]; }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw IndexError("dense index out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_ = 0;
    std::vector<S> a_;
};

// ---- construction -------------------------------------------------------

template <class S = Rational>
XSum<S> x_op(int n, int i, int j) {
    XSum<S> x(n);
    x.add_term(i, j, Scalar<S>::one());
    return x;
}

template <class S = Rational>
XSum<S> identity(int n) {
    XSum<S> x(n);
    for (int i = 1; i <= n; ++i) x.add_term(i, i, Scalar<S>::one());
    return x;
}

template <class S>
DenseMatrix<S> to_dense(const XSum<S>& a) {
    DenseMatrix<S> m(a.order());
    for (const auto& [k, c] : a.terms()) m(k.first, k.second) = c;
    return m;
}

template <class S>
XSum<S> from_dense(const DenseMatrix<S>& m) {
    XSum<S> a(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j) a.add_term(i, j, m(i, j));
    return a;
}

// ---- algebra ------------------------------------------------------------

namespace detail {
inline void same_order(int a, int b, const char* what) {
    if (a != b)
        throw DimensionError(std::string(what) + ": order mismatch " + std::to_string(a) + " vs " +
                             std::to_string(b));
}
}  // namespace detail

// delta contraction: X^{i,j} X^{k,l} = delta_{jk} X^{i,l}
template <class S>
XSum<S> mul(const XSum<S>& a, const XSum<S>& b) {
    detail::same_order(a.order(), b.order(), "mul");
    XSum<S> c(a.order());
    for (const auto& [k, x] : a.terms()) {
        for (auto it = b.row_begin(k.second); it != b.row_end(k.second); ++it)
            c.add_term(k.first, it->first.second, x * it->second);
    }
    return c;
}

template <class S>
XSum<S> add(const XSum<S>& a, const XSum<S>& b) {
    detail::same_order(a.order(), b.order(), "add");
    XSum<S> c = a;
    for (const auto& [k, x] : b.terms()) c.add_term(k.first, k.second, x);
    return c;
}

template <class S>
XSum<S> scale(const S& s, const XSum<S>& a) {
    XSum<S> c(a.order());
    if (Scalar<S>::is_zero(s)) return c;
    for (const auto& [k, x] : a.terms()) c.add_term(k.first, k.second, s * x);
    return c;
}

template <class S>
XSum<S> neg(const XSum<S>& a) {
    XSum<S> c(a.order());
    for (const auto& [k, x] : a.terms()) c.add_term(k.first, k.second, -x);
    return c;
}

template <class S>
XSum<S> sub(const XSum<S>& a, const XSum<S>& b) {
    return add(a, neg(b));
}

enum class LinearOp { add, sub };

template <class S>
XSum<S> xsum_linear(LinearOp op, const XSum<S>& a, const XSum<S>& b) {
    return op == LinearOp::add ? add(a, b) : sub(a, b);
}

template <class S>
XSum<S> operator*(const XSum<S>& a, const XSum<S>& b) { return mul(a, b); }
template <class S>
XSum<S> operator+(const XSum<S>& a, const XSum<S>& b) { return add(a, b); }
template <class S>
XSum<S> operator-(const XSum<S>& a, const XSum<S>& b) { return sub(a, b); }
template <class S>
XSum<S> operator-(const XSum<S>& a) { return neg(a); }
template <class S>
XSum<S> operator*(const S& s, const XSum<S>& a) { return scale(s, a); }

enum class Bracket { commutator, anticommutator };

template <class S>
XSum<S> bracket(const XSum<S>& a, const XSum<S>& b, Bracket kind = Bracket::commutator) {
    return kind == Bracket::commutator ? sub(mul(a, b), mul(b, a)) : add(mul(a, b), mul(b, a));
}

enum class DaggerMode { transpose, conjugate, adjoint };

template <class S>
XSum<S> dagger(const XSum<S>& a, DaggerMode mode = DaggerMode::adjoint) {
    XSum<S> c(a.order());
    for (const auto& [k, x] : a.terms()) {
        const S v = mode == DaggerMode::transpose ? x : Scalar<S>::conj(x);
        if (mode == DaggerMode::conjugate) c.add_term(k.first, k.second, v);
        else c.add_term(k.second, k.first, v);
    }
    return c;
}

template <class S>
XSum<S> transpose(const XSum<S>& a) { return dagger(a, DaggerMode::transpose); }
template <class S>
XSum<S> adjoint(const XSum<S>& a) { return dagger(a, DaggerMode::adjoint); }

template <class S>
S trace(const XSum<S>& a) {
    S t = Scalar<S>::zero();
    for (const auto& [k, x] : a.terms())
        if (k.first == k.second) t += x;
    return t;
}

template <class S>
Ket<S> apply(const XSum<S>& a, const Ket<S>& x) {
    detail::same_order(a.order(), x.dim(), "apply");
    Ket<S> y(a.order());
    for (const auto& [k, c] : a.terms()) y(k.first) += c * x(k.second);
    return y;
}

// ---- conversion and float helpers --------------------------------------

template <class T, class S>
T scalar_cast(const S& x);

template <>
inline Rational scalar_cast<Rational, Rational>(const Rational& x) { return x; }
template <>
inline SqrtRational scalar_cast<SqrtRational, Rational>(const Rational& x) { return SqrtRational::from_rational(x); }
template <>
inline SqrtRational scalar_cast<SqrtRational, SqrtRational>(const SqrtRational& x) { return x; }
template <>
inline double scalar_cast<double, Rational>(const Rational& x) { return x.get_d(); }
template <>
inline double scalar_cast<double, SqrtRational>(const SqrtRational& x) { return x.to_double(); }
template <>
inline double scalar_cast<double, double>(const double& x) { return x; }
template <>
inline ComplexFloat scalar_cast<ComplexFloat, Rational>(const Rational& x) { return Scalar<Rational>::to_complex(x); }
template <>
inline ComplexFloat scalar_cast<ComplexFloat, SqrtRational>(const SqrtRational& x) {
    return Scalar<SqrtRational>::to_complex(x);
}
template <>
inline ComplexFloat scalar_cast<ComplexFloat, double>(const double& x) { return {x, 0.0}; }
template <>
inline ComplexFloat scalar_cast<ComplexFloat, ComplexFloat>(const ComplexFloat& x) { return x; }

template <class T, class S>
XSum<T> convert(const XSum<S>& a) {
    XSum<T> c(a.order());
    for (const auto& [k, x] : a.terms()) c.add_term(k.first, k.second, scalar_cast<T>(x));
    return c;
}

template <class S>
XSum<ComplexFloat> to_complex(const XSum<S>& a) {
    return convert<ComplexFloat>(a);
}

// drop float coefficients with magnitude below tol
template <class S>
XSum<S> cleanup(const XSum<S>& a, double tol = 1e-14) {
    static_assert(!Scalar<S>::exact, "cleanup applies to float XSums only");
    XSum<S> c(a.order());
    for (const auto& [k, x] : a.terms())
        if (Scalar<S>::abs(x) >= tol) c.set(k.first, k.second, x);
    return c;
}

// max |a_ij - b_ij|, over the union of stored terms
template <class S, class T>
double max_abs_diff(const XSum<S>& a, const XSum<T>& b) {
    detail::same_order(a.order(), b.order(), "max_abs_diff");
    double m = 0.0;
    for (const auto& [k, x] : a.terms())
        m = std::max(m, std::abs(Scalar<S>::to_complex(x) - Scalar<T>::to_complex(b.coef(k.first, k.second))));
    for (const auto& [k, y] : b.terms())
        if (!a.terms().count(k)) m = std::max(m, Scalar<T>::abs(y));
    return m;
}

template <class S>
double max_norm(const XSum<S>& a) {
    double m = 0.0;
    for (const auto& [k, x] : a.terms()) m = std::max(m, Scalar<S>::abs(x));
    return m;
}

template <class S, class T>
bool approx_equal(const XSum<S>& a, const XSum<T>& b, double tol = 1e-10) {
    return a.order() == b.order() && max_abs_diff(a, b) < tol;
}

// exact determinant by Bareiss elimination
Rational det_dense(const DenseMatrix<Rational>& m);

}  // namespace kronx
