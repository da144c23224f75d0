#pragma once

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "kronx/errors.hpp"

namespace kronx {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, den > 0
using ComplexFloat = std::complex<double>;

Rational make_rational(long num, long den = 1);
// accepts "3", "-3/4", "0.125", "2.5e-3"
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// rejects NaN and Inf components
ComplexFloat make_complex(double re, double im = 0.0);

long ceil_ratio(long p, long n);
long floor_ratio(long p, long n);

enum class Direction { rising, falling };

Rational pochhammer(const Rational& x, long n, Direction dir);
inline Rational rising(const Rational& x, long n) { return pochhammer(x, n, Direction::rising); }
inline Rational falling(const Rational& x, long n) { return pochhammer(x, n, Direction::falling); }

BigInt factorial(long n);
// n!/((n-m)! m!), zero when m lies outside [0, n]
BigInt binomial(long n, long m);

// sum_{s=0}^r (-r)^s (-b)^s (c)^s / ((d)^s (-e)^s s!) with rising powers
Rational hyp3f2_terminating(long r, long b, long c, long d, long e);

// (d)_rising-r (e)_falling-r * 3F2(-r,-b,c; d,-e; 1) written as the finite sum
//   sum_s (-1)^s C(r,s) (b)_falling-s (c)_rising-s (d+s)_rising-(r-s) (e-s)_falling-(r-s)
// This is a polynomial in b, c, d, e and stays defined where the lower
// Pochhammers of the series vanish.
Rational hyp3f2_scaled(long r, long b, long c, long d, long e);

bool is_perfect_square(const Rational& q);
// exact square root of a perfect-square rational
Rational exact_sqrt(const Rational& q);

class SqrtRational {
public:
    SqrtRational() : sign_(0), rad_(0) {}
    SqrtRational(int sign, Rational radicand);
    SqrtRational(long v) : SqrtRational(from_rational(Rational(v))) {}  // NOLINT

    static SqrtRational from_rational(const Rational& q);
    // +sqrt(q)
    static SqrtRational root(const Rational& q);

    int sign() const { return sign_; }
    const Rational& radicand() const { return rad_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_rational() const { return is_perfect_square(rad_); }
    std::optional<Rational> as_rational() const;
    // value squared, with sign: sign * radicand
    Rational signed_square() const { return sign_ < 0 ? Rational(-rad_) : rad_; }
    double to_double() const;
    std::string str() const;

    SqrtRational operator-() const { return SqrtRational(-sign_, rad_); }
    SqrtRational& operator+=(const SqrtRational& o);
    SqrtRational& operator-=(const SqrtRational& o) { return *this += -o; }
    SqrtRational& operator*=(const SqrtRational& o);

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign_ == b.sign_ && a.rad_ == b.rad_;
    }
    friend bool operator!=(const SqrtRational& a, const SqrtRational& b) { return !(a == b); }

private:
    int sign_;
    Rational rad_;
};

SqrtRational sqrtq_mul(const SqrtRational& a, const SqrtRational& b);
// Adds values whose radicands differ by a rational square factor
// (sqrt 2 + sqrt 8 = sqrt 18); anything else raises ClosureError.
SqrtRational sqrtq_add_like(const SqrtRational& a, const SqrtRational& b);

inline SqrtRational operator*(SqrtRational a, const SqrtRational& b) { return a *= b; }
inline SqrtRational operator+(SqrtRational a, const SqrtRational& b) { return a += b; }
inline SqrtRational operator-(SqrtRational a, const SqrtRational& b) { return a -= b; }
SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);

}  // namespace kronx
