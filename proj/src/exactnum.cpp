#include "kronx/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace kronx {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

BigInt pow10(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

bool parse_bigint(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = BigInt(s[0] == '+' ? s.substr(1) : s, 10);
    return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&] { return DomainError("not a rational number: '" + raw + "'"); };
    if (s.empty()) throw bad();

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n, d;
        if (!parse_bigint(s.substr(0, slash), n) || !parse_bigint(s.substr(slash + 1), d)) throw bad();
        if (d == 0) throw DomainError("zero denominator in '" + raw + "'");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    // decimal with optional exponent
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i];
            if (seen_dot) ++frac;
        } else {
            throw bad();
        }
    }
    if (digits.empty()) throw bad();
    long exp10 = 0;
    if (i < s.size()) {
        BigInt e;
        if (!parse_bigint(s.substr(i + 1), e) || abs(e) > 4000) throw bad();
        exp10 = e.get_si();
    }
    Rational q{BigInt(digits, 10)};
    long shift = exp10 - frac;
    if (shift > 0) q *= Rational(pow10(shift));
    if (shift < 0) q /= Rational(pow10(-shift));
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ComplexFloat make_complex(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("non-finite complex component");
    return {re, im};
}

long ceil_ratio(long p, long n) {
    if (n <= 0) throw DomainError("ceil_ratio: divisor must be positive");
    long q = p / n;
    if (p % n != 0 && p > 0) ++q;
    return q;
}

long floor_ratio(long p, long n) {
    if (n <= 0) throw DomainError("floor_ratio: divisor must be positive");
    long q = p / n;
    if (p % n != 0 && p < 0) --q;
    return q;
}

Rational pochhammer(const Rational& x, long n, Direction dir) {
    if (n < 0) throw DomainError("pochhammer: negative length");
    Rational acc(1);
    for (long s = 0; s < n; ++s) acc *= (dir == Direction::rising) ? Rational(x + s) : Rational(x - s);
    return acc;
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long m) {
    if (n < 0 || m < 0 || m > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

Rational hyp3f2_terminating(long r, long b, long c, long d, long e) {
    if (r < 0) throw DomainError("hyp3f2: r must be nonnegative");
    Rational term(1), sum(1);
    for (long s = 0; s < r; ++s) {
        Rational num = Rational(-r + s) * Rational(-b + s) * Rational(c + s);
        if (num == 0) break;  // series has terminated
        Rational den = Rational(d + s) * Rational(-e + s) * Rational(s + 1);
        if (den == 0)
            throw DomainError("hyp3f2: vanishing lower-parameter Pochhammer at s=" + std::to_string(s + 1));
        term *= num / den;
        sum += term;
    }
    return sum;
}

Rational hyp3f2_scaled(long r, long b, long c, long d, long e) {
    if (r < 0) throw DomainError("hyp3f2: r must be nonnegative");
    Rational sum(0);
    for (long s = 0; s <= r; ++s) {
        Rational t = Rational(binomial(r, s)) * falling(b, s) * rising(c, s) * rising(d + s, r - s) *
                     falling(e - s, r - s);
        if (s % 2) sum -= t;
        else sum += t;
    }
    return sum;
}

bool is_perfect_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& q) {
    if (!is_perfect_square(q)) throw DomainError("exact_sqrt: not a perfect square: " + q.get_str());
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

SqrtRational::SqrtRational(int sign, Rational radicand) : sign_(sign), rad_(std::move(radicand)) {
    rad_.canonicalize();
    if (sgn(rad_) < 0) throw DomainError("SqrtRational: negative radicand");
    if (sign_ > 1 || sign_ < -1) throw DomainError("SqrtRational: sign must be -1, 0 or 1");
    if (sgn(rad_) == 0) sign_ = 0;
    else if (sign_ == 0) throw DomainError("SqrtRational: zero sign with nonzero radicand");
}

SqrtRational SqrtRational::from_rational(const Rational& q) { return SqrtRational(sgn(q), q * q); }

SqrtRational SqrtRational::root(const Rational& q) {
    if (sgn(q) < 0) throw DomainError("SqrtRational::root of a negative number");
    return SqrtRational(sgn(q), q);
}

std::optional<Rational> SqrtRational::as_rational() const {
    if (!is_perfect_square(rad_)) return std::nullopt;
    Rational r = exact_sqrt(rad_);
    return sign_ < 0 ? Rational(-r) : r;
}

double SqrtRational::to_double() const { return sign_ * std::sqrt(rad_.get_d()); }

std::string SqrtRational::str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    if (auto r = as_rational()) return r->get_str();
    return s + "sqrt(" + rad_.get_str() + ")";
}

SqrtRational& SqrtRational::operator*=(const SqrtRational& o) {
    sign_ *= o.sign_;
    rad_ = sign_ == 0 ? Rational(0) : Rational(rad_ * o.rad_);
    return *this;
}

SqrtRational& SqrtRational::operator+=(const SqrtRational& o) { return *this = sqrtq_add_like(*this, o); }

SqrtRational sqrtq_mul(const SqrtRational& a, const SqrtRational& b) { return a * b; }

SqrtRational sqrtq_add_like(const SqrtRational& a, const SqrtRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand() == b.radicand()) {
        // (sa + sb) sqrt(x)
        int c = a.sign() + b.sign();
        return c == 0 ? SqrtRational() : SqrtRational(c > 0 ? 1 : -1, 4 * a.radicand());
    }
    Rational prod = a.radicand() * b.radicand();
    if (!is_perfect_square(prod))
        throw ClosureError("cannot add " + a.str() + " and " + b.str() + " exactly");
    // sqrt(b) = (t/a) sqrt(a) with t = sqrt(ab)
    Rational coef = Rational(a.sign()) + Rational(b.sign()) * exact_sqrt(prod) / a.radicand();
    return SqrtRational(sgn(coef), coef * coef * a.radicand());
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b) {
    if (b.is_zero()) throw DomainError("SqrtRational division by zero");
    return SqrtRational(a.sign() * b.sign(), a.radicand() / b.radicand());
}

}  // namespace kronx
