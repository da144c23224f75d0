#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace kronx;

TEST_CASE("ceil_ratio and floor_ratio") {
    CHECK(ceil_ratio(4, 4) == 1);
    CHECK(ceil_ratio(5, 4) == 2);
    CHECK(ceil_ratio(7, 2) == 4);
    CHECK(floor_ratio(0, 5) == 0);
    CHECK(floor_ratio(7, 2) == 3);
    CHECK(floor_ratio(8, 2) == 4);
    CHECK_THROWS_AS(ceil_ratio(3, 0), DomainError);
    CHECK_THROWS_AS(floor_ratio(3, 0), DomainError);
}

TEST_CASE("ceiling identities") {
    for (long p = 1; p <= 2000; ++p)
        for (long n = 1; n <= 16; ++n) {
            const long c = ceil_ratio(p, n);
            REQUIRE(ceil_ratio(p + 5 * n, n) == c + 5);
            REQUIRE(ceil_ratio(p + 1, n) == floor_ratio(p, n) + 1);
            REQUIRE(n * c >= p);
            REQUIRE(n * (c - 1) < p);
            for (long m = 1; m <= 16; ++m) REQUIRE(ceil_ratio(p, n * m) == ceil_ratio(c, m));
        }
}

TEST_CASE("pochhammer") {
    CHECK(rising(7, 0) == 1);
    CHECK(rising(3, 2) == 12);
    CHECK(falling(3, 2) == 6);
    CHECK(falling(3, 4) == 0);
    CHECK(rising(Rational(1, 2), 2) == Rational(3, 4));
    for (int x = -5; x <= 5; ++x)
        for (int n = 0; n <= 6; ++n) CHECK(rising(x, n) == falling(x + n - 1, n));
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("7") == 7);
    // leading zeros are decimal
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("-08/012") == make_rational(-2, 3));
    CHECK(parse_rational("0.05") == make_rational(1, 20));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("make_complex rejects non-finite parts") {
    CHECK(make_complex(1, 2) == ComplexFloat(1, 2));
    CHECK_THROWS_AS(make_complex(std::nan(""), 0), DomainError);
    CHECK_THROWS_AS(make_complex(0, INFINITY), DomainError);
}

TEST_CASE("terminating 3F2 values") {
    CHECK(hyp3f2_terminating(0, 4, 5, 6, 7) == 1);
    CHECK(hyp3f2_terminating(1, 2, 3, 4, 5) == Rational(7, 10));
    // r = 2: 1 - 2bc/(de) + b(b-1)c(c+1)/(d(d+1)e(e-1))
    for (int b = 0; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c)
            for (int d = 1; d <= 4; ++d)
                for (int e = 2; e <= 6; ++e) {
                    const Rational want = 1 - make_rational(2 * b * c, d * e) +
                                          make_rational(b * (b - 1) * c * (c + 1), d * (d + 1) * e * (e - 1));
                    CHECK(hyp3f2_terminating(2, b, c, d, e) == want);
                }
    CHECK_THROWS_AS(hyp3f2_terminating(2, 3, 1, 0, 5), DomainError);
}

TEST_CASE("scaled 3F2 identity on random tuples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> rr(0, 6), par(-12, 12);
    int done = 0;
    while (done < 500) {
        const int r = rr(rng), b = par(rng), c = par(rng), d = par(rng), e = par(rng);
        bool zero = false;
        for (int k = 0; k < r; ++k) zero = zero || d + k == 0 || -e + k == 0;
        if (zero) continue;
        ++done;
        REQUIRE(rising(d, r) * falling(e, r) * hyp3f2_terminating(r, b, c, d, e) == hyp3f2_scaled(r, b, c, d, e));
    }
}

TEST_CASE("printed right-hand side of the 3F2 identity fails at r = 1") {
    // sum_s (-1)^s C(r,s) (b)_falling-s (c)_rising-s (d+1)_falling-(r-s) (e)_falling-r
    const long r = 1, b = 2, c = 3, d = 4, e = 5;
    Rational printed = 0;
    for (long s = 0; s <= r; ++s)
        printed += Rational(s % 2 ? -1 : 1) * Rational(binomial(r, s)) * falling(b, s) * rising(c, s) *
                   falling(d + 1, r - s) * falling(e, r);
    const Rational lhs = rising(d, r) * falling(e, r) * hyp3f2_terminating(r, b, c, d, e);
    CHECK(lhs == 14);
    CHECK(printed == -5);
    CHECK(hyp3f2_scaled(r, b, c, d, e) == 14);
}

TEST_CASE("addition formula for rising factorials") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> ab(-6, 12), nn(0, 8);
    for (int i = 0; i < 500; ++i) {
        const int a = ab(rng), b = ab(rng), n = nn(rng);
        Rational lhs = 0;
        for (int s = 0; s <= n; ++s) lhs += Rational(binomial(n, s)) * rising(a, s) * rising(b, n - s);
        REQUIRE(lhs == rising(a + b, n));
    }
}

TEST_CASE("SqrtRational arithmetic") {
    const SqrtRational r2 = SqrtRational::root(2), r3 = SqrtRational::root(3);
    const auto four = sqrtq_mul(r2, r2);
    CHECK(four.sign() == 1);
    CHECK(four.radicand() == 4);
    CHECK(four.as_rational() == Rational(2));
    CHECK(sqrtq_mul(SqrtRational::root(Rational(1, 3)), r3) == SqrtRational(1));
    CHECK_THROWS_AS(sqrtq_add_like(r2, r3), ClosureError);
    CHECK(sqrtq_add_like(r2, r2) == SqrtRational::root(8));
    CHECK((r2 - r2).is_zero());
    // sqrt(8) + sqrt(2) = 3 sqrt(2) = sqrt(18)
    CHECK(SqrtRational::root(8) + r2 == SqrtRational::root(18));
    CHECK(SqrtRational::root(8) - SqrtRational::root(18) == -r2);
    CHECK_THROWS_AS(SqrtRational(1, Rational(-1)), DomainError);
    CHECK(SqrtRational(-1, Rational(9, 4)).str() == "-3/2");
    CHECK(SqrtRational(-1, Rational(2, 3)).str() == "-sqrt(2/3)");
    CHECK(SqrtRational::root(Rational(2, 3)).to_double() == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("SqrtRational squares and float round trip") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Rational q = fx::random_q(rng);
        q = abs(q);
        const SqrtRational a = SqrtRational::root(q);
        REQUIRE(is_perfect_square(sqrtq_mul(a, a).radicand()));
        if (sgn(q) != 0) REQUIRE(std::fabs(a.to_double() - std::sqrt(q.get_d())) <= 1e-15 * std::sqrt(q.get_d()));
    }
}
