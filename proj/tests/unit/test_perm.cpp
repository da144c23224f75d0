#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "kronx/kron.hpp"
#include "kronx/perm.hpp"

using namespace kronx;

namespace {

Permutation random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

}  // namespace

TEST_CASE("Permutation validation and group operations") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    const Permutation p({2, 3, 1});
    CHECK(compose(p, p.inverse()) == Permutation::identity(3));
    CHECK(p.parity() == 1);
    CHECK(Permutation({2, 1, 3}).parity() == -1);
    CHECK(all_permutations(4).size() == 24);
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : all_permutations(n))
            for (const auto& b : all_permutations(n)) REQUIRE(compose(a, b).parity() == a.parity() * b.parity());
}

TEST_CASE("permutation matrices") {
    CHECK(perm_matrix<Rational>(Permutation::identity(4)) == identity(4));
    CHECK(perm_matrix<Rational>(Permutation({2, 1})) == fx::q_matrix({{"0", "1"}, {"1", "0"}}));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 6;
        const auto s = random_perm(rng, n), p = random_perm(rng, n);
        const auto Ps = perm_matrix<Rational>(s), Pp = perm_matrix<Rational>(p);
        REQUIRE(mul(Ps, Pp) == perm_matrix<Rational>(compose(p, s)));
        REQUIRE(mul(Pp, transpose(Pp)) == identity(n));
        // (P_s P_p)^{-1} = P_p^{-1} P_s^{-1}
        REQUIRE(transpose(mul(Ps, Pp)) == mul(transpose(Pp), transpose(Ps)));
        REQUIRE(perm_matrix<Rational>(p.inverse()) == transpose(Pp));
        const auto x = fx::random_ket(rng, n);
        REQUIRE(apply_perm(p, x) == apply(Pp, x));
    }
    const Ket<Rational> ab{Rational(4), Rational(9)};
    CHECK(apply_perm(Permutation({2, 1}), ab) == Ket<Rational>{Rational(9), Rational(4)});
    CHECK_THROWS_AS(apply_perm(Permutation::identity(3), ab), DimensionError);
}

TEST_CASE("swap permutation") {
    CHECK(swap_perm(2).images() == std::vector<int>{1, 3, 2, 4});
    CHECK(swap_perm(1) == Permutation::identity(1));
    for (int n = 1; n <= 32; ++n) {
        const auto s = swap_perm(n);  // constructor checks bijectivity
        if (n <= 8) REQUIRE(compose(s, s) == Permutation::identity(n * n));
    }
    // sum_{ij} X^{ij} (x) X^{ji}
    for (int n = 1; n <= 4; ++n) {
        XSum<Rational> m(n * n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m = add(m, kron(x_op(n, i, j), x_op(n, j, i)));
        REQUIRE(perm_matrix<Rational>(swap_perm(n)) == m);
    }
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 6;
        const auto x = fx::random_ket(rng, n), y = fx::random_ket(rng, n);
        REQUIRE(apply(perm_matrix<Rational>(swap_perm(n)), kron_ket(x, y)) == kron_ket(y, x));
    }
}

TEST_CASE("kron of permutations") {
    CHECK(kron_perm(Permutation::identity(3), Permutation::identity(2)) == Permutation::identity(6));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (const auto& p : all_permutations(n))
                for (const auto& s : all_permutations(m)) {
                    const auto a = perm_matrix<Rational>(kron_perm(p, s));
                    REQUIRE(a == kron(perm_matrix<Rational>(p), perm_matrix<Rational>(s)));
                    REQUIRE(mul(transpose(a), a) == identity(n * m));
                }
}

TEST_CASE("commutation permutation") {
    CHECK(commutation_perm(1, 5) == Permutation::identity(5));
    for (int n = 1; n <= 6; ++n) CHECK(commutation_perm(n, n) == swap_perm(n));
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 5, m = 1 + (i / 5) % 5;
        const auto a = fx::random_rational(rng, n), b = fx::random_rational(rng, m);
        const auto P = perm_matrix<Rational>(commutation_perm(n, m));
        REQUIRE(mul(mul(transpose(P), kron(a, b)), P) == kron(b, a));
    }
    for (int i = 0; i < 100; ++i) {
        const auto a = fx::random_rational(rng, 2), b = fx::random_rational(rng, 3);
        const auto P = perm_matrix<Rational>(commutation_perm(2, 3));
        REQUIRE(mul(mul(transpose(P), kron(a, b)), P) == kron(b, a));
    }
}

TEST_CASE("factor permutations") {
    CHECK(factor_perm(Permutation::identity(3), 2) == Permutation::identity(8));
    for (int n = 1; n <= 5; ++n) CHECK(factor_perm(Permutation({2, 1}), n) == swap_perm(n));

    // new slot l holds old factor pi(l)
    std::mt19937_64 rng(34);
    for (const auto& pi : all_permutations(3)) {
        std::vector<Ket<Rational>> x;
        for (int l = 0; l < 3; ++l) x.push_back(fx::random_ket(rng, 2));
        const auto T = perm_matrix<Rational>(factor_perm(pi, 2));
        const auto in = kron_ket(kron_ket(x[0], x[1]), x[2]);
        const auto out = kron_ket(kron_ket(x[static_cast<std::size_t>(pi(1) - 1)], x[static_cast<std::size_t>(pi(2) - 1)]),
                                  x[static_cast<std::size_t>(pi(3) - 1)]);
        REQUIRE(apply(T, in) == out);
    }
    // T_sigma T_pi = T_{pi o sigma}
    for (const auto& s : all_permutations(3))
        for (const auto& p : all_permutations(3))
            REQUIRE(mul(perm_matrix<Rational>(factor_perm(s, 2)), perm_matrix<Rational>(factor_perm(p, 2))) ==
                    perm_matrix<Rational>(factor_perm(compose(p, s), 2)));
}

TEST_CASE("symmetrizers") {
    CHECK(symmetrizer(1, 3) == identity(3));
    CHECK(antisymmetrizer(1, 3) == identity(3));
    // p = 2: 1/2 sum (1 + delta_ij)... written as (I + swap)/2
    for (int n = 1; n <= 4; ++n) {
        const auto half = Rational(1, 2);
        REQUIRE(symmetrizer(2, n) == scale(half, add(identity(n * n), perm_matrix<Rational>(swap_perm(n)))));
        REQUIRE(antisymmetrizer(2, n) == scale(half, sub(identity(n * n), perm_matrix<Rational>(swap_perm(n)))));
    }
    std::mt19937_64 rng(35);
    const auto x = fx::random_ket(rng, 2), y = fx::random_ket(rng, 2);
    const auto sxy = apply(symmetrizer(2, 2), kron_ket(x, y));
    const auto xy = kron_ket(x, y), yx = kron_ket(y, x);
    for (int k = 1; k <= 4; ++k) CHECK(sxy(k) == (xy(k) + yx(k)) / 2);
    const auto axx = apply(antisymmetrizer(2, 2), kron_ket(x, x));
    for (int k = 1; k <= 4; ++k) CHECK(axx(k) == 0);
    for (int p = 1; p <= 4; ++p)
        for (int n = 1; n <= 3; ++n) {
            const auto S = symmetrizer(p, n), A = antisymmetrizer(p, n);
            REQUIRE(mul(S, S) == S);
            REQUIRE(mul(A, A) == A);
            if (p >= 2) REQUIRE(mul(S, A).empty());
        }
    // antisymmetric tensors of rank 3 over a 2-dimensional space vanish
    CHECK(antisymmetrizer(3, 2).empty());
    CHECK_THROWS_AS(symmetrizer(3, 20, 4096), ResourceError);
    CHECK_THROWS_AS(symmetrizer(11, 1), ResourceError);
}
