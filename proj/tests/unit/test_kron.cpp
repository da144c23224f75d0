#include <doctest.h>

#include "fixtures.hpp"
#include "kronx/su2.hpp"
#include "kronx/kron.hpp"
#include "kronx/models.hpp"

using namespace kronx;

TEST_CASE("kron_term index rule") {
    CHECK(kron_term({2, 1, 2}, {3, 2, 3}) == HubbardTerm{6, 2, 6});
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            const auto t = kron_term({m, i, j}, {n, k, l});
                            REQUIRE(kron(x_op(m, i, j), x_op(n, k, l)) == x_op(t.order, t.row, t.col));
                            // transpose of the product is the product of transposes
                            REQUIRE(kron_term({m, j, i}, {n, l, k}) == HubbardTerm{t.order, t.col, t.row});
                        }
}

TEST_CASE("basis_kron_index") {
    CHECK(basis_kron_index(1, 4, 1, 5) == 1);
    CHECK(basis_kron_index(2, 2, 1, 2) == 3);
    CHECK_THROWS_AS(basis_kron_index(3, 2, 1, 2), IndexError);
    for (int n1 = 1; n1 <= 8; ++n1)
        for (int n2 = 1; n2 <= 8; ++n2) {
            std::vector<int> seen(static_cast<std::size_t>(n1 * n2) + 1, 0);
            for (int i = 1; i <= n1; ++i)
                for (int k = 1; k <= n2; ++k) ++seen[static_cast<std::size_t>(basis_kron_index(i, n1, k, n2))];
            for (int p = 1; p <= n1 * n2; ++p) REQUIRE(seen[static_cast<std::size_t>(p)] == 1);
        }
}

TEST_CASE("kron matches the block definition") {
    CHECK(kron(identity(3), identity(4)) == identity(12));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> ord(1, 8);
    for (int i = 0; i < 200; ++i) {
        const auto a = fx::random_rational(rng, ord(rng)), b = fx::random_rational(rng, ord(rng));
        const auto ref = fx::kron_blocks(a, b);
        REQUIRE(kron(a, b) == ref);
        REQUIRE(kron_closed(a, b) == ref);
    }
}

TEST_CASE("threaded kron is identical to the sequential one") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const auto a = fx::random_rational(rng, 9), b = fx::random_rational(rng, 7);
        const auto one = kron(a, b, 1);
        for (int t : {2, 3, 8}) REQUIRE(kron(a, b, t) == one);
    }
}

TEST_CASE("kron_many and kron_power") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> ord(1, 4);
    const auto single = fx::random_rational(rng, 3);
    CHECK(kron_many(std::vector{single}) == single);
    CHECK(kron_many_closed(std::vector{single}) == single);
    for (int i = 0; i < 50; ++i) {
        const auto a = fx::random_rational(rng, ord(rng)), b = fx::random_rational(rng, ord(rng)),
                   c = fx::random_rational(rng, ord(rng));
        const auto ref = fx::kron_blocks(fx::kron_blocks(a, b), c);
        REQUIRE(kron(kron(a, b), c) == kron(a, kron(b, c)));
        REQUIRE(kron_many(std::vector{a, b, c}) == ref);
        REQUIRE(kron_many_closed(std::vector{a, b, c}) == ref);
    }
    for (int i = 0; i < 20; ++i) {
        const auto a = fx::random_rational(rng, 2 + i % 2);
        auto ref = a;
        CHECK(kron_power(a, 1) == a);
        CHECK(kron_power_closed(a, 1) == a);
        for (int t = 2; t <= 4; ++t) {
            ref = fx::kron_blocks(ref, a);
            REQUIRE(kron_power(a, t) == ref);
            REQUIRE(kron_power_closed(a, t) == ref);
        }
    }
    CHECK_THROWS_AS(kron_power(single, 0), DomainError);
    CHECK_THROWS_AS(kron_many(std::vector<XSum<Rational>>{}), DimensionError);
}

TEST_CASE("mixed product, factorization, trace and determinant") {
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> ord(1, 6);
    for (int i = 0; i < 200; ++i) {
        const int m = ord(rng), n = ord(rng);
        const auto a = fx::random_rational(rng, m), c = fx::random_rational(rng, m);
        const auto b = fx::random_rational(rng, n), d = fx::random_rational(rng, n);
        REQUIRE(mul(kron(a, b), kron(c, d)) == kron(mul(a, c), mul(b, d)));
        REQUIRE(mul(kron(a, identity(n)), kron(identity(m), d)) == kron(a, d));
        REQUIRE(trace(kron(a, b)) == trace(a) * trace(b));
    }
    for (int n = 1; n <= 5; ++n) {
        const auto a = fx::random_rational(rng, n, 0.9), b = fx::random_rational(rng, n, 0.9);
        Rational da = det_dense(to_dense(a)), db = det_dense(to_dense(b)), want = 1;
        for (int i = 0; i < n; ++i) want *= da * db;
        REQUIRE(det_dense(to_dense(kron(a, b))) == want);
    }
}

TEST_CASE("bilinearity and scalars") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 50; ++i) {
        const auto a = fx::random_rational(rng, 3), b = fx::random_rational(rng, 3), c = fx::random_rational(rng, 2);
        const Rational s = fx::random_q(rng);
        REQUIRE(kron(add(a, b), c) == add(kron(a, c), kron(b, c)));
        REQUIRE(kron(c, add(a, b)) == add(kron(c, a), kron(c, b)));
        REQUIRE(kron(scale(s, a), c) == scale(s, kron(a, c)));
        REQUIRE(kron(a, scale(s, c)) == scale(s, kron(a, c)));
    }
}

TEST_CASE("adjoint of a product of complex matrices") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 30; ++i) {
        const auto a = fx::random_complex(rng, 3), b = fx::random_complex(rng, 4);
        REQUIRE(max_abs_diff(adjoint(kron(a, b)), kron(adjoint(a), adjoint(b))) < 1e-12);
    }
}

TEST_CASE("Hadamard matrices") {
    const auto h = hadamard();
    CHECK(h == fx::sq_matrix({{"s1/2", "s1/2"}, {"s1/2", "-s1/2"}}));
    const auto h4 = fx::sq_matrix({{"1/2", "1/2", "1/2", "1/2"},
                                   {"1/2", "-1/2", "1/2", "-1/2"},
                                   {"1/2", "1/2", "-1/2", "-1/2"},
                                   {"1/2", "-1/2", "-1/2", "1/2"}});
    CHECK(kron(h, h) == h4);
    CHECK(hadamard_power(2).matrix() == h4);
    CHECK(hadamard_power(2, HadamardForm::binary).matrix() == h4);
    for (int t = 1; t <= 6; ++t) {
        const auto c = hadamard_power(t), b = hadamard_power(t, HadamardForm::binary);
        REQUIRE(c.signs == b.signs);
        REQUIRE(c.scale == SqrtRational::root(Rational(1, 1L << t)));
        const auto m = c.matrix();
        REQUIRE(m == kron_power(h, t));
        REQUIRE(mul(m, adjoint(m)) == identity<SqrtRational>(1 << t));
    }
    // H4 |e1> is the equal superposition
    Ket<SqrtRational> e1(4);
    e1(1) = SqrtRational(1);
    const auto y = apply(h4, e1);
    for (int k = 1; k <= 4; ++k) CHECK(y(k) == SqrtRational::from_rational(Rational(1, 2)));
    CHECK(hadamard_exponent(4, 4, 2, HadamardForm::ceiling) % 2 == 0);
    CHECK_THROWS_AS(hadamard_power(0), DomainError);
}

TEST_CASE("apply Hadamard to a ket") {
    Ket<SqrtRational> x{SqrtRational(3), SqrtRational(1)};
    const auto y = apply(hadamard(), x);
    CHECK(y(1) == SqrtRational::root(8));  // 4/sqrt 2
    CHECK(y(2) == SqrtRational::root(2));  // 2/sqrt 2
}

TEST_CASE("eigenpairs of Kronecker products and sums") {
    const auto sz = to_complex(pauli_z());
    std::vector<EigenPair> pz{{1.0, Ket<ComplexFloat>{1.0, 0.0}}, {-1.0, Ket<ComplexFloat>{0.0, 1.0}}};
    const auto rep = eigen_pair_check(sz, sz, pz, pz);
    CHECK(rep.ok());
    CHECK(rep.max_product_residual < 1e-15);
    // products of the diagonals: +1, -1, -1, +1
    const auto zz = kron(sz, sz);
    CHECK(zz.coef(1, 1) == 1.0);
    CHECK(zz.coef(2, 2) == -1.0);
    CHECK(zz.coef(3, 3) == -1.0);
    CHECK(zz.coef(4, 4) == 1.0);

    // J3 eigenvalues add in the Kronecker sum
    const auto a = to_complex(j3(Irrep(2))), b = to_complex(j3(Irrep(1)));
    std::vector<EigenPair> pa, pb;
    for (int k = 1; k <= 3; ++k) {
        Ket<ComplexFloat> e(3);
        e(k) = 1.0;
        pa.push_back({a.coef(k, k), e});
    }
    for (int k = 1; k <= 2; ++k) {
        Ket<ComplexFloat> e(2);
        e(k) = 1.0;
        pb.push_back({b.coef(k, k), e});
    }
    CHECK(eigen_pair_check(a, b, pa, pb).ok());
    // a wrong pair is reported
    pb[0].value = 3.0;
    const auto bad = eigen_pair_check(a, b, pa, pb);
    CHECK_FALSE(bad.ok());
    CHECK(bad.failures.size() == 3);
}
