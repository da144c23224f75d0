#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "fixtures.hpp"
#include "kronx/coupling.hpp"

using namespace kronx;

namespace {

XSum<SqrtRational> sparse(int n, const std::vector<std::tuple<int, int, std::string>>& ts) {
    XSum<SqrtRational> a(n);
    for (const auto& [i, j, v] : ts) a.add_term(i, j, fx::sq(v));
    return a;
}

std::vector<int> blocks_of(const CouplingLayout& L) {
    std::vector<int> b;
    for (int k = 1; k <= L.n0; ++k) b.push_back(L.block_twoJ(k));
    return b;
}

std::vector<Rational> diag_sorted(const XSum<SqrtRational>& a) {
    std::vector<Rational> d;
    for (int i = 1; i <= a.order(); ++i) d.push_back(*a.coef(i, i).as_rational());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("coupling layout") {
    const auto L = layout(1, 1);
    CHECK(L.n1 == 2);
    CHECK(L.n2 == 2);
    CHECK(L.n0 == 2);
    CHECK(L.dims == std::vector<int>{3, 1});
    CHECK(L.offsets == std::vector<int>{0, 3, 4});
    const auto M = layout(2, 1);
    CHECK(M.dims == std::vector<int>{4, 2});
    CHECK(M.block_twoJ(1) == 3);
    CHECK(M.block_twoJ(2) == 1);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            const auto l = layout(a, b);
            REQUIRE(l.n0 == std::min(a, b) + 1);
            REQUIRE(l.z(l.n0) == l.total());
            for (int k = 1; k <= l.n0; ++k) REQUIRE(l.d(k) == l.block_twoJ(k) + 1);
        }
    CHECK_THROWS_AS(layout(-1, 2), DomainError);
}

TEST_CASE("coupled generators in the product basis") {
    CHECK(product_gen(1, 1, Generator::plus) ==
          sparse(4, {{1, 2, "1"}, {1, 3, "1"}, {2, 4, "1"}, {3, 4, "1"}}));
    CHECK(product_gen(1, 2, Generator::plus) == sparse(6, {{1, 2, "s2"},
                                                           {2, 3, "s2"},
                                                           {4, 5, "s2"},
                                                           {5, 6, "s2"},
                                                           {1, 4, "1"},
                                                           {2, 5, "1"},
                                                           {3, 6, "1"}}));
    CHECK(product_gen(2, 1, Generator::plus) == sparse(6, {{1, 2, "1"},
                                                           {3, 4, "1"},
                                                           {5, 6, "1"},
                                                           {1, 3, "s2"},
                                                           {2, 4, "s2"},
                                                           {3, 5, "s2"},
                                                           {4, 6, "s2"}}));
    CHECK(product_gen(1, 1, Generator::j3) == sparse(4, {{1, 1, "1"}, {4, 4, "-1"}}));
}

TEST_CASE("block generators") {
    CHECK(block_gen_formula(1, 1, Generator::j3) == sparse(4, {{1, 1, "1"}, {3, 3, "-1"}}));
    CHECK(block_gen_formula(1, 1, Generator::plus) == sparse(4, {{1, 2, "s2"}, {2, 3, "s2"}}));
    CHECK(block_gen_formula(2, 1, Generator::j3) == sparse(6, {{1, 1, "3/2"},
                                                               {2, 2, "1/2"},
                                                               {3, 3, "-1/2"},
                                                               {4, 4, "-3/2"},
                                                               {5, 5, "1/2"},
                                                               {6, 6, "-1/2"}}));
    CHECK(block_gen_formula(2, 1, Generator::plus) ==
          sparse(6, {{1, 2, "s3"}, {2, 3, "2"}, {3, 4, "s3"}, {5, 6, "1"}}));
    CHECK(direct_sum({}).order() == 0);
}

TEST_CASE("the two constructions of each operator agree") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (const auto g : {Generator::j3, Generator::plus, Generator::minus}) {
                REQUIRE(product_gen(a, b, g) == product_gen_ceiling(a, b, g));
                const auto bo = block_gen(a, b, g);
                REQUIRE(bo.flat() == block_gen_formula(a, b, g));
                REQUIRE(static_cast<int>(bo.blocks.size()) == bo.layout.n0);
            }
}

TEST_CASE("su(2) laws on both sides, equal J3 spectra") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            const auto L = layout(a, b);
            const auto p3 = product_gen(a, b, Generator::j3), pp = product_gen(a, b, Generator::plus),
                       pm = product_gen(a, b, Generator::minus);
            REQUIRE(check_su2_laws(p3, pp, pm).ok());
            REQUIRE(adjoint(pp) == pm);
            const auto b3 = block_gen_formula(a, b, Generator::j3), bp = block_gen_formula(a, b, Generator::plus),
                       bm = block_gen_formula(a, b, Generator::minus);
            REQUIRE(check_su2_laws(b3, bp, bm, blocks_of(L)).ok());
            REQUIRE(diag_sorted(p3) == diag_sorted(b3));
        }
}
