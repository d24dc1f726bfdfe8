#include "oracles.hpp"

#include "concyclic/binary_form.hpp"
#include "concyclic/lattice.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace concyclic;
using namespace concyclic::lattice;

namespace {

std::set<Point> as_set(const ShellResult& r) { return {r.points.begin(), r.points.end()}; }

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

// Random positive definite integral Gram matrix: Aᵀ·A + diag.
GramMatrix random_gram(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::vector<Integer>> a(d, std::vector<Integer>(d));
    for (auto& r : a)
        for (auto& x : r) x = entry(rng);
    std::vector<std::vector<Integer>> g(d, std::vector<Integer>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) g[i][j] += a[k][i] * a[k][j];
            if (i == j) g[i][j] += 1;
        }
    return GramMatrix(g);
}

}  // namespace

TEST_CASE("Gram matrix validation") {
    CHECK_THROWS_AS(GramMatrix({{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(GramMatrix({{1, 0}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(GramMatrix({{1, 0, 0}, {0, 1, 0}}), DomainError);
    CHECK_THROWS_AS(GramMatrix(std::vector<std::vector<Integer>>{{0}}), DomainError);
    CHECK_THROWS_AS(GramMatrix(std::vector<std::vector<Integer>>{}), DomainError);
    CHECK(GramMatrix({{2, 1}, {1, 2}}).determinant() == 3);
    CHECK(GramMatrix::identity(4).determinant() == 1);
    CHECK(GramMatrix({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}).leading(2) == GramMatrix({{2, 1}, {1, 2}}));
    CHECK_THROWS_AS(GramMatrix::from_form({1, 1, 1}), DomainError);
}

TEST_CASE("form_from_gram") {
    CHECK(form_from_gram(GramMatrix({{1, 0}, {0, 1}})) == QuadForm{1, 0, 1});
    CHECK(form_from_gram(GramMatrix({{2, 1}, {1, 2}})) == QuadForm{2, 2, 2});
    CHECK(form_from_gram(GramMatrix({{1, 0}, {0, 3}})) == QuadForm{1, 0, 3});
    CHECK_THROWS_AS(form_from_gram(GramMatrix::identity(3)), DomainError);
}

TEST_CASE("gauss_reduce") {
    CHECK(gauss_reduce({1, 4, 5}) == std::pair<QuadForm, Integer>{{1, 0, 1}, 1});
    CHECK(gauss_reduce({3, 7, 5}) == std::pair<QuadForm, Integer>{{1, 1, 3}, 1});
    CHECK(gauss_reduce({2, 2, 2}) == std::pair<QuadForm, Integer>{{2, 2, 2}, 2});
    CHECK_THROWS_AS(make_form(1, 3, 1), DomainError);
    CHECK_THROWS_AS(make_form(-1, 0, -1), DomainError);
}

TEST_CASE("reduction is canonical on equivalence classes") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 400; ++trial) {
        QuadForm f{1 + (trial % 9), coef(rng), 3 + (trial % 7)};
        if (!f.positive_definite()) continue;
        Mat2 u{coef(rng), coef(rng), coef(rng), coef(rng)};
        if (u.det() != 1) continue;
        auto r1 = reduce(f);
        auto r2 = reduce(transform(f, u));
        REQUIRE(r1.reduced == r2.reduced);
        REQUIRE(transform(f, r1.basis) == r1.reduced);
        REQUIRE(r1.basis.det() == 1);
        const auto& g = r1.reduced;
        REQUIRE((abs(g.b) <= g.a && g.a <= g.c));
        REQUIRE(g.discriminant() == f.discriminant());
    }
}

TEST_CASE("automorph counts") {
    CHECK(automorphs({1, 0, 1}).size() == 4);
    CHECK(automorphs({1, 1, 1}).size() == 6);
    CHECK(automorphs({1, 0, 3}).size() == 2);
    CHECK(automorphs({2, 2, 2}).size() == 6);
    for (const auto& t : automorphs({1, 1, 1})) CHECK(transform({1, 1, 1}, t) == QuadForm{1, 1, 1});
}

TEST_CASE("represent agrees with a scan") {
    for (QuadForm f : {QuadForm{1, 0, 1}, QuadForm{1, 1, 1}, QuadForm{2, 1, 3}, QuadForm{3, 2, 5}, QuadForm{2, 2, 2},
                       QuadForm{4, 4, 6}, QuadForm{5, -3, 7}}) {
        for (long m = 0; m <= 300; ++m) {
            std::vector<std::array<Integer, 2>> expect;
            for (long x = -40; x <= 40; ++x)
                for (long y = -40; y <= 40; ++y)
                    if (f(x, y) == m) expect.push_back({Integer(x), Integer(y)});
            REQUIRE(represent(f, m) == expect);
        }
    }
    CHECK(represent({1, 0, 1}, -1).empty());
}

TEST_CASE("enumerate_shell examples") {
    auto z2 = GramMatrix::identity(2);
    CHECK(enumerate_shell(z2, rv({0, 0}), 1).points == std::vector<Point>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK(enumerate_shell(z2, rv({Rational(3, 4), 0}), Rational(73, 16)).points == std::vector<Point>{{0, -2}, {0, 2}});
    auto hex = GramMatrix({{2, 1}, {1, 2}});
    CHECK(enumerate_shell(hex, rv({0, 0}), 2).points ==
          std::vector<Point>{{-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}});
    CHECK(enumerate_shell(z2, rv({Rational(1, 2), Rational(1, 2)}), Rational(1, 4)).count() == 0);
    CHECK(enumerate_shell(z2, rv({0, 0}), -1).count() == 0);
    CHECK_THROWS_AS(enumerate_shell(z2, rv({0, 0, 0}), 1), DomainError);
}

TEST_CASE("enumerate_ball examples") {
    CHECK(enumerate_ball(GramMatrix::identity(2), rv({0, 0}), 1).count() == 5);
    CHECK(enumerate_ball(GramMatrix::identity(3), rv({0, 0, 0}), 2).count() == 19);
    CHECK(enumerate_ball(GramMatrix::identity(2), rv({Rational(1, 2), Rational(1, 2)}), Rational(1, 4)).count() == 0);
}

TEST_CASE("shell and ball enumeration agree with a box scan") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> cnum(-7, 7), cden(1, 4), step(0, 1), rad(0, 24);
    for (int trial = 0; trial < 90; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto g = random_gram(rng, d);
        RationalVector c(d);
        for (auto& x : c) x = Rational(cnum(rng), cden(rng));
        // Radius taken from a nearby lattice point so shells are rarely empty.
        Point v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = c[i].floor() + step(rng);
        Rational r2 = oracle::quad(g.rows(), v, c);
        Rational rb = Rational(rad(rng), cden(rng));
        // The smallest eigenvalue is at least 1, so Euclidean offsets stay below √r².
        const long box = num::isqrt(std::max(r2, rb).ceil()).get_si() + 2;
        INFO("trial ", trial);
        REQUIRE(as_set(enumerate_shell(g, c, r2)) == oracle::shell(g.rows(), c, r2, box));
        REQUIRE(as_set(enumerate_ball(g, c, rb)) == oracle::ball(g.rows(), c, rb, box));
    }
}

TEST_CASE("large 2D shells go through the binary solver") {
    auto g = GramMatrix({{3, 1}, {1, 5}});
    RationalVector c = rv({Rational(1, 3), 0});
    // 9·Q(v - c) = 3X² + 2XY + 5Y² with X = 3x - 1, Y = 3y.
    auto nine_q = [](long x, long y) { return 3 * (3 * x - 1) * (3 * x - 1) + 2 * (3 * x - 1) * 3 * y + 45 * y * y; };
    const long target = nine_q(400, -300);
    auto fast = enumerate_shell(g, c, Rational(target, 9));
    std::set<Point> slow;
    for (long y = -800; y <= 800; ++y)
        for (long x = -800; x <= 800; ++x)
            if (nine_q(x, y) == target) slow.insert({x, y});
    CHECK(slow.count({400, -300}) == 1);
    CHECK(as_set(fast) == slow);
}

TEST_CASE("visit_shell stops early") {
    int seen = 0;
    bool finished = visit_shell(GramMatrix::identity(3), rv({0, 0, 0}), 2, [&](const Point&) { return ++seen < 3; });
    CHECK_FALSE(finished);
    CHECK(seen == 3);
}
