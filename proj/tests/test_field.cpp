#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orecheb/ratfunc.hpp"

using namespace orecheb;

namespace {

Poly random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<BigRat> c(static_cast<size_t>(rng() % (maxdeg + 1)) + 1);
    for (auto& x : c) x = BigRat(coef(rng), 1 + int(rng() % 3));
    return Poly(std::move(c));
}

RatFunc random_ratfunc(std::mt19937& rng, int maxdeg) {
    Poly d = random_poly(rng, maxdeg);
    if (d.is_zero()) d = Poly::one();
    return RatFunc(random_poly(rng, maxdeg), d);
}

}  // namespace

TEST_CASE("BigRat canonical form and arithmetic") {
    CHECK(BigRat(2, 4) == BigRat(1, 2));
    CHECK(BigRat(-2, -4) == BigRat(1, 2));
    CHECK(BigRat(2, -4) == BigRat(-1, 2));
    CHECK(BigRat(0, 7).den() == 1);
    CHECK(BigRat(1, 2) + BigRat(1, 3) == BigRat(5, 6));
    CHECK(BigRat(1, 2) * BigRat(2, 3) == BigRat(1, 3));
    CHECK(BigRat(3, 4).inverse() == BigRat(4, 3));
    CHECK(BigRat(-5).abs() == BigRat(5));
    CHECK(BigRat(2).pow(10) == BigRat(1024));
    CHECK_THROWS_AS(BigRat(1).operator/=(BigRat(0)), std::domain_error);
    CHECK_THROWS_AS(BigRat(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(BigRat(1, 0), std::domain_error);
}

TEST_CASE("rat_gcd") {
    CHECK(rat_gcd(BigRat(4, 3), BigRat(2, 9)) == BigRat(2, 9));
    CHECK(rat_gcd(BigRat(0), BigRat(-3, 2)) == BigRat(3, 2));
    CHECK(rat_gcd(BigRat(6), BigRat(4)) == BigRat(2));
}

TEST_CASE("Poly basics") {
    Poly n = Poly::variable();
    SUBCASE("gcd of common-root case") {
        Poly a = n * n - Poly::one();     // n^2 - 1
        Poly b = n - Poly::one();         // n - 1
        CHECK(poly_gcd(a, b) == b);
    }
    SUBCASE("shift substitute") {
        Poly sq = n * n;
        CHECK(sq.shifted(BigRat(1)) == Poly{BigRat(1), BigRat(2), BigRat(1)});
    }
    SUBCASE("evaluation") {
        Poly p{BigRat(1), BigRat(2)};  // 2n + 1
        CHECK(p.eval(BigRat(3)) == BigRat(7));
    }
    SUBCASE("zero divisor") {
        CHECK_THROWS_WITH_AS(Poly::divmod(n, Poly()), "Poly: zero divisor", std::domain_error);
    }
    SUBCASE("degree bookkeeping") {
        CHECK(Poly().degree() == -1);
        CHECK(Poly{BigRat(0)}.is_zero());
        CHECK((n - n).is_zero());
    }
}

TEST_CASE("Poly ring axioms on random instances") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        Poly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            auto [q, r] = Poly::divmod(a * b, b);
            CHECK(q == a);
            CHECK(r.is_zero());
        }
        // evaluation is a ring morphism
        BigRat t2(int(rng() % 7) - 3);
        CHECK((a * b).eval(t2) == a.eval(t2) * b.eval(t2));
        CHECK((a + b).eval(t2) == a.eval(t2) + b.eval(t2));
    }
}

TEST_CASE("Poly content, primitive part, interpolation") {
    Poly p{BigRat(2, 3), BigRat(4, 3), BigRat(-2)};
    CHECK(p.content() == BigRat(2, 3));
    CHECK(p.primitive_part().content() == BigRat(1));
    CHECK(p.primitive_part().leading().sign() > 0);

    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
        CHECK(poly_mul_interp(a, b) == a * b);
    }
    // interpolation recovers the polynomial
    Poly q{BigRat(1), BigRat(-3), BigRat(0), BigRat(2)};
    std::vector<BigRat> xs, ys;
    for (int i = 0; i < 4; ++i) {
        xs.push_back(BigRat(i));
        ys.push_back(q.eval(BigRat(i)));
    }
    CHECK(poly_interpolate(xs, ys) == q);
}

TEST_CASE("RatFunc normalization and arithmetic") {
    Poly n = Poly::variable();
    SUBCASE("partial fraction identity") {
        RatFunc a(Poly::one(), n - Poly::one());
        RatFunc b(Poly::one(), n + Poly::one());
        RatFunc want(Poly{BigRat(0), BigRat(2)}, n * n - Poly::one());
        CHECK(a + b == want);
    }
    SUBCASE("monic denominator convention") {
        RatFunc r(Poly{BigRat(0), BigRat(2)}, Poly{BigRat(0), BigRat(0), BigRat(4)});  // 2n/4n^2
        CHECK(r.den() == n);
        CHECK(r.num() == Poly(BigRat(1, 2)));
    }
    SUBCASE("inverse") {
        RatFunc r(n + Poly::one(), n);
        CHECK(r.inverse() == RatFunc(n, n + Poly::one()));
        CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
    }
    SUBCASE("normalization is canonical and idempotent") {
        std::mt19937 rng(5);
        for (int t = 0; t < 30; ++t) {
            RatFunc r = random_ratfunc(rng, 4);
            CHECK(r.den().leading() == BigRat(1));
            CHECK(poly_gcd(r.num().is_zero() ? r.den() : r.num(), r.den()).degree() == 0);
            CHECK(RatFunc(r.num(), r.den()) == r);
        }
    }
    SUBCASE("pole reporting") {
        RatFunc r(Poly::one(), n - Poly(BigRat(3)));
        CHECK(r.has_pole_at(BigRat(3)));
        CHECK_THROWS_WITH_AS(r.eval(BigRat(3)), "RatFunc: evaluation at pole 3", std::domain_error);
    }
}

TEST_CASE("RatFunc field axioms on random instances") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        RatFunc a = random_ratfunc(rng, 3), b = random_ratfunc(rng, 3), c = random_ratfunc(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("RatFunc shift and derivative") {
    Poly n = Poly::variable();
    RatFunc r(Poly::one(), n);
    CHECK(r.shifted_arg(BigRat(2)) == RatFunc(Poly::one(), n + Poly(BigRat(2))));
    CHECK(r.derivative() == RatFunc(-Poly::one(), n * n));
}
