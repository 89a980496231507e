#include "doctest.h"
#include "test_support.hpp"

using namespace qlf;
using namespace qlf::test;

TEST_CASE("grlex order: degree first, then lexicographic by variable index") {
    CHECK(grlex_compare({2, 0}, {1, 1}) > 0); // equal degree, first exponent decides
    CHECK(grlex_compare({1, 1}, {0, 2}) > 0);
    CHECK(grlex_compare({0, 3}, {1, 1}) > 0); // higher total degree wins
    CHECK(grlex_compare({1, 0}, {1, 0}) == 0);
}

TEST_CASE("polynomial terms are held in descending order without zeros") {
    auto f = make_field(3, {"x", "y"});
    Polynomial p = Polynomial::from_terms(
        f, {{{0, 1}, 2}, {{2, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 5}});
    // y-terms combine to 3 = 0 mod 3 and disappear
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms()[0].mono == Monomial{2, 0});
    CHECK(p.terms()[1].mono == Monomial{0, 0});
    CHECK(p.terms()[1].coeff == 2);
}

TEST_CASE("arithmetic in characteristic p") {
    auto f = make_field(2, {"x", "y"});
    Polynomial x = Polynomial::variable(f, 0);
    Polynomial y = Polynomial::variable(f, 1);
    CHECK((x + x).is_zero());
    CHECK((x + y) * (x + y) == x * x + y * y); // freshman's dream
}

TEST_CASE("exact division") {
    auto f = make_field(5, {"x", "y"});
    Polynomial x = Polynomial::variable(f, 0);
    Polynomial y = Polynomial::variable(f, 1);
    Polynomial a = (x + y).pow(3) * (x * y + Polynomial::constant(f, 2));
    auto q = a.divided_by((x + y).pow(2));
    REQUIRE(q.has_value());
    CHECK(*q == (x + y) * (x * y + Polynomial::constant(f, 2)));
    CHECK(!(x * y + Polynomial::constant(f, 1)).divided_by(x + y).has_value());
}

TEST_CASE("gcd: spec examples") {
    auto f2 = make_field(2, {"x", "y"});
    Polynomial x = Polynomial::variable(f2, 0);
    Polynomial y = Polynomial::variable(f2, 1);

    SUBCASE("gcd(f, 0) is f normalized") {
        Polynomial p = (x + y).scaled(1) * x; // monic already in char 2
        CHECK(poly_gcd(p, Polynomial::zero(f2)) == p.monic());
        CHECK(poly_gcd(Polynomial::zero(f2), Polynomial::zero(f2)).is_zero());
    }
    SUBCASE("x^2+y^2 = (x+y)^2 over F_2, so gcd with x+y is x+y") {
        Polynomial a = x * x + y * y;
        Polynomial g = poly_gcd(a, x + y);
        CHECK(g == x + y);
        // oracle: trial division both ways
        CHECK(a.divided_by(g).has_value());
        CHECK((x + y).divided_by(g).has_value());
    }
    SUBCASE("coprime variables") { CHECK(poly_gcd(x, y) == Polynomial::constant(f2, 1)); }
}

TEST_CASE("gcd properties on random inputs") {
    Rng rng(7);
    for (uint32_t p : {2u, 3u, 5u}) {
        auto f = make_field(p, {"x", "y", "z"});
        for (int iter = 0; iter < 40; ++iter) {
            Polynomial g = random_nonzero_poly(rng, f);
            Polynomial a = random_poly(rng, f) * g;
            Polynomial b = random_poly(rng, f) * g;
            Polynomial d = poly_gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(d.is_zero());
                continue;
            }
            // divides both inputs, is divided by the common factor, monic
            if (!a.is_zero()) CHECK(a.divided_by(d).has_value());
            if (!b.is_zero()) CHECK(b.divided_by(d).has_value());
            CHECK(d.divided_by(poly_gcd(g, d)).has_value());
            if (!(a.is_zero() && b.is_zero())) CHECK(d.leading().coeff == 1);
            if (!a.is_zero() && !b.is_zero()) CHECK(d.divided_by(g.monic()).has_value());
        }
    }
}

TEST_CASE("pth root of polynomials") {
    auto f = make_field(3, {"x", "y"});
    Polynomial x = Polynomial::variable(f, 0);
    Polynomial y = Polynomial::variable(f, 1);
    Polynomial a = (x + y.pow(2)).pow(3);
    auto r = a.pth_root();
    REQUIRE(r.has_value());
    CHECK(*r == x + y.pow(2));
    CHECK(!(x * y).pth_root().has_value());
}

TEST_CASE("printing is canonical and parseable") {
    auto f = make_field(3, {"x", "y"});
    Rng rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial p = random_poly(rng, f);
        RationalFunction a{p};
        CHECK(parse_expression(f, a.to_string()) == a);
    }
    CHECK(Polynomial::zero(f).to_string() == "0");
    Polynomial two_x2y = Polynomial::monomial(f, {2, 1}, 2);
    CHECK(two_x2y.to_string() == "2*x^2*y");
}
