#include "doctest.h"
#include "test_support.hpp"

#include "qlf/differential.hpp"

using namespace qlf;
using namespace qlf::test;

namespace {

DifferentialForm dt(const FieldPtr& f, std::initializer_list<uint32_t> idx) {
    return DifferentialForm::basis_wedge(f, IndexTuple(idx));
}

} // namespace

TEST_CASE("index tuple enumeration") {
    auto t = index_tuples(3, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == IndexTuple{0, 1});
    CHECK(t[1] == IndexTuple{0, 2});
    CHECK(t[2] == IndexTuple{1, 2});
    CHECK(index_tuples(3, 0).size() == 1);
    CHECK(index_tuples(3, 4).empty());
    CHECK(index_tuples(0, 0).size() == 1);
}

TEST_CASE("d of an element: spec examples") {
    auto f = make_field(2, {"x", "y"});
    SUBCASE("d x = dt_x") { CHECK(d_of_element(expr(f, "x")) == dt(f, {0})); }
    SUBCASE("d(x^2 y) = x^2 dy in char 2 (Leibniz oracle)") {
        auto a = expr(f, "x^2");
        auto b = expr(f, "y");
        auto lhs = d_of_element(a * b);
        CHECK(lhs == d_of_element(b).scaled(a) + d_of_element(a).scaled(b));
        CHECK(lhs == dt(f, {1}).scaled(expr(f, "x^2")));
    }
    SUBCASE("d of constants vanishes") { CHECK(d_of_element(RationalFunction::one(f)).is_zero()); }
}

TEST_CASE("wedge: antisymmetry, sign rule, scalar carry") {
    auto f3 = make_field(3, {"x", "y", "z"});
    CHECK(wedge(dt(f3, {0}), dt(f3, {0})).is_zero());
    CHECK(wedge(dt(f3, {1}), dt(f3, {0})) == dt(f3, {0, 1}).scaled(-RationalFunction::one(f3)));
    auto f2 = make_field(2, {"x", "y", "z"});
    CHECK(wedge(dt(f2, {1}), dt(f2, {0})) == dt(f2, {0, 1})); // -1 = 1 in char 2
    CHECK(wedge(dt(f2, {1}).scaled(expr(f2, "x")), dt(f2, {2})) ==
          dt(f2, {1, 2}).scaled(expr(f2, "x")));
}

TEST_CASE("wedge is associative and bilinear on random forms") {
    Rng rng(53);
    auto f = make_field(3, {"x", "y", "z"});
    auto random_form = [&](int deg) {
        DifferentialForm w = DifferentialForm::zero(f, deg);
        for (const auto& idx : index_tuples(3, deg))
            if (pick(rng, 2) == 0) w = w + DifferentialForm::basis_wedge(f, idx).scaled(random_rf(rng, f));
        return w;
    };
    for (int iter = 0; iter < 12; ++iter) {
        auto a = random_form(1);
        auto b = random_form(1);
        auto c = random_form(1);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
        CHECK(wedge(a, a).is_zero()); // odd degree
    }
}

TEST_CASE("d operator: spec examples and d after d") {
    auto f = make_field(2, {"x", "y", "z"});
    SUBCASE("d(x dy) = dx ^ dy") {
        auto w = dt(f, {1}).scaled(expr(f, "x"));
        CHECK(d_operator(w) == dt(f, {0, 1}));
    }
    SUBCASE("d(x^2 dy) = 0 in char 2") {
        CHECK(d_operator(dt(f, {1}).scaled(expr(f, "x^2"))).is_zero());
    }
    SUBCASE("d after d vanishes on random elements") {
        Rng rng(59);
        for (uint32_t p : {2u, 3u}) {
            auto g = make_field(p, {"x", "y", "z"});
            for (int iter = 0; iter < 25; ++iter) {
                auto a = random_rf(rng, g);
                CHECK(d_operator(d_of_element(a)).is_zero());
            }
        }
    }
}

TEST_CASE("logarithmic forms") {
    auto f = make_field(2, {"x", "y"});
    CHECK(log_form({expr(f, "x")}) == dt(f, {0}).scaled(expr(f, "1/x")));
    CHECK(log_form({expr(f, "x"), expr(f, "x")}).is_zero());
    // d(xy)/(xy) = dx/x + dy/y by Leibniz
    CHECK(log_form({expr(f, "x*y")}) ==
          dt(f, {0}).scaled(expr(f, "1/x")) + dt(f, {1}).scaled(expr(f, "1/y")));
    CHECK_THROWS_AS(log_form({RationalFunction::zero(f)}), Error);
}

TEST_CASE("p-independence matches nonvanishing wedges") {
    Rng rng(61);
    auto f = make_field(2, {"x", "y", "z"});
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<RationalFunction> s;
        std::size_t n = 1 + pick(rng, 3);
        for (std::size_t i = 0; i < n; ++i) s.push_back(random_rf(rng, f));
        DifferentialForm w = DifferentialForm::scalar(RationalFunction::one(f));
        for (const auto& a : s) w = wedge(w, d_of_element(a));
        CHECK(p_independent(s) == !w.is_zero());
    }
}

TEST_CASE("set wedge nonzero: spec examples") {
    auto f = make_field(2, {"x", "y"});
    SUBCASE("dx ^ dx = 0") {
        auto r = set_wedge_nonzero({{{expr(f, "x")}, {expr(f, "x")}}});
        CHECK(!r.nonzero);
    }
    SUBCASE("dx ^ dy != 0 with witness") {
        auto r = set_wedge_nonzero({{{expr(f, "x")}, {expr(f, "y")}}});
        REQUIRE(r.nonzero);
        CHECK(r.transversal[0] == expr(f, "x"));
        CHECK(r.transversal[1] == expr(f, "y"));
    }
    SUBCASE("S1={x,y}, S2={x}: witness is (y,x)") {
        auto r = set_wedge_nonzero({{{expr(f, "x"), expr(f, "y")}, {expr(f, "x")}}});
        REQUIRE(r.nonzero);
        CHECK(r.transversal[0] == expr(f, "y"));
        CHECK(r.transversal[1] == expr(f, "x"));
    }
}

TEST_CASE("ann_bruteforce: hand-solved three-unknown systems") {
    auto f = make_field(2, {"x", "y", "z"});
    // unknowns a,b,c in w = a dx + b dy + c dz
    SUBCASE("U = {dx}, n = 1: w ^ dx = 0 forces b = c = 0") {
        auto s = ann_bruteforce(f, {dt(f, {0})}, 1);
        REQUIRE(s.dimension() == 1);
        CHECK(s.rows[0] == dt(f, {0}));
    }
    SUBCASE("U = {dx, dy}, n = 2: only dx^dy survives both constraints") {
        auto s = ann_bruteforce(f, {dt(f, {0}), dt(f, {1})}, 2);
        REQUIRE(s.dimension() == 1);
        CHECK(s.rows[0] == dt(f, {0, 1}));
    }
    SUBCASE("U = {dx^dy}, n = 1: c dz ^ dx^dy != 0 forces c = 0") {
        auto s = ann_bruteforce(f, {dt(f, {0, 1})}, 1);
        REQUIRE(s.dimension() == 2);
        CHECK(s.rows[0] == dt(f, {0}));
        CHECK(s.rows[1] == dt(f, {1}));
    }
    SUBCASE("annihilation property holds for every basis row") {
        auto u = wedge(d_of_element(expr(f, "x*y")), d_of_element(expr(f, "z")));
        auto s = ann_bruteforce(f, {u}, 1);
        for (const auto& row : s.rows) CHECK(wedge(row, u).is_zero());
    }
    SUBCASE("empty and degenerate inputs") {
        CHECK(subspace_equal(ann_bruteforce(f, {}, 1), full_space(f, 1)));
        CHECK(ann_bruteforce(f, {dt(f, {0})}, 4).dimension() == 0); // n > m
        // n = 0 against a nonzero constraint: only the zero scalar
        CHECK(ann_bruteforce(f, {dt(f, {0})}, 0).dimension() == 0);
        // wedge overflow m: every 1-form annihilates a 3-form over m=3
        CHECK(subspace_equal(ann_bruteforce(f, {dt(f, {0, 1, 2})}, 1), full_space(f, 1)));
    }
}

TEST_CASE("subspace calculus") {
    auto f = make_field(2, {"x", "y"});
    SUBCASE("equal spans have identical echelon rows") {
        auto a = echelonize(f, 1, {dt(f, {0}), dt(f, {1})});
        auto b = echelonize(f, 1, {dt(f, {1}), dt(f, {0}) + dt(f, {1})});
        CHECK(subspace_equal(a, b));
    }
    SUBCASE("different spans differ") {
        auto a = echelonize(f, 1, {dt(f, {0})});
        auto b = echelonize(f, 1, {dt(f, {1})});
        CHECK(!subspace_equal(a, b));
    }
    SUBCASE("degree mismatch is an error") {
        auto a = echelonize(f, 1, {dt(f, {0})});
        auto b = echelonize(f, 2, {});
        CHECK_THROWS_AS(subspace_equal(a, b), Error);
    }
    SUBCASE("membership") {
        auto s = echelonize(f, 1, {dt(f, {0}).scaled(expr(f, "x"))});
        CHECK(subspace_contains(s, dt(f, {0}).scaled(expr(f, "y"))));
        CHECK(!subspace_contains(s, dt(f, {1})));
    }
}

TEST_CASE("expand_generator_set: spec examples") {
    auto f2 = make_field(2, {"x", "y"});
    auto f3 = make_field(2, {"x", "y", "z"});
    SUBCASE("[(x;0)] in Omega^1") {
        GeneratorSet g{f2, 1, {GenItem{{expr(f2, "x")}, 0, GenStyle::Omega, false}}};
        auto s = expand_generator_set(g);
        REQUIRE(s.dimension() == 1);
        CHECK(s.rows[0] == dt(f2, {0}));
    }
    SUBCASE("[(x;1)] in Omega^2 over three variables") {
        GeneratorSet g{f3, 2, {GenItem{{expr(f3, "x")}, 1, GenStyle::Omega, false}}};
        auto s = expand_generator_set(g);
        REQUIRE(s.dimension() == 2);
        CHECK(s.rows[0] == dt(f3, {0, 1}));
        CHECK(s.rows[1] == dt(f3, {0, 2}));
    }
    SUBCASE("[(x;0),(y;0)] in Omega^1") {
        GeneratorSet g{f2, 1,
                       {GenItem{{expr(f2, "x")}, 0, GenStyle::Omega, false},
                        GenItem{{expr(f2, "y")}, 0, GenStyle::Omega, false}}};
        CHECK(subspace_equal(expand_generator_set(g), full_space(f2, 1)));
    }
    SUBCASE("dependent prefix is rejected") {
        GeneratorSet g{f2, 2,
                       {GenItem{{expr(f2, "x"), expr(f2, "x")}, 0, GenStyle::Omega, false}}};
        CHECK_THROWS_AS(expand_generator_set(g), Error);
    }
}

TEST_CASE("closed annihilators match the solver on the spec cases") {
    auto f = make_field(2, {"x", "y", "z"});
    auto x = expr(f, "x");
    auto y = expr(f, "y");

    SUBCASE("disjoint: S1={x}, S2={y}, n=1") {
        auto g = ann_closed_disjoint({{{x}, {y}}}, 1);
        auto oracle = ann_bruteforce(f, transversal_wedges(f, {{x}, {y}}), 1);
        CHECK(subspace_equal(expand_generator_set(g), oracle));
        CHECK(subspace_equal(oracle, echelonize(f, 1, {dt(f, {0}), dt(f, {1})})));
    }
    SUBCASE("disjoint: n=0 gives the zero space") {
        auto g = ann_closed_disjoint({{{x}}}, 0);
        CHECK(g.items.empty());
        CHECK(expand_generator_set(g).dimension() == 0);
    }
    SUBCASE("disjoint: S1={x}, S2={y}, n=2") {
        auto g = ann_closed_disjoint({{{x}, {y}}}, 2);
        auto oracle = ann_bruteforce(f, transversal_wedges(f, {{x}, {y}}), 2);
        CHECK(subspace_equal(expand_generator_set(g), oracle));
    }
    SUBCASE("power: S={x,y}, r=1, n=2 over three variables") {
        auto g = ann_closed_power({x, y}, 1, 2);
        auto oracle = ann_bruteforce(f, power_wedges(f, {x, y}, 1), 2);
        CHECK(subspace_equal(expand_generator_set(g), oracle));
    }
    SUBCASE("power: r > k gives the full space") {
        auto g = ann_closed_power({x, y}, 3, 1);
        CHECK(subspace_equal(expand_generator_set(g), full_space(f, 1)));
    }
    SUBCASE("power: S={x,y}, r=2, n=1") {
        auto g = ann_closed_power({x, y}, 2, 1);
        auto oracle = ann_bruteforce(f, power_wedges(f, {x, y}, 2), 1);
        auto expanded = expand_generator_set(g);
        CHECK(subspace_equal(expanded, oracle));
        // explicitly span{dx, dy}
        CHECK(subspace_equal(expanded, echelonize(f, 1, {dt(f, {0}), dt(f, {1})})));
    }
    SUBCASE("mixed: r=1, S1={x}, S2={y}, n=1") {
        auto g = ann_closed_mixed({{x}}, {y}, 1);
        auto oracle = ann_bruteforce(f, transversal_wedges(f, {{x}, {y}}), 1);
        CHECK(subspace_equal(expand_generator_set(g), oracle));
    }
    SUBCASE("mixed: r=1, S1={x}, S2={xy}, n=1 spans {dx, x dy}") {
        auto xy = expr(f, "x*y");
        auto g = ann_closed_mixed({{x}}, {xy}, 1);
        auto oracle = ann_bruteforce(f, transversal_wedges(f, {{x}, {xy}}), 1);
        auto expanded = expand_generator_set(g);
        CHECK(subspace_equal(expanded, oracle));
        CHECK(subspace_contains(expanded, dt(f, {1}).scaled(x)));
        // over the field, span{dx, x dy} = span{dx, dy}; dz stays outside
        CHECK(subspace_contains(expanded, dt(f, {1})));
        CHECK(!subspace_contains(expanded, dt(f, {2})));
    }
    SUBCASE("mixed: S1={x}, S2={x} violates the hypothesis") {
        CHECK_THROWS_AS(ann_closed_mixed({{x}}, {x}, 1), Error);
    }
}

TEST_CASE("reduction invariance: any p-basis of the same fields gives the same annihilator") {
    auto f = make_field(2, {"x", "y", "z"});
    auto x = expr(f, "x");
    auto y = expr(f, "y");
    // F^2(x, y) = F^2(xy, x): both are p-bases of the same field
    auto a1 = ann_bruteforce(f, transversal_wedges(f, {{x, y}}), 1);
    auto a2 = ann_bruteforce(f, transversal_wedges(f, {{expr(f, "x*y"), x}}), 1);
    CHECK(subspace_equal(a1, a2));
}

TEST_CASE("forms stay nonzero under variable adjunction") {
    auto f = make_field(2, {"x", "y"});
    auto g = extend_field(f, {"w"});
    Rng rng(67);
    for (int iter = 0; iter < 10; ++iter) {
        auto a = random_nonzero_rf(rng, f);
        auto w = d_of_element(a);
        CHECK(w.lifted(g).is_zero() == w.is_zero());
        if (!w.is_zero()) CHECK(!w.lifted(g).is_zero());
    }
}

TEST_CASE("randomized master property: closed forms equal brute force") {
    Rng rng(71);
    for (uint32_t p : {2u, 3u}) {
        auto f = make_field(p, {"x", "y", "z"});
        std::vector vars{expr(f, "x"), expr(f, "y"), expr(f, "z")};
        // decorations stay inside F^p(v): v*u^p + w^p with small u, w
        auto decorate = [&](const RationalFunction& v) {
            auto u = vars[pick(rng, 3)].pow(int64_t(pick(rng, 2)));
            auto w = pick(rng, 2) ? vars[pick(rng, 3)] : RationalFunction::constant(f, 1);
            return v * u.pow(p) + w.pow(p);
        };
        for (int iter = 0; iter < 8; ++iter) {
            int n = int(pick(rng, 3));
            std::vector<RationalFunction> s1{decorate(vars[0]), vars[0] * vars[0]};
            std::vector<RationalFunction> s2{decorate(vars[1])};
            auto g = ann_closed_disjoint({{s1, s2}}, n);
            auto u = transversal_wedges(f, {p_basis_of(s1).basis, p_basis_of(s2).basis});
            CHECK(subspace_equal(expand_generator_set(g), ann_bruteforce(f, u, n)));

            std::vector<RationalFunction> s{decorate(vars[0]), decorate(vars[1]),
                                            decorate(vars[0]) * decorate(vars[1])};
            int k = int(p_degree(s));
            int r = 1 + int(pick(rng, std::size_t(k + 2)));
            auto gp = ann_closed_power(s, r, n);
            auto up = power_wedges(f, p_basis_of(s).basis, r);
            CHECK(subspace_equal(expand_generator_set(gp), ann_bruteforce(f, up, n)));
        }
    }
}
