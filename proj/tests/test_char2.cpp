#include "doctest.h"
#include "test_support.hpp"

#include "qlf/char2.hpp"

using namespace qlf;
using namespace qlf::test;

namespace {

PfisterForm pfi(const FieldPtr& f, std::initializer_list<const char*> slots) {
    std::vector<RationalFunction> v;
    for (const char* s : slots) v.push_back(expr(f, s));
    return make_pfister(f, std::move(v));
}

BilinearDiagonal bil(const FieldPtr& f, std::initializer_list<const char*> entries) {
    std::vector<RationalFunction> v;
    for (const char* s : entries) v.push_back(expr(f, s));
    return make_bilinear(f, std::move(v));
}

} // namespace

TEST_CASE("pfister anisotropy via 2-independence") {
    auto f = make_field(2, {"x", "y"});
    CHECK(pfister_anisotropic(pfi(f, {"x", "y"})));
    CHECK(!pfister_anisotropic(pfi(f, {"x", "x"})));
    // rank oracle: d(x*y^2) = y^2 dx, proportional to dx, so the slots are
    // 2-dependent (x*y^2 = y^2 * x lies in F^2(x)) and the form is metabolic
    CHECK(member_fp_adjoin(expr(f, "x*y^2"), {expr(f, "x")}));
    CHECK(!pfister_anisotropic(pfi(f, {"x", "x*y^2"})));
    CHECK(pfister_anisotropic(pfi(f, {"x", "x*y"}))); // x*y genuinely extends F^2(x)
}

TEST_CASE("wrong characteristic is rejected") {
    auto f3 = make_field(3, {"x"});
    CHECK_THROWS_AS(make_pfister(f3, {RationalFunction::variable(f3, 0)}), Error);
    try {
        make_bilinear(f3, {RationalFunction::variable(f3, 0)});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongCharacteristic);
    }
}

TEST_CASE("polar form carries the diagonal over") {
    auto f = make_field(2, {"x", "y"});
    CHECK(pform_isometric(polar_form(bil(f, {"1", "x"})), make_pform(f, {expr(f, "1"), expr(f, "x")})));
    CHECK(polar_form(bil(f, {"x"})).entries[0] == expr(f, "x"));
    CHECK(norm_field(polar_form(bil(f, {"1", "x", "y", "x*y"}))).k == 2); // ndeg 4
}

TEST_CASE("kato map: theorem displays") {
    auto f = make_field(2, {"x", "y"});
    CHECK(kato_e(pfi(f, {"x"})) == log_form({expr(f, "x")}));
    CHECK(kato_e(pfi(f, {"x", "y"})) == log_form({expr(f, "x"), expr(f, "y")}));
    CHECK(kato_e(pfi(f, {"x^2"})).is_zero()); // d of a square dies in char 2
}

TEST_CASE("kato map properties") {
    Rng rng(103);
    auto f = make_field(2, {"x", "y", "z"});
    for (int iter = 0; iter < 12; ++iter) {
        auto a = random_nonzero_rf(rng, f);
        auto b = random_nonzero_rf(rng, f);
        // multiplicative in the slots
        CHECK(kato_e(make_pfister(f, {a, b})) ==
              wedge(kato_e(make_pfister(f, {a})), kato_e(make_pfister(f, {b}))));
        // e vanishes exactly on metabolic (2-dependent) Pfister forms
        auto pi = make_pfister(f, {a, b});
        CHECK(kato_e(pi).is_zero() == !pfister_anisotropic(pi));
        // slot congruence: a ~ a c^2
        auto c = random_nonzero_rf(rng, f);
        CHECK(kato_e(make_pfister(f, {a * c * c, b})) == kato_e(make_pfister(f, {a, b})));
    }
}

TEST_CASE("verify_generator: spec examples") {
    auto f = make_field(2, {"x", "y"});
    auto dx = d_of_element(expr(f, "x"));
    CHECK(verify_generator(pfi(f, {"x"}), {dx}));
    CHECK(!verify_generator(pfi(f, {"y"}), {dx}));
    auto dxy = wedge(dx, d_of_element(expr(f, "y")));
    CHECK(verify_generator(pfi(f, {"x*y"}), {dxy}));
}

TEST_CASE("norm element sampling is deterministic and lands in the field") {
    auto f = make_field(2, {"x", "y"});
    std::vector<RationalFunction> gens{expr(f, "x"), expr(f, "y")};
    std::mt19937_64 r1(5), r2(5);
    auto s1 = sample_norm_elements(gens, f, 12, r1);
    auto s2 = sample_norm_elements(gens, f, 12, r2);
    REQUIRE(s1.size() == 12);
    CHECK(s1 == s2);
    for (const auto& v : s1) {
        CHECK(!v.is_zero());
        CHECK(member_fp_adjoin(v, gens));
    }
}

TEST_CASE("witt kernel generators: tower cases") {
    auto f = make_field(2, {"x", "y", "z"});
    SUBCASE("single form <1,x,y>: k=2, t=2 family over the norm field") {
        auto d = witt_kernel_generators({bil(f, {"1", "x", "y"})}, 5, 42);
        CHECK(d.theorem_case == "pfister-power");
        CHECK(d.k == 2);
        CHECK(d.t == 2);
        REQUIRE(!d.sampled.empty());
        CHECK(d.all_verified);
        // the designated sample <<x, y>> verifies
        CHECK(verify_generator(pfi(f, {"x", "y"}), d.kernel_wedges));
    }
    SUBCASE("the same form twice: r >= k, single-slot family") {
        auto d = witt_kernel_generators({bil(f, {"1", "x", "y"}), bil(f, {"1", "x", "y"})}, 5, 42);
        CHECK(d.theorem_case == "pfister-power");
        CHECK(d.t == 1);
        CHECK(d.all_verified);
        CHECK(verify_generator(pfi(f, {"x*y"}), d.kernel_wedges));
    }
    SUBCASE("norm degree 1 everywhere: empty description") {
        auto d = witt_kernel_generators({bil(f, {"1", "1"})}, 5, 42);
        CHECK(d.s == 0);
        CHECK(d.families.empty());
        CHECK(d.sampled.empty());
    }
    SUBCASE("degree-2 prefix case") {
        auto d = witt_kernel_generators({bil(f, {"1", "x"}), bil(f, {"1", "y", "y*z"})}, 4, 7);
        CHECK(d.theorem_case == "pdeg1-prefix");
        CHECK(d.ell >= 1);
        REQUIRE(d.families.size() == 2);
        CHECK(d.all_verified);
    }
    SUBCASE("no covered case") {
        auto f4 = make_field(2, {"x", "y", "z", "w"});
        std::vector<BilinearDiagonal> forms{bil(f4, {"1", "x", "x*y"}),
                                            bil(f4, {"1", "z", "z*w"})};
        try {
            witt_kernel_generators(forms, 3, 1);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CaseNotCovered);
        }
    }
}

TEST_CASE("witt kernel compositum generators: spec examples") {
    auto f = make_field(2, {"x", "y"});
    SUBCASE("A=(x), b=<1,y>") {
        auto d = witt_kernel_compositum_generators({expr(f, "x")}, bil(f, {"1", "y"}), 4, 11);
        CHECK(d.theorem_case == "compositum");
        CHECK(d.ell == 1);
        REQUIRE(d.families.size() == 2);
        CHECK(d.all_verified);
        CHECK(verify_generator(pfi(f, {"x"}), d.kernel_wedges));
    }
    SUBCASE("A=(x), b=<1,x>: collapse") {
        try {
            witt_kernel_compositum_generators({expr(f, "x")}, bil(f, {"1", "x"}), 4, 11);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NormDegreeCollapsed);
        }
    }
    SUBCASE("A=(x), b=<1,xy>: e_1 = xy and <<xy>> verifies") {
        auto d = witt_kernel_compositum_generators({expr(f, "x")}, bil(f, {"1", "x*y"}), 4, 11);
        REQUIRE(d.basis_e.size() == 1);
        CHECK(d.basis_e[0] == expr(f, "x*y"));
        CHECK(d.all_verified);
        CHECK(verify_generator(pfi(f, {"x*y"}), d.kernel_wedges));
    }
    SUBCASE("dependent roots are rejected") {
        CHECK_THROWS_AS(
            witt_kernel_compositum_generators({expr(f, "x"), expr(f, "x")}, bil(f, {"1", "y"}), 2, 1),
            Error);
    }
}

TEST_CASE("corrupted generators fail verification") {
    auto f = make_field(2, {"x", "y", "z"});
    // kernel of F(polar <1,x>)/F: wedges {dx}; a slot outside the norm
    // field breaks annihilation
    auto d = witt_kernel_generators({bil(f, {"1", "x"})}, 3, 9);
    REQUIRE(d.t == 1);
    CHECK(!verify_generator(pfi(f, {"y"}), d.kernel_wedges));
    CHECK(!verify_generator(pfi(f, {"x+y"}), d.kernel_wedges));
    // compositum: <<z>> with z fresh fails against dx ^ dy
    auto dc = witt_kernel_compositum_generators({expr(f, "x")}, bil(f, {"1", "y"}), 3, 9);
    CHECK(!verify_generator(pfi(f, {"z"}), dc.kernel_wedges));
}
