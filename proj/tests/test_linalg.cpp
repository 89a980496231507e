#include "doctest.h"
#include "test_support.hpp"

#include "qlf/linalg.hpp"

using namespace qlf;
using namespace qlf::test;
using linalg::Matrix;
using linalg::Mode;

namespace {

Matrix random_matrix(Rng& rng, const FieldPtr& field, std::size_t rows, std::size_t cols) {
    Matrix m(rows);
    for (auto& row : m) {
        row.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (pick(rng, 3) == 0)
                row.push_back(RationalFunction::zero(field));
            else
                row.push_back(random_rf(rng, field));
        }
    }
    return m;
}

} // namespace

TEST_CASE("rref on a known system") {
    auto f = make_field(3, {"x"});
    auto x = RationalFunction::variable(f, 0);
    auto one = RationalFunction::one(f);
    // rows (x, 1), (x^2, x) are proportional; (1, 0) adds a pivot
    Matrix m{{x, one}, {x * x, x}, {one, RationalFunction::zero(f)}};
    auto rr = linalg::rref(m);
    REQUIRE(rr.rank() == 2);
    CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(rr.rows[0][0].is_one());
    CHECK(rr.rows[0][1].is_zero());
    CHECK(rr.rows[1][1].is_one());
}

TEST_CASE("serial and parallel elimination agree exactly") {
    Rng rng(23);
    for (uint32_t p : {2u, 3u}) {
        auto f = make_field(p, {"x", "y"});
        for (int iter = 0; iter < 12; ++iter) {
            Matrix m = random_matrix(rng, f, 2 + pick(rng, 5), 2 + pick(rng, 5));
            auto a = linalg::rref(m, Mode::Serial);
            auto b = linalg::rref(m, Mode::Parallel);
            CHECK(a.pivot_cols == b.pivot_cols);
            REQUIRE(a.rows.size() == b.rows.size());
            for (std::size_t i = 0; i < a.rows.size(); ++i)
                CHECK(a.rows[i] == b.rows[i]);
        }
    }
}

TEST_CASE("rref rows are reduced: pivot 1, zeros elsewhere in pivot columns") {
    Rng rng(29);
    auto f = make_field(2, {"x", "y"});
    for (int iter = 0; iter < 10; ++iter) {
        Matrix m = random_matrix(rng, f, 4, 5);
        auto rr = linalg::rref(m);
        for (std::size_t i = 0; i < rr.rows.size(); ++i) {
            CHECK(rr.rows[i][rr.pivot_cols[i]].is_one());
            for (std::size_t k = 0; k < rr.rows.size(); ++k)
                if (k != i) CHECK(rr.rows[k][rr.pivot_cols[i]].is_zero());
            for (std::size_t c = 0; c < rr.pivot_cols[i]; ++c) CHECK(rr.rows[i][c].is_zero());
        }
    }
}

TEST_CASE("nullspace vectors solve the system; dimensions add up") {
    Rng rng(31);
    auto f = make_field(3, {"x", "y"});
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t cols = 3 + pick(rng, 3);
        Matrix m = random_matrix(rng, f, 2 + pick(rng, 3), cols);
        auto ns = linalg::nullspace(m, cols);
        CHECK(ns.size() + linalg::rank(m) == cols);
        for (const auto& v : ns)
            for (const auto& row : m) {
                RationalFunction dot = RationalFunction::zero(f);
                for (std::size_t j = 0; j < cols; ++j) dot = dot + row[j] * v[j];
                CHECK(dot.is_zero());
            }
        // canonical: the reported basis is its own rref
        if (!ns.empty()) {
            auto again = linalg::rref(ns);
            REQUIRE(again.rows.size() == ns.size());
            for (std::size_t i = 0; i < ns.size(); ++i) CHECK(again.rows[i] == ns[i]);
        }
    }
}

TEST_CASE("row space membership") {
    auto f = make_field(2, {"x", "y"});
    auto x = RationalFunction::variable(f, 0);
    auto y = RationalFunction::variable(f, 1);
    auto one = RationalFunction::one(f);
    auto zero = RationalFunction::zero(f);
    auto rr = linalg::rref(Matrix{{one, x}, {zero, zero}});
    CHECK(linalg::in_row_space(rr, {y, x * y}));
    CHECK(!linalg::in_row_space(rr, {y, y}));
}
