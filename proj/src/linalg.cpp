#include "qlf/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlf {
namespace linalg {

namespace {

using PolyRow = std::vector<Polynomial>;

// scale a row by its denominator lcm; row space over F is unchanged
PolyRow clear_denominators(const Row& row, const FieldPtr& field) {
    Polynomial lcm = Polynomial::constant(field, 1);
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        Polynomial g = poly_gcd(lcm, e.den());
        lcm = lcm * *e.den().divided_by(g);
    }
    PolyRow out;
    out.reserve(row.size());
    for (const auto& e : row) {
        if (e.is_zero())
            out.push_back(Polynomial::zero(field));
        else
            out.push_back(e.num() * *lcm.divided_by(e.den()));
    }
    return out;
}

// divide a row by the gcd of its entries; keeps elimination small
void strip_content(PolyRow& row) {
    const Polynomial* first = nullptr;
    for (const auto& e : row)
        if (!e.is_zero()) {
            first = &e;
            break;
        }
    if (!first) return;
    Polynomial g = Polynomial::zero(first->field());
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        g = poly_gcd(g, e);
        if (g.is_constant()) return; // nothing to strip
    }
    for (auto& e : row)
        if (!e.is_zero()) e = *e.divided_by(g);
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = a.divided_by(b);
    if (!q) raise(ErrorCode::Internal, "fraction-free elimination: inexact division");
    return std::move(*q);
}

struct Elimination {
    std::vector<PolyRow> rows;
    std::vector<std::size_t> pivot_cols;
};

// one-step fraction-free Gauss-Jordan; deterministic pivoting
Elimination eliminate(std::vector<PolyRow> rows, std::size_t cols, const FieldPtr& field,
                      bool parallel) {
    Elimination el;
    const std::size_t nrows = rows.size();
    Polynomial prev_pivot = Polynomial::constant(field, 1);
    std::size_t next = 0; // next pivot row slot
    for (std::size_t c = 0; c < cols && next < nrows; ++c) {
        std::size_t found = nrows;
        for (std::size_t i = next; i < nrows; ++i) {
            if (!rows[i][c].is_zero()) {
                found = i;
                break;
            }
        }
        if (found == nrows) continue;
        std::swap(rows[next], rows[found]);
        const PolyRow& piv_row = rows[next];
        const Polynomial piv = piv_row[c];

        auto update_row = [&](std::size_t i) {
            PolyRow& row = rows[i];
            const Polynomial factor = row[c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                if (factor.is_zero()) {
                    if (!row[j].is_zero()) row[j] = exact_div(piv * row[j], prev_pivot);
                } else {
                    row[j] = exact_div(piv * row[j] - factor * piv_row[j], prev_pivot);
                }
            }
            row[c] = Polynomial::zero(field);
        };

        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long i = 0; i < (long long)nrows; ++i) {
                if ((std::size_t)i != next) update_row((std::size_t)i);
            }
        } else {
            for (std::size_t i = 0; i < nrows; ++i)
                if (i != next) update_row(i);
        }

        prev_pivot = piv;
        el.pivot_cols.push_back(c);
        ++next;
    }
    rows.resize(next); // remaining rows are identically zero
    el.rows = std::move(rows);
    return el;
}

bool pick_parallel(std::size_t nrows, std::size_t cols, Mode mode) {
    switch (mode) {
        case Mode::Serial: return false;
        case Mode::Parallel: return true;
        case Mode::Auto: return nrows * cols >= 512;
    }
    return false;
}

std::vector<PolyRow> prepare_rows(const Matrix& input, std::size_t cols, const FieldPtr& field) {
    std::vector<PolyRow> rows;
    rows.reserve(input.size());
    for (const auto& r : input) {
        if (r.size() != cols) raise(ErrorCode::Internal, "ragged matrix");
        PolyRow pr = clear_denominators(r, field);
        strip_content(pr);
        rows.push_back(std::move(pr));
    }
    return rows;
}

FieldPtr field_of(const Matrix& input) {
    for (const auto& r : input)
        for (const auto& e : r) return e.field();
    return nullptr;
}

} // namespace

RrefResult rref(const Matrix& input, Mode mode) {
    RrefResult out;
    if (input.empty()) return out;
    const std::size_t cols = input.front().size();
    out.cols = cols;
    FieldPtr field = field_of(input);
    if (cols == 0 || !field) return out;

    Elimination el = eliminate(prepare_rows(input, cols, field), cols, field,
                               pick_parallel(input.size(), cols, mode));

    out.pivot_cols = el.pivot_cols;
    out.rows.reserve(el.rows.size());
    for (std::size_t i = 0; i < el.rows.size(); ++i) {
        PolyRow& row = el.rows[i];
        strip_content(row); // cheapens the divisions below
        const Polynomial piv = row[el.pivot_cols[i]];
        Row rf_row;
        rf_row.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j)
            rf_row.emplace_back(std::move(row[j]), piv);
        out.rows.push_back(std::move(rf_row));
    }
    return out;
}

std::size_t rank(const Matrix& input, Mode mode) {
    if (input.empty() || input.front().empty()) return 0;
    const std::size_t cols = input.front().size();
    FieldPtr field = field_of(input);
    if (!field) return 0;

    // rank is invariant under column scaling: clear each column by its
    // denominator lcm first, keeping entries small
    Matrix scaled(input.size(), Row(cols, RationalFunction::zero(field)));
    for (std::size_t j = 0; j < cols; ++j) {
        Polynomial lcm = Polynomial::constant(field, 1);
        for (const auto& r : input) {
            if (r.size() != cols) raise(ErrorCode::Internal, "ragged matrix");
            const auto& e = r[j];
            if (e.is_zero()) continue;
            Polynomial g = poly_gcd(lcm, e.den());
            lcm = lcm * *e.den().divided_by(g);
        }
        for (std::size_t i = 0; i < input.size(); ++i) {
            const auto& e = input[i][j];
            if (!e.is_zero())
                scaled[i][j] = RationalFunction(e.num() * *lcm.divided_by(e.den()));
        }
    }

    // no back-normalization: only the pivot count is needed
    Elimination el = eliminate(prepare_rows(scaled, cols, field), cols, field,
                               pick_parallel(input.size(), cols, mode));
    return el.pivot_cols.size();
}

Matrix nullspace(const Matrix& input, std::size_t cols, Mode mode) {
    if (cols == 0) return {};
    FieldPtr field = field_of(input);
    if (!field) raise(ErrorCode::Internal, "nullspace needs at least one entry for field context");

    RrefResult rr = input.empty() ? RrefResult{} : rref(input, mode);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    Matrix span;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(cols, RationalFunction::zero(field));
        v[f] = RationalFunction::one(field);
        for (std::size_t i = 0; i < rr.rows.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.rows[i][f];
        span.push_back(std::move(v));
    }
    if (span.empty()) return span;
    return rref(span, mode).rows; // canonical form
}

bool in_row_space(const RrefResult& rr, const Row& v) {
    // reduce v by the canonical rows; membership iff the remainder is zero
    Row r = v;
    for (std::size_t i = 0; i < rr.rows.size(); ++i) {
        const RationalFunction c = r[rr.pivot_cols[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] - c * rr.rows[i][j];
    }
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

} // namespace linalg
} // namespace qlf
