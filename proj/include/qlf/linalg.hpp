#pragma once

#include <cstddef>
#include <vector>

#include "qlf/field.hpp"

namespace qlf {
namespace linalg {

using Row = std::vector<RationalFunction>;
using Matrix = std::vector<Row>;

enum class Mode {
    Serial,   // reference implementation
    Parallel, // OpenMP row updates
    Auto,     // pick by problem size
};

struct RrefResult {
    Matrix rows; // canonical reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form over F, exact. Elimination is fraction-free
/// (denominators cleared per row, Bareiss-style one-step updates on
/// polynomial rows, pivots divided out at the end); pivots are chosen
/// deterministically as the first nonzero entry in column order, so the
/// result is identical across modes and thread counts.
RrefResult rref(const Matrix& input, Mode mode = Mode::Auto);

std::size_t rank(const Matrix& input, Mode mode = Mode::Auto);

/// Canonical (echelonized) basis of { x : input * x = 0 }.
Matrix nullspace(const Matrix& input, std::size_t cols, Mode mode = Mode::Auto);

/// True when v lies in the row space described by `rr`.
bool in_row_space(const RrefResult& rr, const Row& v);

} // namespace linalg
} // namespace qlf
