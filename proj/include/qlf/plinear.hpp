#pragma once

#include <map>
#include <vector>

#include "qlf/field.hpp"
#include "qlf/linalg.hpp"

namespace qlf {

/// Coordinates of a over F^p in the monomial basis {t^e : e in [0,p)^m}:
/// a = sum_e (v_e)^p * t^e. Zero coordinates are omitted.
struct FpCoordinates {
    std::map<Monomial, RationalFunction> entries;

    RationalFunction reconstruct(const FieldPtr& field) const;
};

FpCoordinates fp_coordinates(const RationalFunction& a);

struct PBasisResult {
    std::vector<RationalFunction> basis; // p-independent sublist of the input
    std::size_t pdeg = 0;                // == basis.size()
};

/// Columns da_j in the basis dt_i; m x |S| matrix of partials.
linalg::Matrix differential_matrix(const std::vector<RationalFunction>& elements);

bool p_independent(const std::vector<RationalFunction>& s);
std::size_t p_degree(const std::vector<RationalFunction>& s);

/// Greedy scan in input order, keeping elements whose differential grows
/// the rank. Deterministic, first wins.
PBasisResult p_basis_of(const std::vector<RationalFunction>& s);

/// a in F^p(b_1,...,b_n)?
bool member_fp_adjoin(const RationalFunction& a, const std::vector<RationalFunction>& b);

/// Greedy e_1,...,e_l from S (input order) with A + {e_j} p-independent and
/// F^p(A)(S) = F^p(A)(e_1,...,e_l). Requires A p-independent.
std::vector<RationalFunction> relative_adjoin_basis(const std::vector<RationalFunction>& a,
                                                    const std::vector<RationalFunction>& s);

/// Independent algebraic route for F^p-span membership questions, used by
/// the p-form layer: solves a = sum_j (g_j)^p * gens_j via fp_coordinates,
/// no differentials involved.
bool member_fp_span(const RationalFunction& a, const std::vector<RationalFunction>& gens);

/// Greedy F^p-linearly-independent sublist (coordinate route).
std::vector<std::size_t> fp_span_basis_indices(const std::vector<RationalFunction>& gens);

} // namespace qlf
