#pragma once

#include <random>
#include <string>
#include <vector>

#include "qlf/differential.hpp"

namespace qlf {

/// Diagonal quasilinear p-form <a_1,...,a_n>_p; zero entries allowed.
struct PForm {
    FieldPtr field;
    std::vector<RationalFunction> entries;

    std::size_t dim() const { return entries.size(); }
    bool is_zero_form() const;
    PForm scaled_by(const RationalFunction& x) const;
};

PForm make_pform(FieldPtr field, std::vector<RationalFunction> entries);

struct AnisotropicDecomposition {
    PForm anisotropic_part;
    std::size_t defect = 0;
};

struct NormFieldInfo {
    RationalFunction scale;                // a_0, the first nonzero entry
    std::vector<RationalFunction> quotients; // a_i / a_0 in entry order
    std::vector<RationalFunction> basis;   // p-basis of N_F(phi) = F^p(quotients)
    std::size_t k = 0;                     // ndeg = p^k
};

/// Isometry via equality of the F^p-spans of the diagonals (coordinate
/// route, Frobenius-linear algebra; no differentials involved).
bool pform_isometric(const PForm& phi, const PForm& psi);

/// Greedy F^p-independent diagonal spanning D^0; defect counts the rest.
AnisotropicDecomposition pform_anisotropic_part(const PForm& phi);

NormFieldInfo norm_field(const PForm& phi); // ZeroForm on the zero form

/// Norm degree of phi read over F(p-th roots of A).
uint64_t ndeg_over_extension(const PForm& phi, const std::vector<RationalFunction>& a);

/// The diagonal polynomial is irreducible iff the norm degree exceeds 1;
/// no factorization is attempted.
bool irreducibility_criterion(const PForm& phi);

/// A p-form scaled to <1, a_1,...,a_n> with a norm-field p-basis occupying
/// the leading entries.
struct NormalizedPForm {
    PForm scaled;
    RationalFunction scale;     // original leading nonzero entry
    std::size_t norm_rank = 0;  // k_i: entries 1..k_i form the norm basis
    std::size_t original_index = 0;

    std::vector<RationalFunction> norm_basis() const {
        return {scaled.entries.begin() + 1, scaled.entries.begin() + 1 + norm_rank};
    }
};

/// Tower data for F(phi_1,...,phi_r): norm-degree-1 forms pruned (they
/// contribute purely transcendental factors), the rest stably reordered so
/// a maximal greedy prefix of length s has p-independent T-polynomials.
struct FFTowerDescriptor {
    FieldPtr field;
    std::vector<NormalizedPForm> forms; // retained forms, selected prefix first
    std::size_t s = 0;                  // selected prefix length
    std::vector<std::size_t> pruned;    // original indices of ndeg-1 forms
    std::vector<RationalFunction> transversal_witness; // nonzero wedge pick, s > 0
    std::string var_prefix;             // extended-variable name prefix
};

FFTowerDescriptor normalize_tower(const std::vector<PForm>& forms); // ZeroForm

/// T_i = phi_i'(X_i1,...,X_in_i) over F extended by the X variables,
/// together with the coefficients q_ij of dT_i = sum_j q_ij da_ij.
struct TPolynomials {
    FieldPtr extended;
    std::vector<std::vector<std::size_t>> x_vars; // per form, indices into `extended`
    std::vector<RationalFunction> t;              // per retained form
    std::vector<std::vector<RationalFunction>> q; // q[i][j] for j < k_i
};

TPolynomials build_T_polynomials(const FFTowerDescriptor& tower);

/// For each i, j <= k_i: sending X_ij -> 1 and the other X_im -> 0 must
/// send q_ij -> 1 and the other coefficients -> 0.
bool verify_t_substitutions(const FFTowerDescriptor& tower, const TPolynomials& tp);

/// dT_i = sum_j q_ij da_ij holds identically in the extended field.
bool verify_t_differentials(const FFTowerDescriptor& tower, const TPolynomials& tp);

/// Direct p-independence of {T_1,...,T_r} in the extended field compared
/// with the transversal criterion on the norm-field bases; returns their
/// agreement.
bool lemma43_crosscheck(const FFTowerDescriptor& tower);

/// Transversal wedges d a_{1 j_1} ^ ... ^ d a_{s j_s} over the selected
/// forms' norm bases; the finite generating set of the kernel.
std::vector<DifferentialForm> tower_kernel_wedges(const FFTowerDescriptor& tower);

/// Omega^n(F(phi_1,...,phi_r)/F) as the annihilator of the transversal
/// wedges, solved exactly. Towers of norm degree 1 everywhere give {0}.
SubspaceBasis omega_kernel_ffe(const FFTowerDescriptor& tower, int n,
                               linalg::Mode mode = linalg::Mode::Auto);

/// Closed-form kernel description when the tower matches a known case:
/// disjoint norm fields, a repeated norm field, or a degree-p prefix.
/// CaseNotCovered otherwise (the solver route stays available).
GeneratorSet omega_kernel_closed(const FFTowerDescriptor& tower, int n);

/// E = F(p^{m_1}-th root of b_1, ...); the kernel ignores the exponents.
struct ModularExtensionDescriptor {
    std::vector<RationalFunction> elements;
    std::vector<uint64_t> exponents; // each >= 1
};

GeneratorSet kernel_modular_insep(const ModularExtensionDescriptor& ext, int n);

/// Defining wedges d a_1 ^ ... ^ d a_s ^ d b_j of the compositum kernel.
std::vector<DifferentialForm> compositum_wedges(const std::vector<RationalFunction>& a,
                                                const PForm& phi);

/// Kernel of F(p-th roots of A)(phi)/F per the two-part closed form.
GeneratorSet omega_kernel_compositum(const std::vector<RationalFunction>& a, const PForm& phi,
                                     int n);

/// Deterministic nonzero samples from F^p(gens)^*: first the monomials in
/// the generators with exponents below p*bound, then seeded random
/// F^p-linear combinations with coefficients of degree <= bound.
std::vector<RationalFunction> sample_norm_elements(const std::vector<RationalFunction>& gens,
                                                   const FieldPtr& field, std::size_t count,
                                                   std::mt19937_64& rng, uint32_t bound = 2);

} // namespace qlf
