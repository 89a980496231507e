#pragma once

#include <random>
#include <string>

#include "qlf/quasilinear.hpp"

namespace qlf {

/// <<a_1,...,a_n>> = <1,a_1> x ... x <1,a_n>, all slots nonzero, p = 2.
struct PfisterForm {
    FieldPtr field;
    std::vector<RationalFunction> slots;
};

PfisterForm make_pfister(FieldPtr field, std::vector<RationalFunction> slots);

/// Diagonal symmetric bilinear form <b_1,...,b_n>, entries nonzero.
struct BilinearDiagonal {
    FieldPtr field;
    std::vector<RationalFunction> entries;
};

BilinearDiagonal make_bilinear(FieldPtr field, std::vector<RationalFunction> entries);

/// Anisotropic iff the slots are 2-independent; otherwise metabolic.
bool pfister_anisotropic(const PfisterForm& pi);

/// b(v, v) as a 2-form on the same diagonal.
PForm polar_form(const BilinearDiagonal& b);

/// e_n(<<a_1,...,a_n>>) = (da_1/a_1) ^ ... ^ (da_n/a_n).
DifferentialForm kato_e(const PfisterForm& pi);

/// kato_e(pi) ^ w = 0 for every defining wedge w; the computable shadow of
/// kernel membership, evaluated entirely over the base field.
bool verify_generator(const PfisterForm& pi, const std::vector<DifferentialForm>& kernel_wedges);

/// One infinite family [ <<y_1,...,y_arity>> | y_i in F^2(gens)^* ].
struct PfisterFamily {
    std::size_t arity = 0;
    std::vector<RationalFunction> gens; // coefficient-field generators
    std::string description;
};

struct WittKernelDescription {
    std::string theorem_case; // "pfister-power" | "pdeg1-prefix" | "compositum"
    std::vector<RationalFunction> basis_a; // the a_i parameters
    std::vector<RationalFunction> basis_e; // the e_j parameters (when present)
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t ell = 0;
    std::size_t s = 0;
    std::vector<PfisterFamily> families;
    std::vector<DifferentialForm> kernel_wedges; // verification wedges
    std::vector<PfisterForm> sampled;
    std::vector<bool> verified; // parallel to `sampled`
    bool all_verified = true;
};

/// Witt-kernel generator families for the function-field tower of the
/// polar forms; `budget` concrete generators are sampled per family and
/// each is checked with verify_generator.
WittKernelDescription witt_kernel_generators(const std::vector<BilinearDiagonal>& forms,
                                             std::size_t budget, uint64_t seed);

/// Witt kernel of F(sqrt a_1,...,sqrt a_s)(polar(b)) / F.
WittKernelDescription witt_kernel_compositum_generators(const std::vector<RationalFunction>& a,
                                                        const BilinearDiagonal& b,
                                                        std::size_t budget, uint64_t seed);

} // namespace qlf
