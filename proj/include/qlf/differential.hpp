#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlf/field.hpp"
#include "qlf/linalg.hpp"
#include "qlf/plinear.hpp"

namespace qlf {

/// Strictly increasing 0-based variable indices; the dt-monomial dt_I.
using IndexTuple = std::vector<uint32_t>;

/// All C(m,n) tuples in lexicographic order; empty when n < 0 or n > m.
std::vector<IndexTuple> index_tuples(std::size_t m, int n);

/// Sparse element of Omega^n(F) in the dt-monomial basis.
class DifferentialForm {
  public:
    DifferentialForm(FieldPtr field, int degree);

    static DifferentialForm zero(FieldPtr field, int degree);
    static DifferentialForm scalar(const RationalFunction& value); // degree 0
    static DifferentialForm basis_wedge(FieldPtr field, const IndexTuple& indices); // dt_I

    const FieldPtr& field() const { return field_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IndexTuple& indices, const RationalFunction& coeff);

    DifferentialForm operator+(const DifferentialForm& rhs) const;
    DifferentialForm operator-(const DifferentialForm& rhs) const;
    DifferentialForm scaled(const RationalFunction& c) const;
    bool operator==(const DifferentialForm& rhs) const;
    bool operator!=(const DifferentialForm& rhs) const { return !(*this == rhs); }

    DifferentialForm lifted(const FieldPtr& bigger) const;

  private:
    FieldPtr field_;
    int degree_;
    std::map<IndexTuple, RationalFunction> terms_;
};

/// dt_I ^ dt_J with the shuffle sign; bilinear on forms.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// da = sum_i (da/dt_i) dt_i.
DifferentialForm d_of_element(const RationalFunction& a);

/// d(x da_1 ^ ... ) = dx ^ da_1 ^ ...; F^p-linear, d of d is zero.
DifferentialForm d_operator(const DifferentialForm& w);

/// (da_1/a_1) ^ ... ^ (da_n/a_n); ZeroArgument on a zero entry.
DifferentialForm log_form(const std::vector<RationalFunction>& args);

/// The set d S_1 ^ ... ^ d S_r of section-wise wedges.
struct SetWedgeSpec {
    std::vector<std::vector<RationalFunction>> sets; // each nonempty
};

struct SetWedgeWitness {
    bool nonzero = false;
    std::vector<RationalFunction> transversal; // one element per set when nonzero
};

/// Nonzero iff some transversal of the per-set p-bases has nonzero wedge.
SetWedgeWitness set_wedge_nonzero(const SetWedgeSpec& spec);

/// Echelonized basis of a subspace of Omega^n(F); rows are the unique
/// reduced echelon representatives over the lex-ordered dt-tuples, so
/// equal spans have identical representations.
struct SubspaceBasis {
    FieldPtr field;
    int degree = 0;
    std::vector<DifferentialForm> rows;

    std::size_t dimension() const { return rows.size(); }
};

SubspaceBasis full_space(const FieldPtr& field, int degree);
SubspaceBasis zero_space(const FieldPtr& field, int degree);

/// Canonicalize a spanning list of equal-degree forms.
SubspaceBasis echelonize(const FieldPtr& field, int degree,
                         const std::vector<DifferentialForm>& spanning,
                         linalg::Mode mode = linalg::Mode::Auto);

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b); // DegreeMismatch
bool subspace_contains(const SubspaceBasis& basis, const DifferentialForm& form);

/// Exact solution space of { w in Omega^n : w ^ u = 0 for all u in U }.
/// Constraint rows are ordered by (index in U, target tuple lex); row
/// assembly and elimination may run in parallel but the echelon result is
/// deterministic. Empty/all-zero U yields the full space.
SubspaceBasis ann_bruteforce(const FieldPtr& field, const std::vector<DifferentialForm>& u,
                             int n, linalg::Mode mode = linalg::Mode::Auto);

/// All wedges d b_{1,j_1} ^ ... ^ d b_{r,j_r} over per-set lists (odometer
/// order, last index fastest). Zero wedges are kept; the solver ignores them.
std::vector<DifferentialForm> transversal_wedges(
    const FieldPtr& field, const std::vector<std::vector<RationalFunction>>& per_set_elements);

/// Wedges over strictly increasing r-subsets of one list (the nonvanishing
/// representatives of an r-fold repeated slot).
std::vector<DifferentialForm> power_wedges(const FieldPtr& field,
                                           const std::vector<RationalFunction>& elements, int r);

enum class GenStyle { Omega, Nu };

/// One summand of a symbolic annihilator/kernel description.
///  - Omega: d(prefix_1) ^ ... ^ d(prefix_k) ^ Omega^{tail_degree}(F),
///    with |prefix| + tail_degree = degree of the set.
///  - Nu: [ dy_1/y_1 ^ ... ^ dy_t/y_t | y_i in F^p(prefix)^* ] ^ nu_{tail_degree},
///    with t = degree - tail_degree; prefix lists the coefficient-field
///    generators. `conditional` marks descriptions valid under F^{p-1} = F.
struct GenItem {
    std::vector<RationalFunction> prefix;
    int tail_degree = 0;
    GenStyle style = GenStyle::Omega;
    bool conditional = false;
};

struct GeneratorSet {
    FieldPtr field;
    int degree = 0;
    std::vector<GenItem> items; // empty set denotes the zero subspace
};

/// ann of d S_1 ^ ... ^ d S_r when the p-degrees add up.
GeneratorSet ann_closed_disjoint(const SetWedgeSpec& spec, int n);

/// ann of the r-fold wedge power of d S; includes the nu-style companion.
GeneratorSet ann_closed_power(const std::vector<RationalFunction>& s, int r, int n);

/// ann of d S_1 ^ ... ^ d S_r ^ d S_{r+1} with pdeg(S_i) = 1 for i <= r.
GeneratorSet ann_closed_mixed(const std::vector<std::vector<RationalFunction>>& pdeg1_sets,
                              const std::vector<RationalFunction>& last_set, int n);

/// Echelonized basis of the described subspace. Nu items contribute the
/// F-span of their logarithmic family (their Omega-shadow); no claim about
/// nu_n itself is made here.
SubspaceBasis expand_generator_set(const GeneratorSet& g,
                                   linalg::Mode mode = linalg::Mode::Auto);

} // namespace qlf
