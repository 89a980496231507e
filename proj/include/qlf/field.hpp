#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlf/errors.hpp"

namespace qlf {

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// The ambient field F = F_p(t_1,...,t_m). Holds the prime, the ordered
/// variable list, and thereby the global graded-lex monomial order. All
/// values (polynomials, fractions, forms) carry a pointer to their field;
/// mixing values from different descriptors is an error.
class FieldDescriptor {
  public:
    FieldDescriptor(uint32_t p, std::vector<std::string> vars);

    uint32_t p() const { return p_; }
    std::size_t var_count() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_.at(i); }
    std::optional<std::size_t> var_index(std::string_view name) const;

    bool same(const FieldDescriptor& other) const;

    // residue arithmetic mod p
    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b % p_) % p_; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t(a) * b) % p_);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t inv(uint32_t a) const;
    uint32_t reduce(int64_t v) const {
        int64_t r = v % int64_t(p_);
        return uint32_t(r < 0 ? r + p_ : r);
    }

  private:
    uint32_t p_;
    std::vector<std::string> vars_;
};

FieldPtr make_field(uint32_t p, std::vector<std::string> vars);

/// New descriptor with `extra` variables appended after the existing ones.
FieldPtr extend_field(const FieldPtr& base, const std::vector<std::string>& extra);

bool is_prime(uint32_t n);

void check_same_field(const FieldPtr& a, const FieldPtr& b);

/// Exponent vector, one entry per field variable.
using Monomial = std::vector<uint32_t>;

/// Graded lexicographic order by variable index: total degree first, then
/// entrywise comparison. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    uint32_t coeff; // nonzero residue mod p
};

/// Sparse multivariate polynomial over F_p. Terms are kept sorted in
/// strictly descending graded-lex order (leading term first) and never
/// store a zero coefficient.
class Polynomial {
  public:
    explicit Polynomial(FieldPtr field);

    static Polynomial zero(FieldPtr field);
    static Polynomial constant(FieldPtr field, int64_t c);
    static Polynomial variable(FieldPtr field, std::size_t i);
    static Polynomial monomial(FieldPtr field, Monomial mono, int64_t c);
    static Polynomial from_terms(FieldPtr field, std::vector<Term> terms);

    const FieldPtr& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Term& leading() const; // requires nonzero
    uint32_t constant_value() const; // value at the zero monomial (0 if absent)
    int64_t degree_in(std::size_t var) const; // -1 for the zero polynomial
    int64_t total_degree() const;             // -1 for the zero polynomial
    bool uses_var(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(uint32_t c) const;
    Polynomial pow(uint64_t e) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial derivative(std::size_t var) const;

    /// Monic rescale (leading coefficient 1). Zero stays zero.
    Polynomial monic() const;

    /// Exact quotient, or nullopt when `divisor` does not divide `*this`.
    std::optional<Polynomial> divided_by(const Polynomial& divisor) const;

    /// r with r^p = *this, or nullopt. Over F_p this succeeds exactly when
    /// every exponent is divisible by p.
    std::optional<Polynomial> pth_root() const;

    /// Reinterpret over an extended descriptor whose variable list starts
    /// with this field's variables.
    Polynomial lifted(const FieldPtr& bigger) const;

    std::string to_string() const;

  private:
    void normalize();

    FieldPtr field_;
    std::vector<Term> terms_;
};

/// Monic gcd; gcd(0,0) = 0. Content-free recursive PRS on the sparse
/// representation.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Canonical fraction num/den over F_p[t_1..t_m]: den != 0, gcd(num,den)=1,
/// den monic under graded-lex, zero stored as 0/1. Equality of canonical
/// representations coincides with equality in the field.
class RationalFunction {
  public:
    explicit RationalFunction(FieldPtr field); // zero
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction zero(FieldPtr field);
    static RationalFunction one(FieldPtr field);
    static RationalFunction constant(FieldPtr field, int64_t c);
    static RationalFunction variable(FieldPtr field, std::size_t i);

    const FieldPtr& field() const { return field_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const; // DivisionByZero
    RationalFunction inverse() const;                              // DivisionByZero
    RationalFunction pow(int64_t e) const;
    bool operator==(const RationalFunction& rhs) const;
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

    /// Partial derivative with respect to t_var (0-based), by the quotient
    /// rule, canonicalized.
    RationalFunction derivative(std::size_t var) const;

    /// r with r^p = *this, or nullopt when *this is not a p-th power.
    std::optional<RationalFunction> pth_root() const;

    RationalFunction lifted(const FieldPtr& bigger) const;

    /// Substitute field elements for a subset of variables (entries may be
    /// nullopt to keep a variable symbolic). Values live in `target`, which
    /// must contain every variable kept symbolic.
    RationalFunction substituted(const FieldPtr& target,
                                 const std::vector<std::optional<RationalFunction>>& values) const;

    std::string to_string() const;

  private:
    void normalize();

    FieldPtr field_;
    Polynomial num_;
    Polynomial den_;
};

enum class RfOp { Add, Sub, Mul, Div };

/// Dispatch-style entry point used by the CLI; plain operators are the
/// library interface.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);

} // namespace qlf
