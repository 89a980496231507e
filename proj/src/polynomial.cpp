#include "qlf/field.hpp"

#include <algorithm>
#include <sstream>

namespace qlf {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::InputNotPIndependent: return "InputNotPIndependent";
        case ErrorCode::NormDegreeCollapsed: return "NormDegreeCollapsed";
        case ErrorCode::CaseNotCovered: return "CaseNotCovered";
        case ErrorCode::EmptyNormSet: return "EmptyNormSet";
        case ErrorCode::ZeroForm: return "ZeroForm";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::ZeroSlot: return "ZeroSlot";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::CrosscheckFailed: return "CrosscheckFailed";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor::FieldDescriptor(uint32_t p, std::vector<std::string> vars)
    : p_(p), vars_(std::move(vars)) {
    if (!is_prime(p_)) raise(ErrorCode::SemanticError, "characteristic must be prime, got " + std::to_string(p_));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) raise(ErrorCode::SemanticError, "empty variable name");
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                raise(ErrorCode::SemanticError, "duplicate variable name '" + vars_[i] + "'");
    }
}

std::optional<std::size_t> FieldDescriptor::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return std::nullopt;
}

bool FieldDescriptor::same(const FieldDescriptor& other) const {
    return p_ == other.p_ && vars_ == other.vars_;
}

uint32_t FieldDescriptor::inv(uint32_t a) const {
    a %= p_;
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of 0 mod p");
    // Fermat: a^(p-2)
    uint64_t base = a, acc = 1, e = p_ - 2;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return uint32_t(acc);
}

FieldPtr make_field(uint32_t p, std::vector<std::string> vars) {
    return std::make_shared<FieldDescriptor>(p, std::move(vars));
}

FieldPtr extend_field(const FieldPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> vars = base->vars();
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_field(base->p(), std::move(vars));
}

void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b))
        raise(ErrorCode::FieldMismatch, "operands belong to different fields");
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    uint64_t da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

bool term_desc(const Term& x, const Term& y) {
    return grlex_compare(x.mono, y.mono) > 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& d, const Monomial& n) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > n[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& n, const Monomial& d) {
    Monomial r(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) r[i] = n[i] - d[i];
    return r;
}

} // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial Polynomial::zero(FieldPtr field) { return Polynomial(std::move(field)); }

Polynomial Polynomial::constant(FieldPtr field, int64_t c) {
    uint32_t r = field->reduce(c);
    Polynomial p(field);
    if (r != 0) p.terms_.push_back({Monomial(field->var_count(), 0), r});
    return p;
}

Polynomial Polynomial::variable(FieldPtr field, std::size_t i) {
    if (i >= field->var_count()) raise(ErrorCode::Internal, "variable index out of range");
    Monomial m(field->var_count(), 0);
    m[i] = 1;
    Polynomial p(field);
    p.terms_.push_back({std::move(m), 1});
    return p;
}

Polynomial Polynomial::monomial(FieldPtr field, Monomial mono, int64_t c) {
    if (mono.size() != field->var_count()) raise(ErrorCode::Internal, "monomial arity mismatch");
    uint32_t r = field->reduce(c);
    Polynomial p(field);
    if (r != 0) p.terms_.push_back({std::move(mono), r});
    return p;
}

Polynomial Polynomial::from_terms(FieldPtr field, std::vector<Term> terms) {
    Polynomial p(std::move(field));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    for (auto& t : terms_) t.coeff %= field_->p();
    std::sort(terms_.begin(), terms_.end(), term_desc);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && grlex_compare(out.back().mono, t.mono) == 0) {
            out.back().coeff = field_->add(out.back().coeff, t.coeff);
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (uint32_t e : terms_[0].mono)
        if (e != 0) return false;
    return true;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) raise(ErrorCode::Internal, "leading term of zero polynomial");
    return terms_.front();
}

uint32_t Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    for (uint32_t e : last.mono)
        if (e != 0) return 0;
    return last.coeff;
}

int64_t Polynomial::degree_in(std::size_t var) const {
    int64_t d = -1;
    for (const auto& t : terms_) d = std::max<int64_t>(d, t.mono[var]);
    return terms_.empty() ? -1 : std::max<int64_t>(d, 0);
}

int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    int64_t d = 0;
    for (const auto& t : terms_) {
        int64_t s = 0;
        for (uint32_t e : t.mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::uses_var(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono[var] != 0) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same_field(field_, rhs.field_);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = grlex_compare(terms_[i].mono, rhs.terms_[j].mono);
        if (c > 0) {
            merged.push_back(terms_[i++]);
        } else if (c < 0) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            uint32_t s = field_->add(terms_[i].coeff, rhs.terms_[j].coeff);
            if (s != 0) merged.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(terms_[i++]);
    while (j < rhs.terms_.size()) merged.push_back(rhs.terms_[j++]);
    Polynomial r(field_);
    r.terms_ = std::move(merged);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_field(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) return zero(field_);
    // accumulate into an ordered map keyed by monomial
    std::map<Monomial, uint32_t, bool (*)(const Monomial&, const Monomial&)> acc(
        [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; });
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            uint32_t c = field_->mul(a.coeff, b.coeff);
            auto [it, inserted] = acc.emplace(std::move(m), c);
            if (!inserted) {
                it->second = field_->add(it->second, c);
            }
        }
    Polynomial r(field_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(uint32_t c) const {
    c %= field_->p();
    if (c == 0) return zero(field_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::pow(uint64_t e) const {
    Polynomial acc = constant(field_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!field_->same(*rhs.field_)) return false;
    if (terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != rhs.terms_[i].coeff ||
            grlex_compare(terms_[i].mono, rhs.terms_[i].mono) != 0)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= field_->var_count()) raise(ErrorCode::Internal, "derivative: variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        uint32_t e = t.mono[var];
        uint32_t c = field_->mul(t.coeff, e % field_->p());
        if (c == 0) continue;
        Term nt{t.mono, c};
        nt.mono[var] = e - 1;
        out.push_back(std::move(nt));
    }
    return from_terms(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading().coeff));
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& divisor) const {
    check_same_field(field_, divisor.field_);
    if (divisor.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Term> quot;
    uint32_t lc_inv = field_->inv(divisor.leading().coeff);
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        const Term& ld = divisor.leading();
        if (!mono_divides(ld.mono, lr.mono)) return std::nullopt;
        Term q{mono_div(lr.mono, ld.mono), field_->mul(lr.coeff, lc_inv)};
        Polynomial qp(field_);
        qp.terms_.push_back(q);
        rem = rem - qp * divisor;
        quot.push_back(std::move(q));
    }
    return from_terms(field_, std::move(quot));
}

std::optional<Polynomial> Polynomial::pth_root() const {
    const uint32_t p = field_->p();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt{t.mono, t.coeff}; // c^(1/p) = c over F_p
        for (auto& e : nt.mono) {
            if (e % p != 0) return std::nullopt;
            e /= p;
        }
        out.push_back(std::move(nt));
    }
    return from_terms(field_, std::move(out));
}

Polynomial Polynomial::lifted(const FieldPtr& bigger) const {
    const std::size_t m = field_->var_count();
    if (bigger->p() != field_->p() || bigger->var_count() < m)
        raise(ErrorCode::FieldMismatch, "lift target is not an extension");
    for (std::size_t i = 0; i < m; ++i)
        if (bigger->var_name(i) != field_->var_name(i))
            raise(ErrorCode::FieldMismatch, "lift target does not extend the variable list");
    std::vector<Term> out = terms_;
    for (auto& t : out) t.mono.resize(bigger->var_count(), 0);
    return from_terms(bigger, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "+";
        first = false;
        bool has_var = false;
        for (uint32_t e : t.mono)
            if (e != 0) has_var = true;
        if (t.coeff != 1 || !has_var) {
            os << t.coeff;
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << field_->var_name(i);
            if (t.mono[i] > 1) os << "^" << t.mono[i];
        }
    }
    return os.str();
}

namespace {

// univariate view in `var`: degree -> coefficient polynomial (var-free)
std::map<uint32_t, Polynomial> univariate_view(const Polynomial& f, std::size_t var) {
    std::map<uint32_t, Polynomial> coeffs;
    for (const auto& t : f.terms()) {
        uint32_t d = t.mono[var];
        Term stripped{t.mono, t.coeff};
        stripped.mono[var] = 0;
        auto it = coeffs.find(d);
        Polynomial piece = Polynomial::from_terms(f.field(), {stripped});
        if (it == coeffs.end())
            coeffs.emplace(d, std::move(piece));
        else
            it->second = it->second + piece;
    }
    return coeffs;
}

uint32_t deg_of(const std::map<uint32_t, Polynomial>& u) { // view is zero-free
    return u.empty() ? 0 : u.rbegin()->first;
}

// content of f with respect to `var`: monic gcd of the coefficient polynomials
Polynomial content_in(const Polynomial& f, std::size_t var) {
    Polynomial c = Polynomial::zero(f.field());
    for (const auto& [d, coeff] : univariate_view(f, var)) {
        (void)d;
        c = poly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// scalar-multiple pseudo-remainder of a by b in `var`; deg_var(b) >= 1
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
    const FieldPtr& field = a.field();
    auto bv = univariate_view(b, var);
    const uint32_t db = deg_of(bv);
    const Polynomial lc_b = bv.rbegin()->second;
    while (!a.is_zero()) {
        auto av = univariate_view(a, var);
        uint32_t da = deg_of(av);
        if (da < db) break;
        const Polynomial lc_a = av.rbegin()->second;
        // a <- lc_b * a - lc_a * t_var^(da-db) * b
        Monomial shift(field->var_count(), 0);
        shift[var] = da - db;
        Polynomial shifted = Polynomial::monomial(field, shift, 1) * b;
        a = a * lc_b - shifted * lc_a;
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    check_same_field(f.field(), g.field());
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.field(), 1);

    // shortcut: when one operand divides the other it is already the gcd
    {
        const Polynomial& small = f.total_degree() <= g.total_degree() ? f : g;
        const Polynomial& large = f.total_degree() <= g.total_degree() ? g : f;
        if (large.divided_by(small).has_value()) return small.monic();
    }

    // main variable: highest index used by either operand
    std::size_t var = 0;
    for (std::size_t i = f.field()->var_count(); i-- > 0;) {
        if (f.uses_var(i) || g.uses_var(i)) {
            var = i;
            break;
        }
    }

    Polynomial cf = content_in(f, var);
    Polynomial cg = content_in(g, var);
    Polynomial c = poly_gcd(cf, cg);

    Polynomial a = *f.divided_by(cf);
    Polynomial b = *g.divided_by(cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);

    // primitive PRS
    while (true) {
        if (b.is_zero()) break;
        if (b.degree_in(var) == 0) {
            // primitive and var-free => unit
            a = Polynomial::constant(f.field(), 1);
            break;
        }
        Polynomial r = pseudo_remainder(a, b, var);
        if (!r.is_zero()) r = *r.divided_by(content_in(r, var));
        a = std::move(b);
        b = std::move(r);
    }
    return (c * a).monic();
}

} // namespace qlf
