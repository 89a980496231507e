#include "qlf/field.hpp"

#include <sstream>

namespace qlf {

RationalFunction::RationalFunction(FieldPtr field)
    : field_(field), num_(Polynomial::zero(field)), den_(Polynomial::constant(field, 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : field_(num.field()), num_(std::move(num)), den_(std::move(den)) {
    check_same_field(num_.field(), den_.field());
    normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : field_(num.field()), num_(std::move(num)), den_(Polynomial::constant(field_, 1)) {}

RationalFunction RationalFunction::zero(FieldPtr field) { return RationalFunction(std::move(field)); }

RationalFunction RationalFunction::one(FieldPtr field) { return constant(std::move(field), 1); }

RationalFunction RationalFunction::constant(FieldPtr field, int64_t c) {
    return RationalFunction(Polynomial::constant(field, c));
}

RationalFunction RationalFunction::variable(FieldPtr field, std::size_t i) {
    return RationalFunction(Polynomial::variable(field, i));
}

void RationalFunction::normalize() {
    if (den_.is_zero()) raise(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(field_, 1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant() || g.leading().coeff != 1) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
    uint32_t lc = den_.leading().coeff;
    if (lc != 1) {
        uint32_t inv = field_->inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RationalFunction::is_one() const { return num_.is_constant() && num_.constant_value() == 1 && den_.is_constant(); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    check_same_field(field_, rhs.field_);
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    check_same_field(field_, rhs.field_);
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    check_same_field(field_, rhs.field_);
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    check_same_field(field_, rhs.field_);
    if (rhs.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction acc = one(field_);
    RationalFunction base = *this;
    uint64_t k = uint64_t(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalFunction(std::move(n), den_ * den_);
}

std::optional<RationalFunction> RationalFunction::pth_root() const {
    auto rn = num_.pth_root();
    if (!rn) return std::nullopt;
    auto rd = den_.pth_root();
    if (!rd) return std::nullopt;
    return RationalFunction(std::move(*rn), std::move(*rd));
}

RationalFunction RationalFunction::lifted(const FieldPtr& bigger) const {
    return RationalFunction(num_.lifted(bigger), den_.lifted(bigger));
}

RationalFunction RationalFunction::substituted(
    const FieldPtr& target, const std::vector<std::optional<RationalFunction>>& values) const {
    if (values.size() != field_->var_count())
        raise(ErrorCode::Internal, "substitution arity mismatch");
    auto eval_poly = [&](const Polynomial& p) {
        RationalFunction acc = RationalFunction::zero(target);
        for (const auto& t : p.terms()) {
            RationalFunction term = RationalFunction::constant(target, int64_t(t.coeff));
            for (std::size_t i = 0; i < t.mono.size(); ++i) {
                if (t.mono[i] == 0) continue;
                RationalFunction base = [&]() {
                    if (values[i]) {
                        check_same_field(values[i]->field(), target);
                        return *values[i];
                    }
                    auto idx = target->var_index(field_->var_name(i));
                    if (!idx)
                        raise(ErrorCode::FieldMismatch,
                              "substitution target lacks variable " + field_->var_name(i));
                    return RationalFunction::variable(target, *idx);
                }();
                term = term * base.pow(int64_t(t.mono[i]));
            }
            acc = acc + term;
        }
        return acc;
    };
    RationalFunction dn = eval_poly(den_);
    if (dn.is_zero()) raise(ErrorCode::DivisionByZero, "substitution hits a pole");
    return eval_poly(num_) / dn;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
    switch (op) {
        case RfOp::Add: return a + b;
        case RfOp::Sub: return a - b;
        case RfOp::Mul: return a * b;
        case RfOp::Div: return a / b;
    }
    raise(ErrorCode::Internal, "unknown operation");
}

} // namespace qlf
