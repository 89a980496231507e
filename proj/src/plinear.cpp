#include "qlf/plinear.hpp"

#include <set>

namespace qlf {

RationalFunction FpCoordinates::reconstruct(const FieldPtr& field) const {
    RationalFunction acc = RationalFunction::zero(field);
    for (const auto& [e, v] : entries)
        acc = acc + v.pow(int64_t(field->p())) * RationalFunction(Polynomial::monomial(field, e, 1));
    return acc;
}

FpCoordinates fp_coordinates(const RationalFunction& a) {
    const FieldPtr& field = a.field();
    const uint32_t p = field->p();
    FpCoordinates out;
    if (a.is_zero()) return out;

    // a = num * den^(p-1) / den^p; split G = num * den^(p-1) by residues
    // of the exponent vectors mod p, each class is t^e * (H_e)^p
    Polynomial g = a.num() * a.den().pow(p - 1);
    std::map<Monomial, std::vector<Term>> classes;
    for (const auto& t : g.terms()) {
        Monomial residue(t.mono.size());
        Term reduced{t.mono, t.coeff};
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            residue[i] = t.mono[i] % p;
            reduced.mono[i] = t.mono[i] / p;
        }
        classes[residue].push_back(std::move(reduced));
    }
    for (auto& [e, terms] : classes) {
        Polynomial h = Polynomial::from_terms(field, std::move(terms));
        RationalFunction v(std::move(h), a.den());
        if (!v.is_zero()) out.entries.emplace(e, std::move(v));
    }
    return out;
}

linalg::Matrix differential_matrix(const std::vector<RationalFunction>& elements) {
    linalg::Matrix m;
    if (elements.empty()) return m;
    const FieldPtr& field = elements.front().field();
    const std::size_t nvars = field->var_count();
    m.assign(nvars, linalg::Row());
    for (std::size_t i = 0; i < nvars; ++i) {
        m[i].reserve(elements.size());
        for (const auto& a : elements) {
            check_same_field(field, a.field());
            m[i].push_back(a.derivative(i));
        }
    }
    return m;
}

bool p_independent(const std::vector<RationalFunction>& s) {
    if (s.empty()) return true;
    return linalg::rank(differential_matrix(s)) == s.size();
}

std::size_t p_degree(const std::vector<RationalFunction>& s) {
    if (s.empty()) return 0;
    return linalg::rank(differential_matrix(s));
}

PBasisResult p_basis_of(const std::vector<RationalFunction>& s) {
    PBasisResult out;
    std::size_t current = 0;
    for (const auto& elem : s) {
        std::vector<RationalFunction> candidate = out.basis;
        candidate.push_back(elem);
        std::size_t r = p_degree(candidate);
        if (r > current) {
            out.basis.push_back(elem);
            current = r;
        }
    }
    out.pdeg = current;
    return out;
}

bool member_fp_adjoin(const RationalFunction& a, const std::vector<RationalFunction>& b) {
    std::vector<RationalFunction> joined = b;
    joined.push_back(a);
    return p_degree(joined) == p_degree(b);
}

std::vector<RationalFunction> relative_adjoin_basis(const std::vector<RationalFunction>& a,
                                                    const std::vector<RationalFunction>& s) {
    if (!p_independent(a))
        raise(ErrorCode::InputNotPIndependent, "relative adjunction base is not p-independent");
    std::vector<RationalFunction> chosen;
    std::vector<RationalFunction> ctx = a;
    std::size_t current = a.size();
    for (const auto& elem : s) {
        ctx.push_back(elem);
        std::size_t r = p_degree(ctx);
        if (r > current) {
            chosen.push_back(elem);
            current = r;
        } else {
            ctx.pop_back();
        }
    }
    return chosen;
}

namespace {

// stack the fp-coordinate vectors of `elems` into rows over a shared
// column set (union of appearing exponent residues)
linalg::Matrix coordinate_rows(const std::vector<RationalFunction>& elems, const FieldPtr& field) {
    std::vector<FpCoordinates> coords;
    coords.reserve(elems.size());
    std::set<Monomial> cols_set;
    for (const auto& e : elems) {
        coords.push_back(fp_coordinates(e));
        for (const auto& [mono, v] : coords.back().entries) cols_set.insert(mono);
    }
    std::vector<Monomial> cols(cols_set.begin(), cols_set.end());
    linalg::Matrix rows;
    rows.reserve(elems.size());
    for (const auto& c : coords) {
        linalg::Row row;
        row.reserve(cols.size());
        for (const auto& mono : cols) {
            auto it = c.entries.find(mono);
            row.push_back(it == c.entries.end() ? RationalFunction::zero(field) : it->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

bool member_fp_span(const RationalFunction& a, const std::vector<RationalFunction>& gens) {
    if (a.is_zero()) return true;
    if (gens.empty()) return false;
    const FieldPtr& field = a.field();
    std::vector<RationalFunction> all = gens;
    all.push_back(a);
    linalg::Matrix with = coordinate_rows(all, field);
    linalg::Matrix without(with.begin(), with.end() - 1);
    // coordinates are p-th-root-semilinear in the F^p-coefficients, so
    // F^p-span questions become F-rank questions on the coordinate rows
    return linalg::rank(with) == linalg::rank(without);
}

std::vector<std::size_t> fp_span_basis_indices(const std::vector<RationalFunction>& gens) {
    std::vector<std::size_t> picked;
    std::vector<RationalFunction> chosen;
    if (gens.empty()) return picked;
    const FieldPtr& field = gens.front().field();
    std::size_t current = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        chosen.push_back(gens[i]);
        std::size_t r = linalg::rank(coordinate_rows(chosen, field));
        if (r > current) {
            picked.push_back(i);
            current = r;
        } else {
            chosen.pop_back();
        }
    }
    return picked;
}

} // namespace qlf
