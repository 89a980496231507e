#include "qlf/differential.hpp"

#include <algorithm>

namespace qlf {

std::vector<IndexTuple> index_tuples(std::size_t m, int n) {
    std::vector<IndexTuple> out;
    if (n < 0 || std::size_t(n) > m) return out;
    IndexTuple cur(n);
    for (int i = 0; i < n; ++i) cur[i] = uint32_t(i);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == m - n + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

DifferentialForm::DifferentialForm(FieldPtr field, int degree)
    : field_(std::move(field)), degree_(degree) {
    if (degree_ < 0) raise(ErrorCode::Internal, "negative form degree");
}

DifferentialForm DifferentialForm::zero(FieldPtr field, int degree) {
    return DifferentialForm(std::move(field), degree);
}

DifferentialForm DifferentialForm::scalar(const RationalFunction& value) {
    DifferentialForm f(value.field(), 0);
    f.add_term({}, value);
    return f;
}

DifferentialForm DifferentialForm::basis_wedge(FieldPtr field, const IndexTuple& indices) {
    DifferentialForm f(field, int(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= field->var_count())
            raise(ErrorCode::Internal, "dt index out of range");
        if (i + 1 < indices.size() && indices[i] >= indices[i + 1])
            raise(ErrorCode::Internal, "dt indices must be strictly increasing");
    }
    f.add_term(indices, RationalFunction::one(field));
    return f;
}

void DifferentialForm::add_term(const IndexTuple& indices, const RationalFunction& coeff) {
    if (int(indices.size()) != degree_) raise(ErrorCode::Internal, "term arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(indices);
    if (it == terms_.end()) {
        terms_.emplace(indices, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& rhs) const {
    check_same_field(field_, rhs.field_);
    if (degree_ != rhs.degree_) raise(ErrorCode::DegreeMismatch, "form degrees differ in +");
    DifferentialForm out = *this;
    for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, c);
    return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& rhs) const {
    check_same_field(field_, rhs.field_);
    if (degree_ != rhs.degree_) raise(ErrorCode::DegreeMismatch, "form degrees differ in -");
    DifferentialForm out = *this;
    for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, -c);
    return out;
}

DifferentialForm DifferentialForm::scaled(const RationalFunction& c) const {
    DifferentialForm out(field_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : terms_) out.add_term(idx, v * c);
    return out;
}

bool DifferentialForm::operator==(const DifferentialForm& rhs) const {
    if (degree_ != rhs.degree_ || terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

DifferentialForm DifferentialForm::lifted(const FieldPtr& bigger) const {
    DifferentialForm out(bigger, degree_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, c.lifted(bigger));
    return out;
}

namespace {

// merge strictly increasing tuples; returns sign (+1/-1) or 0 on collision
int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    check_same_field(a.field(), b.field());
    DifferentialForm out(a.field(), a.degree() + b.degree());
    IndexTuple merged;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            int sign = merge_tuples(ia, ib, merged);
            if (sign == 0) continue;
            RationalFunction c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(merged, c);
        }
    return out;
}

DifferentialForm d_of_element(const RationalFunction& a) {
    const FieldPtr& field = a.field();
    DifferentialForm out(field, 1);
    for (std::size_t i = 0; i < field->var_count(); ++i)
        out.add_term({uint32_t(i)}, a.derivative(i));
    return out;
}

DifferentialForm d_operator(const DifferentialForm& w) {
    // d(c dt_I) = dc ^ dt_I on every stored term
    DifferentialForm out(w.field(), w.degree() + 1);
    for (const auto& [idx, c] : w.terms())
        out = out + wedge(d_of_element(c), DifferentialForm::basis_wedge(w.field(), idx));
    return out;
}

DifferentialForm log_form(const std::vector<RationalFunction>& args) {
    if (args.empty()) raise(ErrorCode::ZeroArgument, "logarithmic form needs at least one entry");
    const FieldPtr& field = args.front().field();
    DifferentialForm acc = DifferentialForm::scalar(RationalFunction::one(field));
    for (const auto& a : args) {
        if (a.is_zero()) raise(ErrorCode::ZeroArgument, "logarithmic form of zero");
        acc = wedge(acc, d_of_element(a).scaled(a.inverse()));
    }
    return acc;
}

SetWedgeWitness set_wedge_nonzero(const SetWedgeSpec& spec) {
    SetWedgeWitness out;
    std::vector<std::vector<RationalFunction>> bases;
    for (const auto& s : spec.sets) {
        if (s.empty()) raise(ErrorCode::HypothesisViolated, "set wedge over an empty set");
        bases.push_back(p_basis_of(s).basis);
        if (bases.back().empty()) return out; // pdeg 0 slot kills every wedge
    }
    if (bases.empty()) return out;
    // odometer over the per-set p-bases
    std::vector<std::size_t> idx(bases.size(), 0);
    while (true) {
        std::vector<RationalFunction> pick;
        pick.reserve(bases.size());
        for (std::size_t i = 0; i < bases.size(); ++i) pick.push_back(bases[i][idx[i]]);
        if (p_independent(pick)) {
            out.nonzero = true;
            out.transversal = std::move(pick);
            return out;
        }
        std::size_t i = bases.size();
        while (i > 0) {
            --i;
            if (++idx[i] < bases[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

namespace {

linalg::Row form_to_row(const DifferentialForm& f, const std::vector<IndexTuple>& cols) {
    linalg::Row row;
    row.reserve(cols.size());
    auto it = f.terms().begin();
    for (const auto& c : cols) {
        if (it != f.terms().end() && it->first == c) {
            row.push_back(it->second);
            ++it;
        } else {
            row.push_back(RationalFunction::zero(f.field()));
        }
    }
    return row;
}

DifferentialForm row_to_form(const FieldPtr& field, int degree, const linalg::Row& row,
                             const std::vector<IndexTuple>& cols) {
    DifferentialForm f(field, degree);
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (!row[j].is_zero()) f.add_term(cols[j], row[j]);
    return f;
}

linalg::RrefResult as_rref(const SubspaceBasis& basis, const std::vector<IndexTuple>& cols) {
    linalg::RrefResult rr;
    rr.cols = cols.size();
    for (const auto& f : basis.rows) {
        linalg::Row row = form_to_row(f, cols);
        std::size_t pivot = row.size();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == row.size()) raise(ErrorCode::Internal, "zero row in subspace basis");
        rr.pivot_cols.push_back(pivot);
        rr.rows.push_back(std::move(row));
    }
    return rr;
}

} // namespace

SubspaceBasis full_space(const FieldPtr& field, int degree) {
    SubspaceBasis out{field, degree, {}};
    for (const auto& t : index_tuples(field->var_count(), degree))
        out.rows.push_back(DifferentialForm::basis_wedge(field, t));
    return out;
}

SubspaceBasis zero_space(const FieldPtr& field, int degree) { return SubspaceBasis{field, degree, {}}; }

SubspaceBasis echelonize(const FieldPtr& field, int degree,
                         const std::vector<DifferentialForm>& spanning, linalg::Mode mode) {
    const auto cols = index_tuples(field->var_count(), degree);
    linalg::Matrix m;
    for (const auto& f : spanning) {
        check_same_field(field, f.field());
        if (f.degree() != degree) raise(ErrorCode::DegreeMismatch, "mixed degrees in spanning set");
        if (!f.is_zero()) m.push_back(form_to_row(f, cols));
    }
    SubspaceBasis out{field, degree, {}};
    if (m.empty()) return out;
    for (const auto& row : linalg::rref(m, mode).rows)
        out.rows.push_back(row_to_form(field, degree, row, cols));
    return out;
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.degree != b.degree)
        raise(ErrorCode::DegreeMismatch, "comparing subspaces of different degrees");
    check_same_field(a.field, b.field);
    return a.rows == b.rows;
}

bool subspace_contains(const SubspaceBasis& basis, const DifferentialForm& form) {
    if (form.degree() != basis.degree)
        raise(ErrorCode::DegreeMismatch, "membership test across degrees");
    if (form.is_zero()) return true;
    const auto cols = index_tuples(basis.field->var_count(), basis.degree);
    return linalg::in_row_space(as_rref(basis, cols), form_to_row(form, cols));
}

SubspaceBasis ann_bruteforce(const FieldPtr& field, const std::vector<DifferentialForm>& u,
                             int n, linalg::Mode mode) {
    const std::size_t m = field->var_count();
    const auto cols = index_tuples(m, n);
    if (cols.empty()) return zero_space(field, n);

    std::vector<DifferentialForm> constraints;
    int r = -1;
    for (const auto& f : u) {
        if (f.is_zero()) continue;
        check_same_field(field, f.field());
        if (r == -1)
            r = f.degree();
        else if (f.degree() != r)
            raise(ErrorCode::DegreeMismatch, "annihilator constraints of mixed degree");
        constraints.push_back(f);
    }
    if (constraints.empty()) return full_space(field, n);

    const auto targets = index_tuples(m, n + r);
    if (targets.empty()) return full_space(field, n); // every wedge overflows

    // rows ordered by (constraint index, target tuple); one block per u
    linalg::Matrix a(constraints.size() * targets.size(),
                     linalg::Row(cols.size(), RationalFunction::zero(field)));

    auto fill_column = [&](std::size_t ui, std::size_t col) {
        DifferentialForm w =
            wedge(DifferentialForm::basis_wedge(field, cols[col]), constraints[ui]);
        if (w.is_zero()) return;
        auto t_it = targets.begin();
        for (const auto& [idx, c] : w.terms()) {
            t_it = std::lower_bound(t_it, targets.end(), idx);
            a[ui * targets.size() + std::size_t(t_it - targets.begin())][col] = c;
        }
    };

    const long long total = (long long)(constraints.size() * cols.size());
    const bool parallel = (mode == linalg::Mode::Parallel) ||
                          (mode == linalg::Mode::Auto && total * (long long)targets.size() >= 512);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long k = 0; k < total; ++k)
            fill_column(std::size_t(k) / cols.size(), std::size_t(k) % cols.size());
    } else {
        for (long long k = 0; k < total; ++k)
            fill_column(std::size_t(k) / cols.size(), std::size_t(k) % cols.size());
    }

    SubspaceBasis out{field, n, {}};
    for (const auto& row : linalg::nullspace(a, cols.size(), mode))
        out.rows.push_back(row_to_form(field, n, row, cols));
    return out;
}

std::vector<DifferentialForm> transversal_wedges(
    const FieldPtr& field, const std::vector<std::vector<RationalFunction>>& per_set_elements) {
    std::vector<DifferentialForm> out;
    for (const auto& s : per_set_elements)
        if (s.empty()) return out; // a pdeg-0 slot contributes no wedges
    if (per_set_elements.empty()) return out;
    std::vector<std::size_t> idx(per_set_elements.size(), 0);
    while (true) {
        DifferentialForm w = DifferentialForm::scalar(RationalFunction::one(field));
        for (std::size_t i = 0; i < per_set_elements.size(); ++i)
            w = wedge(w, d_of_element(per_set_elements[i][idx[i]]));
        out.push_back(std::move(w));
        std::size_t i = per_set_elements.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < per_set_elements[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done) break;
    }
    return out;
}

std::vector<DifferentialForm> power_wedges(const FieldPtr& field,
                                           const std::vector<RationalFunction>& elements, int r) {
    std::vector<DifferentialForm> out;
    if (r < 0 || std::size_t(r) > elements.size()) return out;
    std::vector<IndexTuple> combos = index_tuples(elements.size(), r);
    for (const auto& combo : combos) {
        DifferentialForm w = DifferentialForm::scalar(RationalFunction::one(field));
        for (uint32_t i : combo) w = wedge(w, d_of_element(elements[i]));
        out.push_back(std::move(w));
    }
    return out;
}

GeneratorSet ann_closed_disjoint(const SetWedgeSpec& spec, int n) {
    if (spec.sets.empty()) raise(ErrorCode::HypothesisViolated, "no sets given");
    FieldPtr field;
    std::vector<std::vector<RationalFunction>> bases;
    std::vector<RationalFunction> all;
    std::size_t sum = 0;
    for (const auto& s : spec.sets) {
        if (s.empty()) raise(ErrorCode::HypothesisViolated, "empty set in wedge");
        if (!field) field = s.front().field();
        auto pb = p_basis_of(s);
        if (pb.pdeg == 0)
            raise(ErrorCode::HypothesisViolated, "a set has p-degree 0");
        sum += pb.pdeg;
        bases.push_back(std::move(pb.basis));
        all.insert(all.end(), s.begin(), s.end());
    }
    if (p_degree(all) != sum)
        raise(ErrorCode::HypothesisViolated, "p-degrees do not add up across the sets");

    GeneratorSet g{field, n, {}};
    for (const auto& b : bases) {
        int tail = n - int(b.size());
        if (tail < 0) continue; // negative-degree tails denote {0}
        g.items.push_back(GenItem{b, tail, GenStyle::Omega, false});
    }
    return g;
}

GeneratorSet ann_closed_power(const std::vector<RationalFunction>& s, int r, int n) {
    if (s.empty()) raise(ErrorCode::EmptyNormSet, "empty set");
    const FieldPtr& field = s.front().field();
    if (r < 1) raise(ErrorCode::HypothesisViolated, "wedge power must be >= 1");
    auto pb = p_basis_of(s);
    const int k = int(pb.pdeg);
    if (k == 0) raise(ErrorCode::EmptyNormSet, "set has p-degree 0");
    const bool cond = field->p() > 2;

    GeneratorSet g{field, n, {}};
    if (r > k) {
        // every r-fold wedge vanishes; the annihilator is everything
        if (n >= 0) {
            g.items.push_back(GenItem{{}, n, GenStyle::Omega, false});
            g.items.push_back(GenItem{{}, n, GenStyle::Nu, cond});
        }
        return g;
    }
    const int t = k - r + 1;
    for (const auto& combo : index_tuples(std::size_t(k), t)) {
        if (n - t < 0) continue;
        std::vector<RationalFunction> prefix;
        for (uint32_t i : combo) prefix.push_back(pb.basis[i]);
        g.items.push_back(GenItem{std::move(prefix), n - t, GenStyle::Omega, false});
    }
    if (n - t >= 0)
        g.items.push_back(GenItem{pb.basis, n - t, GenStyle::Nu, cond});
    return g;
}

GeneratorSet ann_closed_mixed(const std::vector<std::vector<RationalFunction>>& pdeg1_sets,
                              const std::vector<RationalFunction>& last_set, int n) {
    if (last_set.empty()) raise(ErrorCode::HypothesisViolated, "empty trailing set");
    const FieldPtr& field = last_set.front().field();

    std::vector<RationalFunction> a;
    for (const auto& s : pdeg1_sets) {
        auto pb = p_basis_of(s);
        if (pb.pdeg != 1)
            raise(ErrorCode::HypothesisViolated, "prefix set does not have p-degree 1");
        a.push_back(pb.basis.front());
    }

    SetWedgeSpec all;
    all.sets = pdeg1_sets;
    all.sets.push_back(last_set);
    if (!set_wedge_nonzero(all).nonzero)
        raise(ErrorCode::HypothesisViolated, "wedge set is {0}");

    std::vector<RationalFunction> e = relative_adjoin_basis(a, last_set);
    const int ell = int(e.size());
    if (ell < 1) raise(ErrorCode::Internal, "mixed annihilator: l >= 1 must hold here");

    const bool cond = field->p() > 2;
    GeneratorSet g{field, n, {}};
    for (const auto& ai : a)
        if (n - 1 >= 0) g.items.push_back(GenItem{{ai}, n - 1, GenStyle::Omega, false});
    if (n - ell >= 0) g.items.push_back(GenItem{e, n - ell, GenStyle::Omega, false});

    if (!a.empty() && n - 1 >= 0) g.items.push_back(GenItem{a, n - 1, GenStyle::Nu, cond});
    std::vector<RationalFunction> joined = a;
    joined.insert(joined.end(), e.begin(), e.end());
    if (n - ell >= 0) g.items.push_back(GenItem{std::move(joined), n - ell, GenStyle::Nu, cond});
    return g;
}

SubspaceBasis expand_generator_set(const GeneratorSet& g, linalg::Mode mode) {
    const FieldPtr& field = g.field;
    const std::size_t m = field->var_count();
    std::vector<DifferentialForm> spanning;

    auto emit_omega = [&](const std::vector<RationalFunction>& prefix, int tail) {
        DifferentialForm base = DifferentialForm::scalar(RationalFunction::one(field));
        for (const auto& p : prefix) base = wedge(base, d_of_element(p));
        for (const auto& j : index_tuples(m, tail))
            spanning.push_back(wedge(base, DifferentialForm::basis_wedge(field, j)));
    };

    for (const auto& item : g.items) {
        if (item.tail_degree < 0) continue;
        if (item.style == GenStyle::Omega) {
            if (int(item.prefix.size()) + item.tail_degree != g.degree)
                raise(ErrorCode::HypothesisViolated, "omega item arity mismatch");
            if (!p_independent(item.prefix))
                raise(ErrorCode::HypothesisViolated, "omega item prefix is p-dependent");
            emit_omega(item.prefix, item.tail_degree);
        } else {
            // nu item: the F-span of its logarithmic family equals the sum
            // of the omega expansions over t-subsets of a p-basis of the
            // coefficient-field generators
            const int t = g.degree - item.tail_degree;
            if (t < 0) raise(ErrorCode::HypothesisViolated, "nu item with negative slot count");
            auto pb = p_basis_of(item.prefix);
            for (const auto& combo : index_tuples(pb.basis.size(), t)) {
                std::vector<RationalFunction> prefix;
                for (uint32_t i : combo) prefix.push_back(pb.basis[i]);
                emit_omega(prefix, item.tail_degree);
            }
        }
    }
    return echelonize(field, g.degree, spanning, mode);
}

} // namespace qlf
