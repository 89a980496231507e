#include "qlf/quasilinear.hpp"

#include <algorithm>
#include <cctype>

namespace qlf {

PForm make_pform(FieldPtr field, std::vector<RationalFunction> entries) {
    if (entries.empty()) raise(ErrorCode::Internal, "p-form needs at least one entry");
    for (const auto& e : entries) check_same_field(field, e.field());
    return PForm{std::move(field), std::move(entries)};
}

bool PForm::is_zero_form() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

PForm PForm::scaled_by(const RationalFunction& x) const {
    PForm out{field, {}};
    out.entries.reserve(entries.size());
    for (const auto& e : entries) out.entries.push_back(e * x);
    return out;
}

bool pform_isometric(const PForm& phi, const PForm& psi) {
    check_same_field(phi.field, psi.field);
    if (phi.dim() != psi.dim()) return false;
    std::size_t ra = fp_span_basis_indices(phi.entries).size();
    std::size_t rb = fp_span_basis_indices(psi.entries).size();
    if (ra != rb) return false;
    std::vector<RationalFunction> joined = phi.entries;
    joined.insert(joined.end(), psi.entries.begin(), psi.entries.end());
    return fp_span_basis_indices(joined).size() == ra;
}

AnisotropicDecomposition pform_anisotropic_part(const PForm& phi) {
    auto idx = fp_span_basis_indices(phi.entries);
    // the part of a fully isotropic form has dimension 0
    PForm an{phi.field, {}};
    for (std::size_t i : idx) an.entries.push_back(phi.entries[i]);
    return AnisotropicDecomposition{std::move(an), phi.dim() - idx.size()};
}

NormFieldInfo norm_field(const PForm& phi) {
    std::size_t lead = phi.dim();
    for (std::size_t i = 0; i < phi.dim(); ++i)
        if (!phi.entries[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == phi.dim()) raise(ErrorCode::ZeroForm, "norm field of the zero form");
    NormFieldInfo out{phi.entries[lead], {}, {}, 0};
    RationalFunction inv = out.scale.inverse();
    for (const auto& e : phi.entries) out.quotients.push_back(e * inv);
    out.basis = p_basis_of(out.quotients).basis;
    out.k = out.basis.size();
    return out;
}

uint64_t ndeg_over_extension(const PForm& phi, const std::vector<RationalFunction>& a) {
    if (!p_independent(a))
        raise(ErrorCode::InputNotPIndependent, "adjoined root list is not p-independent");
    NormFieldInfo nf = norm_field(phi);
    std::vector<RationalFunction> joined = a;
    joined.insert(joined.end(), nf.quotients.begin(), nf.quotients.end());
    std::size_t rel = p_degree(joined) - a.size();
    uint64_t ndeg = 1;
    for (std::size_t i = 0; i < rel; ++i) ndeg *= phi.field->p();
    return ndeg;
}

bool irreducibility_criterion(const PForm& phi) { return norm_field(phi).k > 0; }

namespace {

NormalizedPForm normalize_pform(const PForm& phi, std::size_t original_index) {
    NormFieldInfo nf = norm_field(phi); // ZeroForm on the zero form
    // scaled entries keep their positions; the leading 1 moves to front
    std::size_t lead = 0;
    while (phi.entries[lead].is_zero()) ++lead;
    std::vector<RationalFunction> rest;
    for (std::size_t i = 0; i < nf.quotients.size(); ++i)
        if (i != lead) rest.push_back(nf.quotients[i]);

    // stable reorder: greedy norm-basis positions first
    std::vector<char> chosen(rest.size(), 0);
    std::vector<RationalFunction> ctx;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        ctx.push_back(rest[i]);
        if (p_degree(ctx) > rank) {
            ++rank;
            chosen[i] = 1;
        } else {
            ctx.pop_back();
        }
    }

    NormalizedPForm out{PForm{phi.field, {}}, nf.scale, rank, original_index};
    out.scaled.entries.push_back(RationalFunction::one(phi.field));
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (chosen[i]) out.scaled.entries.push_back(rest[i]);
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (!chosen[i]) out.scaled.entries.push_back(rest[i]);
    return out;
}

std::string pick_var_prefix(const FieldPtr& field) {
    std::string prefix = "X";
    while (true) {
        bool clash = false;
        for (const auto& v : field->vars())
            if (v.rfind(prefix, 0) == 0 && v.size() > prefix.size() &&
                std::isdigit(static_cast<unsigned char>(v[prefix.size()])))
                clash = true;
        if (!clash) return prefix;
        prefix += "_";
    }
}

} // namespace

FFTowerDescriptor normalize_tower(const std::vector<PForm>& forms) {
    if (forms.empty()) raise(ErrorCode::ZeroForm, "empty tower");
    FFTowerDescriptor tower;
    tower.field = forms.front().field;
    for (const auto& phi : forms) check_same_field(tower.field, phi.field);

    std::vector<NormalizedPForm> retained;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].is_zero_form()) raise(ErrorCode::ZeroForm, "zero form in tower");
        NormalizedPForm nf = normalize_pform(forms[i], i);
        if (nf.norm_rank == 0)
            tower.pruned.push_back(i); // purely transcendental factor
        else
            retained.push_back(std::move(nf));
    }

    // stable greedy: keep a form when its norm basis extends the selected
    // transversal criterion
    std::vector<char> selected(retained.size(), 0);
    std::vector<std::vector<RationalFunction>> sel_bases;
    for (std::size_t i = 0; i < retained.size(); ++i) {
        SetWedgeSpec spec;
        spec.sets = sel_bases;
        spec.sets.push_back(retained[i].norm_basis());
        if (set_wedge_nonzero(spec).nonzero) {
            selected[i] = 1;
            sel_bases.push_back(retained[i].norm_basis());
        }
    }

    for (std::size_t i = 0; i < retained.size(); ++i)
        if (selected[i]) tower.forms.push_back(retained[i]);
    tower.s = tower.forms.size();
    for (std::size_t i = 0; i < retained.size(); ++i)
        if (!selected[i]) tower.forms.push_back(retained[i]);

    if (tower.s > 0) {
        SetWedgeSpec spec;
        spec.sets = sel_bases;
        auto w = set_wedge_nonzero(spec);
        if (!w.nonzero) raise(ErrorCode::Internal, "selected prefix lost its witness");
        tower.transversal_witness = std::move(w.transversal);
    }
    tower.var_prefix = pick_var_prefix(tower.field);
    return tower;
}

TPolynomials build_T_polynomials(const FFTowerDescriptor& tower) {
    TPolynomials tp;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> slots(tower.forms.size());
    std::size_t base = tower.field->var_count();
    for (std::size_t i = 0; i < tower.forms.size(); ++i) {
        std::size_t n_i = tower.forms[i].scaled.dim() - 1;
        for (std::size_t j = 0; j < n_i; ++j) {
            slots[i].push_back(base + names.size());
            names.push_back(tower.var_prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    }
    tp.extended = extend_field(tower.field, names);
    tp.x_vars = std::move(slots);

    const uint32_t p = tower.field->p();
    for (std::size_t i = 0; i < tower.forms.size(); ++i) {
        const auto& entries = tower.forms[i].scaled.entries; // <1, a_1..a_n>
        const std::size_t n_i = entries.size() - 1;
        const std::size_t k_i = tower.forms[i].norm_rank;

        RationalFunction t_poly = RationalFunction::zero(tp.extended);
        std::vector<RationalFunction> x_pow;
        for (std::size_t j = 0; j < n_i; ++j) {
            x_pow.push_back(RationalFunction::variable(tp.extended, tp.x_vars[i][j]).pow(p));
            t_poly = t_poly + entries[j + 1].lifted(tp.extended) * x_pow.back();
        }
        tp.t.push_back(t_poly);

        // express the dependent differentials through the basis ones:
        // nullspace of (da_1 .. da_k | da_t) is one-dimensional
        std::vector<RationalFunction> q(k_i, RationalFunction::zero(tp.extended));
        for (std::size_t j = 0; j < k_i; ++j) q[j] = x_pow[j];
        for (std::size_t t_idx = k_i; t_idx < n_i; ++t_idx) {
            if (entries[t_idx + 1].is_zero()) continue; // zero slot, d vanishes
            std::vector<RationalFunction> cols(entries.begin() + 1, entries.begin() + 1 + k_i);
            cols.push_back(entries[t_idx + 1]);
            auto ns = linalg::nullspace(differential_matrix(cols), cols.size());
            if (ns.size() != 1 || ns[0].back().is_zero())
                raise(ErrorCode::Internal, "dependent entry without unique relation");
            RationalFunction c_inv = -ns[0].back().inverse();
            for (std::size_t j = 0; j < k_i; ++j) {
                RationalFunction lambda = ns[0][j] * c_inv; // da_t = sum lambda_j da_j
                q[j] = q[j] + lambda.lifted(tp.extended) * x_pow[t_idx];
            }
        }
        tp.q.push_back(std::move(q));
    }
    return tp;
}

bool verify_t_substitutions(const FFTowerDescriptor& tower, const TPolynomials& tp) {
    for (std::size_t i = 0; i < tower.forms.size(); ++i) {
        const std::size_t k_i = tower.forms[i].norm_rank;
        const std::size_t n_i = tower.forms[i].scaled.dim() - 1;
        for (std::size_t j = 0; j < k_i; ++j) {
            std::vector<std::optional<RationalFunction>> values(tp.extended->var_count());
            for (std::size_t m = 0; m < n_i; ++m)
                values[tp.x_vars[i][m]] = m == j ? RationalFunction::one(tp.extended)
                                                 : RationalFunction::zero(tp.extended);
            for (std::size_t jj = 0; jj < k_i; ++jj) {
                RationalFunction got = tp.q[i][jj].substituted(tp.extended, values);
                if (jj == j ? !got.is_one() : !got.is_zero()) return false;
            }
        }
    }
    return true;
}

bool verify_t_differentials(const FFTowerDescriptor& tower, const TPolynomials& tp) {
    for (std::size_t i = 0; i < tower.forms.size(); ++i) {
        DifferentialForm lhs = d_of_element(tp.t[i]);
        DifferentialForm rhs = DifferentialForm::zero(tp.extended, 1);
        for (std::size_t j = 0; j < tower.forms[i].norm_rank; ++j) {
            RationalFunction a = tower.forms[i].scaled.entries[j + 1].lifted(tp.extended);
            rhs = rhs + d_of_element(a).scaled(tp.q[i][j]);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool lemma43_crosscheck(const FFTowerDescriptor& tower) {
    if (tower.forms.empty()) return true; // nothing to compare
    TPolynomials tp = build_T_polynomials(tower);
    bool direct = p_independent(tp.t);
    SetWedgeSpec spec;
    for (const auto& f : tower.forms) spec.sets.push_back(f.norm_basis());
    bool criterion = set_wedge_nonzero(spec).nonzero;
    return direct == criterion;
}

std::vector<DifferentialForm> tower_kernel_wedges(const FFTowerDescriptor& tower) {
    std::vector<std::vector<RationalFunction>> bases;
    for (std::size_t i = 0; i < tower.s; ++i) bases.push_back(tower.forms[i].norm_basis());
    return transversal_wedges(tower.field, bases);
}

SubspaceBasis omega_kernel_ffe(const FFTowerDescriptor& tower, int n, linalg::Mode mode) {
    if (tower.s == 0) return zero_space(tower.field, n); // purely transcendental
    return ann_bruteforce(tower.field, tower_kernel_wedges(tower), n, mode);
}

namespace {

bool same_norm_field(const NormalizedPForm& a, const NormalizedPForm& b) {
    auto ba = a.norm_basis();
    auto bb = b.norm_basis();
    if (ba.size() != bb.size()) return false;
    for (const auto& e : bb)
        if (!member_fp_adjoin(e, ba)) return false;
    for (const auto& e : ba)
        if (!member_fp_adjoin(e, bb)) return false;
    return true;
}

} // namespace

GeneratorSet omega_kernel_closed(const FFTowerDescriptor& tower, int n) {
    if (tower.s == 0) return GeneratorSet{tower.field, n, {}}; // zero kernel

    std::vector<std::vector<RationalFunction>> sel_bases;
    for (std::size_t i = 0; i < tower.s; ++i) sel_bases.push_back(tower.forms[i].norm_basis());

    // case: pairwise-disjoint norm fields (p-degrees add up)
    {
        std::vector<RationalFunction> all;
        std::size_t sum = 0;
        for (const auto& b : sel_bases) {
            all.insert(all.end(), b.begin(), b.end());
            sum += b.size();
        }
        if (p_degree(all) == sum) {
            SetWedgeSpec spec;
            spec.sets = sel_bases;
            return ann_closed_disjoint(spec, n);
        }
    }

    // case: one norm field repeated across the selected forms
    {
        bool all_equal = true;
        for (std::size_t i = 1; i < tower.s && all_equal; ++i)
            all_equal = same_norm_field(tower.forms[0], tower.forms[i]);
        if (all_equal) return ann_closed_power(sel_bases[0], int(tower.s), n);
    }

    // case: norm degree p on every selected form but the last
    {
        bool prefix_deg_p = true;
        for (std::size_t i = 0; i + 1 < tower.s; ++i)
            prefix_deg_p = prefix_deg_p && tower.forms[i].norm_rank == 1;
        if (prefix_deg_p && tower.s >= 2) {
            std::vector<std::vector<RationalFunction>> singles(sel_bases.begin(),
                                                               sel_bases.end() - 1);
            return ann_closed_mixed(singles, sel_bases.back(), n);
        }
    }

    raise(ErrorCode::CaseNotCovered,
          "no closed kernel form for this tower; the exact solver still applies");
}

GeneratorSet kernel_modular_insep(const ModularExtensionDescriptor& ext, int n) {
    if (ext.elements.empty()) raise(ErrorCode::InputNotPIndependent, "empty root list");
    for (uint64_t m : ext.exponents)
        if (m < 1) raise(ErrorCode::HypothesisViolated, "root exponents must be >= 1");
    if (ext.exponents.size() != ext.elements.size())
        raise(ErrorCode::HypothesisViolated, "exponent list does not match the elements");
    if (!p_independent(ext.elements))
        raise(ErrorCode::InputNotPIndependent, "adjoined elements are not p-independent");
    const FieldPtr& field = ext.elements.front().field();
    GeneratorSet g{field, n, {}};
    // the exponents m_i never enter: the kernel only sees d b_i
    for (const auto& b : ext.elements)
        if (n - 1 >= 0) g.items.push_back(GenItem{{b}, n - 1, GenStyle::Omega, false});
    return g;
}

std::vector<DifferentialForm> compositum_wedges(const std::vector<RationalFunction>& a,
                                                const PForm& phi) {
    NormFieldInfo nf = norm_field(phi);
    std::vector<std::vector<RationalFunction>> slots;
    for (const auto& ai : a) slots.push_back({ai});
    slots.push_back(nf.basis);
    return transversal_wedges(phi.field, slots);
}

GeneratorSet omega_kernel_compositum(const std::vector<RationalFunction>& a, const PForm& phi,
                                     int n) {
    if (a.empty()) raise(ErrorCode::InputNotPIndependent, "empty root list");
    if (!p_independent(a))
        raise(ErrorCode::InputNotPIndependent, "adjoined roots are not p-independent");
    if (ndeg_over_extension(phi, a) <= 1)
        raise(ErrorCode::NormDegreeCollapsed,
              "the form has norm degree 1 over the extension; the kernel reduces to the modular case");

    const FieldPtr& field = phi.field;
    NormFieldInfo nf = norm_field(phi);
    std::vector<RationalFunction> e = relative_adjoin_basis(a, nf.quotients);
    const int ell = int(e.size());
    if (ell < 1) raise(ErrorCode::Internal, "compositum kernel: l >= 1 must hold here");

    const bool cond = field->p() > 2;
    GeneratorSet g{field, n, {}};
    for (const auto& ai : a)
        if (n - 1 >= 0) g.items.push_back(GenItem{{ai}, n - 1, GenStyle::Omega, false});
    if (n - ell >= 0) g.items.push_back(GenItem{e, n - ell, GenStyle::Omega, false});

    if (n - 1 >= 0) g.items.push_back(GenItem{a, n - 1, GenStyle::Nu, cond});
    std::vector<RationalFunction> joined = a;
    joined.insert(joined.end(), e.begin(), e.end());
    if (n - ell >= 0) g.items.push_back(GenItem{std::move(joined), n - ell, GenStyle::Nu, cond});
    return g;
}

std::vector<RationalFunction> sample_norm_elements(const std::vector<RationalFunction>& gens,
                                                   const FieldPtr& field, std::size_t count,
                                                   std::mt19937_64& rng, uint32_t bound) {
    std::vector<RationalFunction> out;
    if (count == 0) return out;

    // exhaustive monomials g_1^{e_1}...g_k^{e_k}, e_i < p*bound
    std::vector<uint32_t> exps(gens.size(), 0);
    const uint32_t cap = field->p() * bound;
    while (out.size() < count) {
        RationalFunction v = RationalFunction::one(field);
        for (std::size_t i = 0; i < gens.size(); ++i) v = v * gens[i].pow(exps[i]);
        if (!v.is_zero()) out.push_back(v);
        std::size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < cap) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break; // odometer exhausted (also when gens is empty)
    }

    // random F^2-combinations sum c_j^2 * monomial, coefficient degree <= bound
    auto random_coeff = [&](std::uniform_int_distribution<uint32_t>& dist) {
        std::vector<Term> terms;
        std::size_t parts = 1 + dist(rng) % 2;
        for (std::size_t t = 0; t < parts; ++t) {
            Monomial m(field->var_count(), 0);
            for (auto& e : m) e = dist(rng) % (bound + 1);
            terms.push_back({std::move(m), 1});
        }
        return RationalFunction(Polynomial::from_terms(field, std::move(terms)));
    };
    std::uniform_int_distribution<uint32_t> dist(0, 1u << 30);
    while (out.size() < count) {
        RationalFunction v = RationalFunction::zero(field);
        std::size_t parts = 1 + dist(rng) % 3;
        for (std::size_t t = 0; t < parts; ++t) {
            RationalFunction mono = RationalFunction::one(field);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (dist(rng) % 2) mono = mono * gens[i];
            RationalFunction c = random_coeff(dist);
            v = v + c.pow(int64_t(field->p())) * mono;
        }
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

} // namespace qlf
