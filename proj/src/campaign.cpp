#include "qlf/campaign.hpp"

#include <sstream>

#include "qlf/job.hpp"

namespace qlf {
namespace campaign {

namespace {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

const std::vector<std::string> kSuites{
    "closed-annihilators", "kernel-identity", "lemma43",    "order-invariance",
    "closed-kernels",      "char2-generators", "identities", "worked-identities"};

std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

FieldPtr random_field(Rng& rng, uint32_t p, std::size_t min_vars = 2, std::size_t max_vars = 4) {
    static const std::vector<std::string> pool{"x", "y", "z", "w"};
    std::size_t m = min_vars + pick(rng, max_vars - min_vars + 1);
    return make_field(p, {pool.begin(), pool.begin() + m});
}

// elements of F^p(v) built as v*u^p + w^p with small u, w; they generate
// the same field as v while looking nothing like it
RationalFunction decorate(Rng& rng, const FieldPtr& field, const RationalFunction& v) {
    const uint32_t p = field->p();
    auto var = [&](std::size_t i) { return RationalFunction::variable(field, i); };
    RationalFunction u = RationalFunction::one(field);
    switch (pick(rng, 4)) {
        case 0: break;
        case 1: u = var(pick(rng, field->var_count())); break;
        case 2: u = var(pick(rng, field->var_count())) + RationalFunction::one(field); break;
        default: u = var(pick(rng, field->var_count())).inverse(); break;
    }
    RationalFunction w = RationalFunction::zero(field);
    switch (pick(rng, 3)) {
        case 0: break;
        case 1: w = RationalFunction::constant(field, int64_t(1 + pick(rng, p - 1))); break;
        default: w = var(pick(rng, field->var_count())); break;
    }
    return v * u.pow(int64_t(p)) + w.pow(int64_t(p));
}

// a generating set for F^p(block vars): decorated generators plus
// redundant members (products, p-th powers), sizes <= 3
std::vector<RationalFunction> block_set(Rng& rng, const FieldPtr& field,
                                        const std::vector<std::size_t>& block) {
    std::vector<RationalFunction> out;
    RationalFunction prod = RationalFunction::one(field);
    for (std::size_t v : block) {
        out.push_back(decorate(rng, field, RationalFunction::variable(field, v)));
        prod = prod * RationalFunction::variable(field, v);
    }
    if (out.size() < 3 && pick(rng, 2) == 0) {
        if (block.size() > 1 && pick(rng, 2) == 0)
            out.push_back(decorate(rng, field, prod)); // generates jointly
        else
            out.push_back(decorate(rng, field, out.front()));
    }
    // occasionally shuffle two entries; field stays the same
    if (out.size() >= 2 && pick(rng, 2) == 0) std::swap(out[0], out[1]);
    return out;
}

std::vector<std::vector<std::size_t>> pick_disjoint_blocks(Rng& rng, std::size_t m,
                                                           std::size_t count,
                                                           std::size_t max_block) {
    std::vector<std::size_t> vars(m);
    for (std::size_t i = 0; i < m; ++i) vars[i] = i;
    for (std::size_t i = m; i > 1; --i) std::swap(vars[i - 1], vars[pick(rng, i)]);
    std::vector<std::vector<std::size_t>> blocks(count);
    std::size_t at = 0;
    for (std::size_t b = 0; b < count; ++b) {
        std::size_t take = 1 + pick(rng, std::min(max_block, (m - at) - (count - b - 1)));
        for (std::size_t i = 0; i < take; ++i) blocks[b].push_back(vars[at++]);
    }
    return blocks;
}

Json rf_list_json(const std::vector<RationalFunction>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

Json sets_json(const std::vector<std::vector<RationalFunction>>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(rf_list_json(s));
    return out;
}

struct Failure {
    std::string message;
    Json payload;
};

// alternative p-basis of F^p(basis): triangular transform
// c_j = u_j^p b_j + sum_{i<j} v_i^p b_i + w^p with invertible u_j
std::vector<RationalFunction> alternative_basis(Rng& rng, const FieldPtr& field,
                                                const std::vector<RationalFunction>& basis) {
    const uint32_t p = field->p();
    std::vector<RationalFunction> alt;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        RationalFunction u = pick(rng, 2) ? RationalFunction::variable(field, pick(rng, field->var_count()))
                                          : RationalFunction::one(field);
        RationalFunction c = basis[j] * u.pow(int64_t(p));
        for (std::size_t i = 0; i < j; ++i)
            if (pick(rng, 2))
                c = c + basis[i] * RationalFunction::variable(field, pick(rng, field->var_count()))
                                       .pow(int64_t(p));
        if (pick(rng, 2)) c = c + RationalFunction::one(field);
        alt.push_back(c);
    }
    if (p_degree(alt) != basis.size())
        raise(ErrorCode::Internal, "alternative basis lost rank");
    for (const auto& b : basis)
        if (!member_fp_adjoin(b, alt)) raise(ErrorCode::Internal, "alternative basis lost span");
    return alt;
}

// ---- suite bodies ------------------------------------------------------

// expand(closed form) == solver for the disjoint / power / mixed cases
std::optional<Failure> closed_annihilators(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3};
    for (std::size_t iter = 0; iter < instances; ++iter) {
        FieldPtr field = random_field(rng, primes[iter % primes.size()]);
        const std::size_t m = field->var_count();
        int n = int(pick(rng, std::min<std::size_t>(m, 3) + 1));
        const char* kase = "";
        try {
            switch (iter % 3) {
                case 0: { // disjoint
                    kase = "disjoint";
                    std::size_t r = 1 + pick(rng, std::min<std::size_t>(3, m));
                    auto blocks = pick_disjoint_blocks(rng, m, r, 2);
                    std::vector<std::vector<RationalFunction>> sets;
                    std::vector<std::vector<RationalFunction>> bases;
                    for (const auto& b : blocks) {
                        sets.push_back(block_set(rng, field, b));
                        bases.push_back(p_basis_of(sets.back()).basis);
                    }
                    auto g = ann_closed_disjoint(SetWedgeSpec{sets}, n);
                    auto oracle = ann_bruteforce(field, transversal_wedges(field, bases), n);
                    if (!subspace_equal(expand_generator_set(g), oracle))
                        return Failure{"disjoint case mismatch",
                                       Json{{"p", field->p()}, {"n", n}, {"sets", sets_json(sets)}}};
                    break;
                }
                case 1: { // power, including r > k
                    kase = "power";
                    std::size_t k0 = 1 + pick(rng, std::min<std::size_t>(3, m));
                    auto blocks = pick_disjoint_blocks(rng, m, 1, k0);
                    auto s = block_set(rng, field, blocks[0]);
                    auto pb = p_basis_of(s);
                    int r = 1 + int(pick(rng, pb.pdeg + 2));
                    auto g = ann_closed_power(s, r, n);
                    auto oracle = ann_bruteforce(field, power_wedges(field, pb.basis, r), n);
                    if (!subspace_equal(expand_generator_set(g), oracle))
                        return Failure{"power case mismatch",
                                       Json{{"p", field->p()},
                                            {"n", n},
                                            {"r", r},
                                            {"set", rf_list_json(s)}}};
                    break;
                }
                default: { // mixed
                    kase = "mixed";
                    std::size_t r = 1 + pick(rng, std::min<std::size_t>(2, m - 1));
                    auto blocks = pick_disjoint_blocks(rng, m, r + 1, 1);
                    std::vector<std::vector<RationalFunction>> prefix;
                    std::vector<std::vector<RationalFunction>> bases;
                    for (std::size_t i = 0; i < r; ++i) {
                        prefix.push_back(block_set(rng, field, blocks[i]));
                        bases.push_back(p_basis_of(prefix.back()).basis);
                    }
                    // the last set mixes a fresh generator with prefix vars
                    std::vector<RationalFunction> last{
                        decorate(rng, field, RationalFunction::variable(field, blocks[r][0]))};
                    if (pick(rng, 2)) {
                        RationalFunction mixed_in =
                            RationalFunction::variable(field, blocks[r][0]) *
                            RationalFunction::variable(field, blocks[0][0]);
                        last.push_back(decorate(rng, field, mixed_in));
                    }
                    if (pick(rng, 2)) last.push_back(decorate(rng, field, last.front()));
                    bases.push_back(p_basis_of(last).basis);
                    auto g = ann_closed_mixed(prefix, last, n);
                    auto oracle = ann_bruteforce(field, transversal_wedges(field, bases), n);
                    if (!subspace_equal(expand_generator_set(g), oracle)) {
                        auto all = prefix;
                        all.push_back(last);
                        return Failure{"mixed case mismatch",
                                       Json{{"p", field->p()}, {"n", n}, {"sets", sets_json(all)}}};
                    }
                    break;
                }
            }
        } catch (const Error& e) {
            return Failure{std::string("unexpected error in ") + kase + ": " + e.what(),
                           Json{{"p", field->p()}, {"n", n}}};
        }
        ++checked;
    }
    return std::nullopt;
}

PForm random_pform(Rng& rng, const FieldPtr& field, std::size_t max_dim) {
    std::vector<RationalFunction> entries;
    std::size_t dim = 2 + pick(rng, max_dim - 1);
    entries.push_back(pick(rng, 3) == 0 ? RationalFunction::zero(field)
                                        : RationalFunction::one(field));
    while (entries.size() < dim) {
        switch (pick(rng, 5)) {
            case 0:
                entries.push_back(RationalFunction::variable(field, pick(rng, field->var_count())));
                break;
            case 1: {
                auto a = RationalFunction::variable(field, pick(rng, field->var_count()));
                auto b = RationalFunction::variable(field, pick(rng, field->var_count()));
                entries.push_back(a * b);
                break;
            }
            case 2:
                entries.push_back(decorate(
                    rng, field, RationalFunction::variable(field, pick(rng, field->var_count()))));
                break;
            case 3:
                entries.push_back(
                    RationalFunction::variable(field, pick(rng, field->var_count())).pow(2));
                break;
            default:
                entries.push_back(RationalFunction::constant(field, int64_t(pick(rng, field->p()))));
                break;
        }
    }
    PForm phi{field, std::move(entries)};
    if (phi.is_zero_form()) phi.entries.back() = RationalFunction::one(field);
    return phi;
}

std::vector<PForm> random_tower(Rng& rng, const FieldPtr& field) {
    std::vector<PForm> tower;
    std::size_t count = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < count; ++i) tower.push_back(random_pform(rng, field, 4));
    return tower;
}

// tower kernel == solver over independently chosen alternative p-bases;
// the same towers also feed the T-polynomial crosscheck
std::optional<Failure> kernel_identity(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3};
    for (std::size_t iter = 0; iter < instances; ++iter) {
        FieldPtr field = random_field(rng, primes[iter % primes.size()]);
        auto forms = random_tower(rng, field);
        int n = 1 + int(pick(rng, 3));
        FFTowerDescriptor tower = normalize_tower(forms);
        if (!lemma43_crosscheck(tower)) {
            Json forms_json = Json::array();
            for (const auto& f : forms) forms_json.push_back(pform_to_json(f));
            return Failure{"criteria disagree on a kernel-identity tower",
                           Json{{"p", field->p()}, {"tower", forms_json}}};
        }
        SubspaceBasis kernel = omega_kernel_ffe(tower, n);

        std::vector<std::vector<RationalFunction>> alt_bases;
        for (std::size_t i = 0; i < tower.s; ++i)
            alt_bases.push_back(alternative_basis(rng, field, tower.forms[i].norm_basis()));
        SubspaceBasis alt = tower.s == 0
                                ? zero_space(field, n)
                                : ann_bruteforce(field, transversal_wedges(field, alt_bases), n);
        if (!subspace_equal(kernel, alt)) {
            Json forms_json = Json::array();
            for (const auto& f : forms) forms_json.push_back(pform_to_json(f));
            return Failure{"kernel differs across p-basis choices",
                           Json{{"p", field->p()}, {"n", n}, {"tower", forms_json}}};
        }
        ++checked;
    }
    return std::nullopt;
}

std::optional<Failure> lemma43(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3};
    for (std::size_t iter = 0; iter < instances; ++iter) {
        FieldPtr field = random_field(rng, primes[iter % primes.size()]);
        auto forms = random_tower(rng, field);
        FFTowerDescriptor tower = normalize_tower(forms);
        if (!lemma43_crosscheck(tower)) {
            Json forms_json = Json::array();
            for (const auto& f : forms) forms_json.push_back(pform_to_json(f));
            return Failure{"direct and transversal criteria disagree",
                           Json{{"p", field->p()}, {"tower", forms_json}}};
        }
        ++checked;
    }
    return std::nullopt;
}

std::optional<Failure> order_invariance(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3};
    for (std::size_t iter = 0; iter < instances; ++iter) {
        FieldPtr field = random_field(rng, primes[iter % primes.size()]);
        auto forms = random_tower(rng, field);
        int n = 1 + int(pick(rng, 2));
        SubspaceBasis base = omega_kernel_ffe(normalize_tower(forms), n);

        auto shuffled = forms;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[pick(rng, i)]);
        for (auto& phi : shuffled) {
            RationalFunction x = RationalFunction::variable(field, pick(rng, field->var_count()));
            if (pick(rng, 2)) x = x + RationalFunction::one(field);
            phi = phi.scaled_by(x);
        }
        SubspaceBasis permuted = omega_kernel_ffe(normalize_tower(shuffled), n);
        if (!subspace_equal(base, permuted)) {
            Json forms_json = Json::array();
            for (const auto& f : forms) forms_json.push_back(pform_to_json(f));
            return Failure{"kernel changed under permutation/rescaling",
                           Json{{"p", field->p()}, {"n", n}, {"tower", forms_json}}};
        }
        ++checked;
    }
    return std::nullopt;
}

// constructed instances of every closed kernel case
std::optional<Failure> closed_kernels(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3};
    for (std::size_t iter = 0; iter < instances; ++iter) {
        const uint32_t p = primes[iter % primes.size()];
        FieldPtr field = random_field(rng, p, 3, 4);
        const std::size_t m = field->var_count();
        int n = 1 + int(pick(rng, 3));
        auto var = [&](std::size_t i) { return RationalFunction::variable(field, i); };
        auto one = RationalFunction::one(field);

        try {
            std::vector<PForm> tower;
            std::string situation;
            switch (iter % 4) {
                case 0: { // case (a): disjoint norm fields
                    situation = "disjoint";
                    auto blocks = pick_disjoint_blocks(rng, m, 2, 2);
                    for (const auto& b : blocks) {
                        std::vector<RationalFunction> entries{one};
                        for (std::size_t v : b) entries.push_back(decorate(rng, field, var(v)));
                        tower.push_back(PForm{field, entries});
                    }
                    break;
                }
                case 1: { // case (b) r < k and r >= k: repeated norm field
                    situation = "power";
                    std::size_t k = 2 + pick(rng, std::min<std::size_t>(m, 3) - 1);
                    std::vector<RationalFunction> entries{one};
                    for (std::size_t v = 0; v < k; ++v) entries.push_back(decorate(rng, field, var(v)));
                    PForm phi{field, entries};
                    // alternate deliberately between the r < k and r >= k branches
                    std::size_t copies =
                        (iter % 8 < 4) ? 1 + pick(rng, k - 1) : k + pick(rng, 2);
                    for (std::size_t c = 0; c < copies; ++c) {
                        // rescale copies; the norm field is scaling-invariant
                        tower.push_back(pick(rng, 2) ? phi
                                                     : phi.scaled_by(var(pick(rng, m)) + one));
                    }
                    break;
                }
                case 2: { // case (c): degree-p prefix then a big form
                    situation = "prefix";
                    tower.push_back(PForm{field, {one, decorate(rng, field, var(0))}});
                    std::vector<RationalFunction> entries{one, decorate(rng, field, var(1))};
                    if (m > 3 || pick(rng, 2))
                        entries.push_back(decorate(rng, field, var(2) * var(1)));
                    if (pick(rng, 2)) entries.push_back(decorate(rng, field, var(0) * var(1)));
                    tower.push_back(PForm{field, entries});
                    break;
                }
                default: { // compositum, including the rejection path
                    situation = "compositum";
                    std::vector<RationalFunction> roots{var(0)};
                    if (pick(rng, 2)) roots.push_back(decorate(rng, field, var(1)));
                    // reject: norm field inside the adjoined roots
                    PForm collapsed{field, {one, decorate(rng, field, var(0))}};
                    bool rejected = false;
                    try {
                        omega_kernel_compositum(roots, collapsed, n);
                    } catch (const Error& e) {
                        rejected = e.code() == ErrorCode::NormDegreeCollapsed;
                    }
                    if (!rejected)
                        return Failure{"collapsed compositum was not rejected",
                                       Json{{"p", p}, {"n", n}}};

                    PForm phi{field,
                              {one, decorate(rng, field, var(m - 1)),
                               decorate(rng, field, var(0) * var(m - 1))}};
                    GeneratorSet g = omega_kernel_compositum(roots, phi, n);
                    std::size_t ell =
                        relative_adjoin_basis(roots, norm_field(phi).quotients).size();
                    if (ell < 1)
                        return Failure{"compositum produced l = 0", Json{{"p", p}, {"n", n}}};
                    auto oracle = ann_bruteforce(field, compositum_wedges(roots, phi), n);
                    if (!subspace_equal(expand_generator_set(g), oracle))
                        return Failure{"compositum kernel mismatch",
                                       Json{{"p", p},
                                            {"n", n},
                                            {"roots", rf_list_json(roots)},
                                            {"form", pform_to_json(phi)}}};
                    ++checked;
                    continue;
                }
            }

            FFTowerDescriptor td = normalize_tower(tower);
            GeneratorSet g = omega_kernel_closed(td, n);
            if (!subspace_equal(expand_generator_set(g), omega_kernel_ffe(td, n))) {
                Json forms_json = Json::array();
                for (const auto& f : tower) forms_json.push_back(pform_to_json(f));
                return Failure{situation + " kernel mismatch",
                               Json{{"p", p}, {"n", n}, {"tower", forms_json}}};
            }
        } catch (const Error& e) {
            return Failure{std::string("unexpected error: ") + e.what(),
                           Json{{"p", p}, {"n", n}, {"iter", iter}}};
        }
        ++checked;
    }
    return std::nullopt;
}

// sampled Witt-kernel generators verify; corrupted slots fail
std::optional<Failure> char2_generators(Rng& rng, std::size_t samples_wanted,
                                        std::size_t& checked) {
    auto field = make_field(2, {"x", "y", "z", "w"});
    auto var = [&](std::size_t i) { return RationalFunction::variable(field, i); };
    auto one = RationalFunction::one(field);
    const std::size_t fresh = 3; // w never enters any form below

    std::size_t iter = 0;
    while (checked < samples_wanted) {
        ++iter;
        WittKernelDescription d;
        try {
            switch (iter % 3) {
                case 0: { // repeated-form case over <1,x,y>-style diagonals
                    std::vector<RationalFunction> entries{one, decorate(rng, field, var(0)),
                                                          decorate(rng, field, var(1))};
                    BilinearDiagonal b{field, entries};
                    std::vector<BilinearDiagonal> forms(1 + pick(rng, 2), b);
                    d = witt_kernel_generators(forms, 3, rng());
                    break;
                }
                case 1: { // degree-2 prefix case
                    BilinearDiagonal b1{field, {one, decorate(rng, field, var(0))}};
                    BilinearDiagonal b2{
                        field, {one, decorate(rng, field, var(1)),
                                decorate(rng, field, var(1) * var(2))}};
                    d = witt_kernel_generators({b1, b2}, 3, rng());
                    break;
                }
                default: { // compositum
                    std::vector<RationalFunction> roots{var(0)};
                    BilinearDiagonal b{field, {one, decorate(rng, field, var(1)),
                                               decorate(rng, field, var(1) * var(2))}};
                    d = witt_kernel_compositum_generators(roots, b, 3, rng());
                    break;
                }
            }
        } catch (const Error& e) {
            return Failure{std::string("generator construction failed: ") + e.what(),
                           Json{{"iter", iter}}};
        }

        for (std::size_t i = 0; i < d.sampled.size(); ++i) {
            if (!d.verified[i])
                return Failure{"a sampled generator failed verification",
                               Json{{"case", d.theorem_case},
                                    {"slots", rf_list_json(d.sampled[i].slots)}}};
            ++checked;
        }

        // corrupted counterparts: replace a slot with the fresh variable
        for (const auto& fam : d.families) {
            if (fam.arity == 0) continue;
            auto basis = p_basis_of(fam.gens).basis;
            if (basis.size() < fam.arity) continue;
            std::vector<RationalFunction> slots{var(fresh)};
            for (std::size_t i = 1; i < fam.arity; ++i) slots.push_back(basis[basis.size() - i]);
            if (member_fp_adjoin(var(fresh), fam.gens))
                return Failure{"fresh variable unexpectedly inside the norm field", Json{}};
            PfisterForm corrupted = make_pfister(field, slots);
            if (verify_generator(corrupted, d.kernel_wedges))
                return Failure{"corrupted generator passed verification",
                               Json{{"case", d.theorem_case},
                                    {"slots", rf_list_json(corrupted.slots)}}};
        }
    }
    return std::nullopt;
}

std::optional<Failure> identities(Rng& rng, std::size_t instances, std::size_t& checked) {
    const std::vector<uint32_t> primes{2, 3, 5};
    while (checked < instances) {
        const uint32_t p = primes[checked % primes.size()];
        FieldPtr field = random_field(rng, p, 2, 3);
        auto random_rf = [&]() {
            std::vector<Term> terms;
            std::size_t cnt = 1 + pick(rng, 3);
            for (std::size_t i = 0; i < cnt; ++i) {
                Monomial mono(field->var_count());
                for (auto& e : mono) e = uint32_t(pick(rng, 3));
                terms.push_back({std::move(mono), uint32_t(1 + pick(rng, p - 1))});
            }
            Polynomial num = Polynomial::from_terms(field, std::move(terms));
            Polynomial den = Polynomial::variable(field, pick(rng, field->var_count()));
            if (pick(rng, 2)) den = den + Polynomial::constant(field, 1);
            return RationalFunction(num, den);
        };
        auto a = random_rf();
        auto b = random_rf();
        std::size_t v = pick(rng, field->var_count());

        bool ok = (a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v);
        ok = ok && d_operator(d_of_element(a)).is_zero();
        ok = ok && a.pow(p).derivative(v).is_zero();
        auto da = d_of_element(a);
        ok = ok && wedge(da, da).is_zero();
        ok = ok && fp_coordinates(a).reconstruct(field) == a;
        auto root = a.pow(p).pth_root();
        ok = ok && root.has_value() && *root == a;
        if (!a.is_zero() && p > 2) {
            // a p-th power times a bare variable is never a p-th power
            auto nonpower = a.pow(p) * RationalFunction::variable(field, v);
            ok = ok && !nonpower.pth_root().has_value();
        }
        if (!ok)
            return Failure{"algebraic identity failed",
                           Json{{"p", p}, {"a", a.to_string()}, {"b", b.to_string()}}};
        checked += 7;
    }
    return std::nullopt;
}

std::optional<Failure> worked_identities(std::size_t& checked) {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto f0 = make_field(p, {});
        auto one = RationalFunction::one(f0);
        auto zero = RationalFunction::zero(f0);
        if (!pform_isometric(PForm{f0, {one, one}}, PForm{f0, {one, zero}}))
            return Failure{"<1,1> and <1,0> should be isometric over the prime field",
                           Json{{"p", p}}};
        if (pform_isometric(PForm{f0, {one}}, PForm{f0, {zero}}))
            return Failure{"<1> and <0> should differ over the prime field", Json{{"p", p}}};
        checked += 2;
    }
    auto f = make_field(2, {"x", "y"});
    auto x = RationalFunction::variable(f, 0);
    auto y = RationalFunction::variable(f, 1);
    if (kato_e(make_pfister(f, {x})) != log_form({x}))
        return Failure{"e_1 display mismatch", Json{}};
    if (kato_e(make_pfister(f, {x, y})) != log_form({x, y}))
        return Failure{"e_2 display mismatch", Json{}};
    checked += 2;
    return std::nullopt;
}

} // namespace

std::vector<std::string> suite_names() { return kSuites; }

SuiteResult run_suite(const std::string& name, uint64_t seed, std::size_t instances) {
    SuiteResult result;
    result.name = name;
    Rng rng(seed ^ std::hash<std::string>{}(name));

    std::optional<Failure> failure;
    try {
        if (name == "closed-annihilators") {
            failure = closed_annihilators(rng, instances ? instances : 600, result.checked);
        } else if (name == "kernel-identity") {
            failure = kernel_identity(rng, instances ? instances : 100, result.checked);
        } else if (name == "lemma43") {
            failure = lemma43(rng, instances ? instances : 100, result.checked);
        } else if (name == "order-invariance") {
            failure = order_invariance(rng, instances ? instances : 50, result.checked);
        } else if (name == "closed-kernels") {
            failure = closed_kernels(rng, instances ? instances : 60, result.checked);
        } else if (name == "char2-generators") {
            failure = char2_generators(rng, instances ? instances : 100, result.checked);
        } else if (name == "identities") {
            failure = identities(rng, instances ? instances : 500, result.checked);
        } else if (name == "worked-identities") {
            failure = worked_identities(result.checked);
        } else {
            raise(ErrorCode::SemanticError, "unknown suite '" + name + "'");
        }
    } catch (const Error& e) {
        failure = Failure{std::string("suite crashed: ") + e.what(), Json{}};
    }

    if (failure) {
        result.pass = false;
        result.message = failure->message;
        result.counterexample = failure->payload;
    } else {
        std::ostringstream os;
        os << result.checked << " checks passed";
        result.message = os.str();
    }
    return result;
}

} // namespace campaign
} // namespace qlf
