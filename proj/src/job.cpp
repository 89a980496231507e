#include "qlf/job.hpp"

#include <sstream>

#include "qlf/campaign.hpp"
#include "qlf/parser.hpp"

namespace qlf {

namespace {

using Json = OrderedJson;

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed,
                    const char* context) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known)
            raise(ErrorCode::SemanticError,
                  std::string("unknown field '") + key + "' in " + context);
    }
}

const Json& require(const Json& obj, const char* key, const char* context) {
    auto it = obj.find(key);
    if (it == obj.end())
        raise(ErrorCode::SemanticError, std::string("missing field '") + key + "' in " + context);
    return *it;
}

std::string require_string(const Json& v, const char* what) {
    if (!v.is_string()) raise(ErrorCode::SemanticError, std::string(what) + " must be a string");
    return v.get<std::string>();
}

RationalFunction parse_rf(const FieldPtr& field, const Json& v, const char* what) {
    return parse_expression(field, require_string(v, what));
}

std::vector<RationalFunction> parse_rf_list(const FieldPtr& field, const Json& v,
                                            const char* what) {
    if (!v.is_array()) raise(ErrorCode::SemanticError, std::string(what) + " must be an array");
    std::vector<RationalFunction> out;
    for (const auto& e : v) out.push_back(parse_rf(field, e, what));
    return out;
}

PForm parse_pform_json(const FieldPtr& field, const Json& v, const char* context) {
    if (!v.is_object()) raise(ErrorCode::SemanticError, std::string(context) + " must be an object");
    reject_unknown(v, {"entries"}, context);
    auto entries = parse_rf_list(field, require(v, "entries", context), "entries");
    if (entries.empty())
        raise(ErrorCode::SemanticError, std::string(context) + " needs at least one entry");
    return make_pform(field, std::move(entries));
}

int parse_degree(const Json& job) {
    const Json& n = require(job, "n", "job");
    if (!n.is_number_integer() || n.get<int64_t>() < 0)
        raise(ErrorCode::SemanticError, "n must be a nonnegative integer");
    return int(n.get<int64_t>());
}

} // namespace

JobSpec parse_job(const std::string& text) {
    Json job;
    try {
        job = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!job.is_object()) raise(ErrorCode::ParseError, "job must be a JSON object");

    reject_unknown(job,
                   {"p", "vars", "command", "seed", "budget", "n", "sets", "set", "r", "tower",
                    "modular", "compositum", "entries", "other", "forms", "suites", "instances"},
                   "job");

    const Json& pj = require(job, "p", "job");
    if (!pj.is_number_integer() || pj.get<int64_t>() < 2 || !is_prime(uint32_t(pj.get<int64_t>())))
        raise(ErrorCode::SemanticError, "p must be a prime integer");
    const Json& varsj = require(job, "vars", "job");
    if (!varsj.is_array()) raise(ErrorCode::SemanticError, "vars must be an array of names");
    std::vector<std::string> vars;
    for (const auto& v : varsj) vars.push_back(require_string(v, "variable name"));

    JobSpec spec;
    spec.field = make_field(uint32_t(pj.get<int64_t>()), std::move(vars));
    spec.command = require_string(require(job, "command", "job"), "command");
    if (auto it = job.find("seed"); it != job.end()) {
        if (!it->is_number_unsigned()) raise(ErrorCode::SemanticError, "seed must be unsigned");
        spec.seed = it->get<uint64_t>();
    }
    if (auto it = job.find("budget"); it != job.end()) {
        if (!it->is_number_integer() || it->get<int64_t>() < 1)
            raise(ErrorCode::SemanticError, "budget must be a positive integer");
        spec.budget = std::size_t(it->get<int64_t>());
    }

    const FieldPtr& field = spec.field;
    if (spec.command == "ann") {
        spec.n = parse_degree(job);
        if (job.contains("set") || job.contains("r")) {
            if (job.contains("sets"))
                raise(ErrorCode::SemanticError, "give either sets or set+r, not both");
            AnnPowerPayload p;
            p.set = parse_rf_list(field, require(job, "set", "ann job"), "set");
            const Json& r = require(job, "r", "ann job");
            if (!r.is_number_integer() || r.get<int64_t>() < 1)
                raise(ErrorCode::SemanticError, "r must be a positive integer");
            p.r = int(r.get<int64_t>());
            spec.payload = std::move(p);
        } else {
            AnnSetsPayload p;
            const Json& sets = require(job, "sets", "ann job");
            if (!sets.is_array() || sets.empty())
                raise(ErrorCode::SemanticError, "sets must be a nonempty array");
            for (const auto& s : sets) {
                p.sets.push_back(parse_rf_list(field, s, "set"));
                if (p.sets.back().empty())
                    raise(ErrorCode::SemanticError, "each set must be nonempty");
            }
            spec.payload = std::move(p);
        }
    } else if (spec.command == "kernel") {
        spec.n = parse_degree(job);
        int given = int(job.contains("tower")) + int(job.contains("modular")) +
                    int(job.contains("compositum"));
        if (given != 1)
            raise(ErrorCode::SemanticError,
                  "kernel job needs exactly one of tower, modular, compositum");
        if (job.contains("tower")) {
            KernelTowerPayload p;
            const Json& tower = job["tower"];
            if (!tower.is_array() || tower.empty())
                raise(ErrorCode::SemanticError, "tower must be a nonempty array of forms");
            for (const auto& f : tower) p.tower.push_back(parse_pform_json(field, f, "tower form"));
            spec.payload = std::move(p);
        } else if (job.contains("modular")) {
            const Json& m = job["modular"];
            if (!m.is_object()) raise(ErrorCode::SemanticError, "modular must be an object");
            reject_unknown(m, {"elements", "exponents"}, "modular");
            KernelModularPayload p;
            p.ext.elements = parse_rf_list(field, require(m, "elements", "modular"), "elements");
            if (m.contains("exponents")) {
                for (const auto& e : m["exponents"]) {
                    if (!e.is_number_integer() || e.get<int64_t>() < 1)
                        raise(ErrorCode::SemanticError, "exponents must be integers >= 1");
                    p.ext.exponents.push_back(uint64_t(e.get<int64_t>()));
                }
            } else {
                p.ext.exponents.assign(p.ext.elements.size(), 1);
            }
            spec.payload = std::move(p);
        } else {
            const Json& c = job["compositum"];
            if (!c.is_object()) raise(ErrorCode::SemanticError, "compositum must be an object");
            reject_unknown(c, {"roots", "form"}, "compositum");
            KernelCompositumPayload p{
                parse_rf_list(field, require(c, "roots", "compositum"), "roots"),
                parse_pform_json(field, require(c, "form", "compositum"), "form")};
            spec.payload = std::move(p);
        }
    } else if (spec.command == "pform") {
        auto entries = parse_rf_list(field, require(job, "entries", "pform job"), "entries");
        if (entries.empty()) raise(ErrorCode::SemanticError, "pform needs at least one entry");
        PformPayload p{make_pform(field, std::move(entries)), std::nullopt};
        if (job.contains("other")) p.other = parse_pform_json(field, job["other"], "other");
        spec.payload = std::move(p);
    } else if (spec.command == "witt") {
        if (field->p() != 2)
            raise(ErrorCode::SemanticError, "witt jobs need characteristic 2");
        int given = int(job.contains("forms")) + int(job.contains("compositum"));
        if (given != 1)
            raise(ErrorCode::SemanticError, "witt job needs exactly one of forms, compositum");
        if (job.contains("forms")) {
            WittTowerPayload p;
            const Json& forms = job["forms"];
            if (!forms.is_array() || forms.empty())
                raise(ErrorCode::SemanticError, "forms must be a nonempty array");
            for (const auto& f : forms) {
                if (!f.is_object()) raise(ErrorCode::SemanticError, "each form must be an object");
                reject_unknown(f, {"entries"}, "bilinear form");
                p.forms.push_back(make_bilinear(
                    field, parse_rf_list(field, require(f, "entries", "bilinear form"), "entries")));
            }
            spec.payload = std::move(p);
        } else {
            const Json& c = job["compositum"];
            if (!c.is_object()) raise(ErrorCode::SemanticError, "compositum must be an object");
            reject_unknown(c, {"roots", "form"}, "compositum");
            const Json& f = require(c, "form", "compositum");
            if (!f.is_object()) raise(ErrorCode::SemanticError, "form must be an object");
            reject_unknown(f, {"entries"}, "bilinear form");
            WittCompositumPayload p{
                parse_rf_list(field, require(c, "roots", "compositum"), "roots"),
                make_bilinear(field,
                              parse_rf_list(field, require(f, "entries", "form"), "entries"))};
            spec.payload = std::move(p);
        }
    } else if (spec.command == "crosscheck") {
        CrosscheckPayload p;
        if (job.contains("suites")) {
            for (const auto& s : job["suites"]) {
                std::string name = require_string(s, "suite name");
                bool known = false;
                for (const auto& k : campaign::suite_names()) known = known || k == name;
                if (!known) raise(ErrorCode::SemanticError, "unknown suite '" + name + "'");
                p.suites.push_back(std::move(name));
            }
        }
        if (job.contains("instances")) {
            const Json& inst = job["instances"];
            if (!inst.is_number_integer() || inst.get<int64_t>() < 1)
                raise(ErrorCode::SemanticError, "instances must be a positive integer");
            p.instances = std::size_t(inst.get<int64_t>());
        }
        spec.payload = std::move(p);
    } else {
        raise(ErrorCode::SemanticError, "unknown command '" + spec.command + "'");
    }
    return spec;
}

OrderedJson form_to_json(const DifferentialForm& w) {
    Json terms = Json::array();
    for (const auto& [idx, coeff] : w.terms()) {
        Json indices = Json::array();
        for (uint32_t i : idx) indices.push_back(i + 1); // 1-based in reports
        terms.push_back(Json{{"indices", indices}, {"coeff", coeff.to_string()}});
    }
    return terms;
}

OrderedJson subspace_to_json(const SubspaceBasis& basis) {
    Json rows = Json::array();
    for (const auto& r : basis.rows) rows.push_back(form_to_json(r));
    return Json{{"degree", basis.degree}, {"dimension", basis.dimension()}, {"basis", rows}};
}

OrderedJson generator_set_to_json(const GeneratorSet& g) {
    Json items = Json::array();
    for (const auto& item : g.items) {
        Json prefix = Json::array();
        for (const auto& e : item.prefix) prefix.push_back(e.to_string());
        items.push_back(Json{{"prefix", prefix},
                             {"tail_degree", item.tail_degree},
                             {"style", item.style == GenStyle::Omega ? "omega" : "nu"},
                             {"conditional", item.conditional}});
    }
    return items;
}

OrderedJson pform_to_json(const PForm& phi) {
    Json entries = Json::array();
    for (const auto& e : phi.entries) entries.push_back(e.to_string());
    return Json{{"entries", entries}};
}

namespace {

Json rf_list_to_json(const std::vector<RationalFunction>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

Json job_header(const JobSpec& job) {
    Json vars = Json::array();
    for (const auto& v : job.field->vars()) vars.push_back(v);
    return Json{{"command", job.command},
                {"p", job.field->p()},
                {"vars", vars},
                {"seed", job.seed}};
}

// sampled logarithmic generators of each nu item must land inside the
// omega kernel
Json nu_sanity_report(const GeneratorSet& g, const SubspaceBasis& kernel, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::size_t sampled = 0;
    bool all_inside = true;
    for (const auto& item : g.items) {
        if (item.style != GenStyle::Nu) continue;
        const int slots = g.degree - item.tail_degree;
        if (slots < 1 || item.prefix.empty()) continue;
        auto pool = sample_norm_elements(item.prefix, g.field, 3 * std::size_t(slots) + 3, rng);
        for (std::size_t s = 0; s + slots <= pool.size() && s < 3 * std::size_t(slots);
             s += std::size_t(slots)) {
            std::vector<RationalFunction> ys(pool.begin() + s, pool.begin() + s + slots);
            DifferentialForm w = log_form(ys);
            // pad with basis tails up to the kernel degree
            for (const auto& tail : index_tuples(g.field->var_count(), item.tail_degree)) {
                DifferentialForm full = wedge(w, DifferentialForm::basis_wedge(g.field, tail));
                ++sampled;
                all_inside = all_inside && subspace_contains(kernel, full);
            }
        }
    }
    return Json{{"sampled", sampled}, {"all_in_kernel", all_inside}};
}

Report run_ann(const JobSpec& job, bool force_check) {
    Report rep;
    Json out = job_header(job);
    out["n"] = job.n;
    const FieldPtr& field = job.field;

    std::optional<GeneratorSet> closed;
    std::vector<DifferentialForm> wedges;
    std::string kase;

    if (const auto* power = std::get_if<AnnPowerPayload>(&job.payload)) {
        kase = "power";
        out["r"] = power->r;
        auto pb = p_basis_of(power->set);
        out["k"] = pb.pdeg;
        closed = ann_closed_power(power->set, power->r, job.n); // EmptyNormSet may raise
        wedges = power_wedges(field, pb.basis, power->r);
    } else {
        const auto& sets = std::get<AnnSetsPayload>(job.payload).sets;
        std::vector<std::vector<RationalFunction>> bases;
        std::vector<std::size_t> pdegs;
        std::vector<RationalFunction> all;
        for (const auto& s : sets) {
            auto pb = p_basis_of(s);
            bases.push_back(pb.basis);
            pdegs.push_back(pb.pdeg);
            all.insert(all.end(), s.begin(), s.end());
        }
        out["pdegs"] = pdegs;
        wedges = transversal_wedges(field, bases);

        std::size_t sum = 0;
        for (std::size_t k : pdegs) sum += k;
        bool disjoint = !sets.empty() && p_degree(all) == sum;
        for (std::size_t k : pdegs) disjoint = disjoint && k >= 1;

        bool mixed = sets.size() >= 2;
        for (std::size_t i = 0; i + 1 < sets.size() && mixed; ++i) mixed = pdegs[i] == 1;
        if (mixed) mixed = set_wedge_nonzero(SetWedgeSpec{sets}).nonzero;

        if (disjoint) {
            kase = "disjoint";
            closed = ann_closed_disjoint(SetWedgeSpec{sets}, job.n);
        } else if (mixed) {
            kase = "mixed";
            std::vector<std::vector<RationalFunction>> prefix(sets.begin(), sets.end() - 1);
            closed = ann_closed_mixed(prefix, sets.back(), job.n);
        } else {
            kase = "bruteforce"; // no closed form applies; solve directly
        }
    }
    out["case"] = kase;

    SubspaceBasis basis =
        closed ? expand_generator_set(*closed) : ann_bruteforce(field, wedges, job.n);
    out["generators"] = closed ? generator_set_to_json(*closed) : Json();
    out["basis"] = subspace_to_json(basis);
    std::size_t full = index_tuples(field->var_count(), job.n).size();
    out["full_space"] = basis.dimension() == full;

    if (closed && force_check) {
        SubspaceBasis oracle = ann_bruteforce(field, wedges, job.n);
        bool equal = subspace_equal(basis, oracle);
        out["check"] = Json{{"ran", true},
                            {"bruteforce_dimension", oracle.dimension()},
                            {"equal", equal}};
        if (!equal) {
            out["check"]["bruteforce_basis"] = subspace_to_json(oracle);
            rep.failed_crosscheck = true;
        }
    }
    rep.json = std::move(out);
    return rep;
}

Report run_kernel(const JobSpec& job, bool force_check) {
    Report rep;
    Json out = job_header(job);
    out["n"] = job.n;
    const FieldPtr& field = job.field;

    if (const auto* tower_payload = std::get_if<KernelTowerPayload>(&job.payload)) {
        out["kind"] = "tower";
        FFTowerDescriptor tower = normalize_tower(tower_payload->tower);
        out["s"] = tower.s;
        out["pruned"] = tower.pruned;
        Json forms = Json::array();
        for (const auto& f : tower.forms)
            forms.push_back(Json{{"original_index", f.original_index},
                                 {"scale", f.scale.to_string()},
                                 {"scaled", pform_to_json(f.scaled)},
                                 {"norm_rank", f.norm_rank}});
        out["forms"] = forms;
        out["witness"] = rf_list_to_json(tower.transversal_witness);
        Json wedges = Json::array();
        for (const auto& w : tower_kernel_wedges(tower)) wedges.push_back(form_to_json(w));
        out["wedges"] = wedges;

        SubspaceBasis kernel = omega_kernel_ffe(tower, job.n);
        out["basis"] = subspace_to_json(kernel);

        try {
            GeneratorSet closed = omega_kernel_closed(tower, job.n);
            bool equal = subspace_equal(expand_generator_set(closed), kernel);
            out["closed"] = Json{{"generators", generator_set_to_json(closed)},
                                 {"matches_solver", equal}};
            out["nu_sanity"] = nu_sanity_report(closed, kernel, job.seed);
            if (!equal) rep.failed_crosscheck = true;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CaseNotCovered) throw;
            out["closed"] = Json{{"case_not_covered", true}, {"reason", e.what()}};
        }
        rep.json = std::move(out);
        return rep;
    }

    if (const auto* modular = std::get_if<KernelModularPayload>(&job.payload)) {
        out["kind"] = "modular";
        GeneratorSet g = kernel_modular_insep(modular->ext, job.n);
        SubspaceBasis basis = expand_generator_set(g);
        out["generators"] = generator_set_to_json(g);
        out["basis"] = subspace_to_json(basis);
        if (force_check) {
            std::vector<std::vector<RationalFunction>> slots;
            for (const auto& b : modular->ext.elements) slots.push_back({b});
            SubspaceBasis oracle =
                ann_bruteforce(field, transversal_wedges(field, slots), job.n);
            bool equal = subspace_equal(basis, oracle);
            out["check"] = Json{{"ran", true}, {"equal", equal}};
            if (!equal) rep.failed_crosscheck = true;
        }
        rep.json = std::move(out);
        return rep;
    }

    const auto& comp = std::get<KernelCompositumPayload>(job.payload);
    out["kind"] = "compositum";
    GeneratorSet g = omega_kernel_compositum(comp.roots, comp.form, job.n);
    SubspaceBasis basis = expand_generator_set(g);
    std::size_t omega_items = 0;
    for (const auto& item : g.items)
        if (item.style == GenStyle::Omega) ++omega_items;
    out["ell"] = relative_adjoin_basis(comp.roots, norm_field(comp.form).quotients).size();
    out["generators"] = generator_set_to_json(g);
    out["basis"] = subspace_to_json(basis);
    out["nu_sanity"] = nu_sanity_report(g, basis, job.seed);
    if (force_check) {
        SubspaceBasis oracle = ann_bruteforce(field, compositum_wedges(comp.roots, comp.form), job.n);
        bool equal = subspace_equal(basis, oracle);
        out["check"] = Json{{"ran", true}, {"equal", equal}};
        if (!equal) rep.failed_crosscheck = true;
    }
    rep.json = std::move(out);
    return rep;
}

Report run_pform(const JobSpec& job) {
    Report rep;
    Json out = job_header(job);
    const auto& payload = std::get<PformPayload>(job.payload);
    const PForm& phi = payload.form;
    out["form"] = pform_to_json(phi);
    out["dim"] = phi.dim();
    out["zero_form"] = phi.is_zero_form();

    auto dec = pform_anisotropic_part(phi);
    out["anisotropic_part"] = pform_to_json(dec.anisotropic_part);
    out["defect"] = dec.defect;

    if (!phi.is_zero_form()) {
        NormFieldInfo nf = norm_field(phi);
        uint64_t ndeg = 1;
        for (std::size_t i = 0; i < nf.k; ++i) ndeg *= job.field->p();
        out["norm_field"] = Json{{"scale", nf.scale.to_string()},
                                 {"basis", rf_list_to_json(nf.basis)},
                                 {"k", nf.k},
                                 {"ndeg", ndeg}};
        out["irreducible"] = irreducibility_criterion(phi);
    }
    if (payload.other) out["isometric_to_other"] = pform_isometric(phi, *payload.other);
    rep.json = std::move(out);
    return rep;
}

Json witt_to_json(const WittKernelDescription& d) {
    Json families = Json::array();
    for (const auto& f : d.families)
        families.push_back(Json{{"arity", f.arity},
                                {"gens", rf_list_to_json(f.gens)},
                                {"description", f.description}});
    Json samples = Json::array();
    for (std::size_t i = 0; i < d.sampled.size(); ++i)
        samples.push_back(Json{{"slots", rf_list_to_json(d.sampled[i].slots)},
                               {"verified", bool(d.verified[i])}});
    Json wedges = Json::array();
    for (const auto& w : d.kernel_wedges) wedges.push_back(form_to_json(w));
    return Json{{"case", d.theorem_case}, {"s", d.s},
                {"k", d.k},               {"t", d.t},
                {"ell", d.ell},           {"a", rf_list_to_json(d.basis_a)},
                {"e", rf_list_to_json(d.basis_e)},
                {"families", families},   {"kernel_wedges", wedges},
                {"samples", samples},     {"all_verified", d.all_verified}};
}

Report run_witt(const JobSpec& job) {
    Report rep;
    Json out = job_header(job);
    out["budget"] = job.budget;

    if (const auto* tower = std::get_if<WittTowerPayload>(&job.payload)) {
        out["kind"] = "tower";
        WittKernelDescription d = witt_kernel_generators(tower->forms, job.budget, job.seed);
        out["kernel"] = witt_to_json(d);
        if (!d.all_verified) rep.failed_crosscheck = true;
        rep.json = std::move(out);
        return rep;
    }

    const auto& comp = std::get<WittCompositumPayload>(job.payload);
    out["kind"] = "compositum";
    WittKernelDescription d =
        witt_kernel_compositum_generators(comp.roots, comp.form, job.budget, job.seed);
    out["kernel"] = witt_to_json(d);
    if (!d.all_verified) rep.failed_crosscheck = true;

    // the bilinear kernel is not the sum of the two sub-extension kernels;
    // surface the comparison at the Omega level per degree
    PForm phi = polar_form(comp.form);
    std::size_t ell = d.ell;
    Json split = Json::array();
    int top = int(std::min<std::size_t>(job.field->var_count(), comp.roots.size() + ell));
    for (int n = 1; n <= top; ++n) {
        SubspaceBasis lhs = expand_generator_set(omega_kernel_compositum(comp.roots, phi, n));
        ModularExtensionDescriptor ext{comp.roots, std::vector<uint64_t>(comp.roots.size(), 1)};
        SubspaceBasis roots_part = expand_generator_set(kernel_modular_insep(ext, n));
        SubspaceBasis form_part = omega_kernel_ffe(normalize_tower({phi}), n);
        std::vector<DifferentialForm> spanning = roots_part.rows;
        spanning.insert(spanning.end(), form_part.rows.begin(), form_part.rows.end());
        SubspaceBasis sum = echelonize(job.field, n, spanning);
        split.push_back(Json{{"n", n},
                             {"kernel_dim", lhs.dimension()},
                             {"sum_of_parts_dim", sum.dimension()},
                             {"additive", subspace_equal(lhs, sum)}});
    }
    out["additive_split"] = split;
    rep.json = std::move(out);
    return rep;
}

Report run_crosscheck(const JobSpec& job) {
    Report rep;
    Json out = job_header(job);
    const auto& payload = std::get<CrosscheckPayload>(job.payload);
    std::vector<std::string> names =
        payload.suites.empty() ? campaign::suite_names() : payload.suites;
    Json suites = Json::array();
    bool all = true;
    for (const auto& name : names) {
        auto r = campaign::run_suite(name, job.seed, payload.instances);
        Json entry{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked},
                   {"message", r.message}};
        if (!r.pass) entry["counterexample"] = r.counterexample;
        all = all && r.pass;
        suites.push_back(std::move(entry));
    }
    out["suites"] = suites;
    out["all_pass"] = all;
    rep.failed_crosscheck = !all;
    rep.json = std::move(out);
    return rep;
}

} // namespace

Report run_job(const JobSpec& job, bool force_check) {
    if (job.command == "ann") return run_ann(job, force_check);
    if (job.command == "kernel") return run_kernel(job, force_check);
    if (job.command == "pform") return run_pform(job);
    if (job.command == "witt") return run_witt(job);
    if (job.command == "crosscheck") return run_crosscheck(job);
    raise(ErrorCode::Internal, "unhandled command");
}

namespace {

void render(const OrderedJson& v, std::ostream& os, int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || value.is_array()) {
                os << pad << key << ":\n";
                render(value, os, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& value : v) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                render(value, os, indent + 1);
            } else {
                os << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        os << pad << v.dump() << "\n";
    }
}

} // namespace

std::string render_text(const OrderedJson& value) {
    std::ostringstream os;
    render(value, os, 0);
    return os.str();
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::SemanticError:
        case ErrorCode::DivisionByZero:
        case ErrorCode::FieldMismatch:
            return 2;
        case ErrorCode::HypothesisViolated:
        case ErrorCode::InputNotPIndependent:
        case ErrorCode::NormDegreeCollapsed:
        case ErrorCode::CaseNotCovered:
        case ErrorCode::EmptyNormSet:
        case ErrorCode::ZeroForm:
        case ErrorCode::ZeroArgument:
        case ErrorCode::ZeroSlot:
        case ErrorCode::DegreeMismatch:
        case ErrorCode::WrongCharacteristic:
            return 3;
        case ErrorCode::CrosscheckFailed:
            return 4;
        case ErrorCode::Internal:
            return 1;
    }
    return 1;
}

} // namespace qlf
