#include "qlf/char2.hpp"

#include <sstream>

namespace qlf {

namespace {

void require_char2(const FieldPtr& field) {
    if (field->p() != 2)
        raise(ErrorCode::WrongCharacteristic, "bilinear layer needs characteristic 2");
}

std::string family_text(std::size_t arity, const std::string& field_text) {
    std::ostringstream os;
    os << "<<y_1,...,y_" << arity << ">> with y_i in " << field_text << "^*";
    return os.str();
}

std::string fp_adjoin_text(const std::vector<RationalFunction>& gens) {
    std::ostringstream os;
    os << "F^2(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << gens[i].to_string();
    }
    os << ")";
    return os.str();
}

} // namespace

PfisterForm make_pfister(FieldPtr field, std::vector<RationalFunction> slots) {
    require_char2(field);
    if (slots.empty()) raise(ErrorCode::ZeroSlot, "Pfister form needs at least one slot");
    for (const auto& s : slots) {
        check_same_field(field, s.field());
        if (s.is_zero()) raise(ErrorCode::ZeroSlot, "zero Pfister slot");
    }
    return PfisterForm{std::move(field), std::move(slots)};
}

BilinearDiagonal make_bilinear(FieldPtr field, std::vector<RationalFunction> entries) {
    require_char2(field);
    if (entries.empty()) raise(ErrorCode::Internal, "bilinear form needs at least one entry");
    for (const auto& e : entries) {
        check_same_field(field, e.field());
        if (e.is_zero())
            raise(ErrorCode::SemanticError, "diagonal bilinear entries must be nonzero");
    }
    return BilinearDiagonal{std::move(field), std::move(entries)};
}

bool pfister_anisotropic(const PfisterForm& pi) {
    require_char2(pi.field);
    return p_independent(pi.slots);
}

PForm polar_form(const BilinearDiagonal& b) {
    require_char2(b.field);
    return make_pform(b.field, b.entries);
}

DifferentialForm kato_e(const PfisterForm& pi) {
    require_char2(pi.field);
    for (const auto& s : pi.slots)
        if (s.is_zero()) raise(ErrorCode::ZeroSlot, "zero Pfister slot");
    return log_form(pi.slots);
}

bool verify_generator(const PfisterForm& pi, const std::vector<DifferentialForm>& kernel_wedges) {
    int r = -1;
    for (const auto& w : kernel_wedges) {
        if (r == -1)
            r = w.degree();
        else if (w.degree() != r)
            raise(ErrorCode::DegreeMismatch, "kernel wedges of mixed degree");
    }
    DifferentialForm e = kato_e(pi);
    for (const auto& w : kernel_wedges)
        if (!wedge(e, w).is_zero()) return false;
    return true;
}

namespace {

void sample_and_verify(WittKernelDescription& out, const FieldPtr& field, std::size_t budget,
                       uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (const auto& fam : out.families) {
        if (fam.arity == 0) continue;
        std::size_t quota = budget;
        std::vector<RationalFunction> pool =
            sample_norm_elements(fam.gens, field, quota * fam.arity + fam.arity, rng);
        std::size_t at = 0;
        for (std::size_t g = 0; g < quota && at + fam.arity <= pool.size(); ++g) {
            std::vector<RationalFunction> slots(pool.begin() + at,
                                                pool.begin() + at + fam.arity);
            at += fam.arity;
            PfisterForm pi = make_pfister(field, std::move(slots));
            bool ok = verify_generator(pi, out.kernel_wedges);
            out.sampled.push_back(std::move(pi));
            out.verified.push_back(ok);
            out.all_verified = out.all_verified && ok;
        }
    }
}

} // namespace

WittKernelDescription witt_kernel_generators(const std::vector<BilinearDiagonal>& forms,
                                             std::size_t budget, uint64_t seed) {
    if (forms.empty()) raise(ErrorCode::CaseNotCovered, "no forms given");
    const FieldPtr& field = forms.front().field;
    require_char2(field);

    std::vector<PForm> polars;
    for (const auto& b : forms) polars.push_back(polar_form(b));
    FFTowerDescriptor tower = normalize_tower(polars);

    WittKernelDescription out;
    out.s = tower.s;
    out.kernel_wedges = tower_kernel_wedges(tower);

    if (tower.s == 0) {
        // every polar form has norm degree 1: purely transcendental, the
        // kernel description is empty
        out.theorem_case = "pfister-power";
        out.k = 0;
        out.t = 0;
        return out;
    }

    bool all_equal = true;
    for (std::size_t i = 1; i < tower.s && all_equal; ++i) {
        auto b0 = tower.forms[0].norm_basis();
        auto bi = tower.forms[i].norm_basis();
        all_equal = b0.size() == bi.size();
        for (const auto& e : bi)
            if (all_equal) all_equal = member_fp_adjoin(e, b0);
        for (const auto& e : b0)
            if (all_equal) all_equal = member_fp_adjoin(e, bi);
    }

    if (all_equal) {
        out.theorem_case = "pfister-power";
        out.basis_a = tower.forms[0].norm_basis();
        out.k = out.basis_a.size();
        out.t = out.k - tower.s + 1; // selected count is min(r, k)
        out.families.push_back(PfisterFamily{
            out.t, out.basis_a, family_text(out.t, fp_adjoin_text(out.basis_a))});
        sample_and_verify(out, field, budget, seed);
        return out;
    }

    bool prefix_deg_p = tower.s >= 2;
    for (std::size_t i = 0; i + 1 < tower.s && prefix_deg_p; ++i)
        prefix_deg_p = tower.forms[i].norm_rank == 1;
    if (prefix_deg_p) {
        out.theorem_case = "pdeg1-prefix";
        for (std::size_t i = 0; i + 1 < tower.s; ++i)
            out.basis_a.push_back(tower.forms[i].norm_basis().front());
        auto last = tower.forms[tower.s - 1].norm_basis();
        out.basis_e = relative_adjoin_basis(out.basis_a, last);
        out.ell = out.basis_e.size();
        if (out.ell < 1) raise(ErrorCode::Internal, "prefix case: l >= 1 must hold here");
        out.families.push_back(
            PfisterFamily{1, out.basis_a, family_text(1, fp_adjoin_text(out.basis_a))});
        std::vector<RationalFunction> joined = out.basis_a;
        joined.insert(joined.end(), out.basis_e.begin(), out.basis_e.end());
        out.families.push_back(
            PfisterFamily{out.ell, joined, family_text(out.ell, fp_adjoin_text(joined))});
        sample_and_verify(out, field, budget, seed);
        return out;
    }

    raise(ErrorCode::CaseNotCovered,
          "the tower matches neither the repeated-form nor the degree-2-prefix case");
}

WittKernelDescription witt_kernel_compositum_generators(const std::vector<RationalFunction>& a,
                                                        const BilinearDiagonal& b,
                                                        std::size_t budget, uint64_t seed) {
    const FieldPtr& field = b.field;
    require_char2(field);
    if (a.empty() || !p_independent(a))
        raise(ErrorCode::InputNotPIndependent, "adjoined square roots are not 2-independent");
    PForm phi = polar_form(b);
    if (ndeg_over_extension(phi, a) <= 1)
        raise(ErrorCode::NormDegreeCollapsed, "the polar form collapses over the extension");

    NormFieldInfo nf = norm_field(phi);
    WittKernelDescription out;
    out.theorem_case = "compositum";
    out.basis_a = a;
    out.s = a.size();
    out.basis_e = relative_adjoin_basis(a, nf.quotients);
    out.ell = out.basis_e.size();
    if (out.ell < 1) raise(ErrorCode::Internal, "compositum case: l >= 1 must hold here");
    out.kernel_wedges = compositum_wedges(a, phi);

    // <<x>> with x in L^2 = F^2(a_1,...,a_s)
    out.families.push_back(PfisterFamily{1, a, family_text(1, fp_adjoin_text(a))});
    std::vector<RationalFunction> joined = a;
    joined.insert(joined.end(), out.basis_e.begin(), out.basis_e.end());
    out.families.push_back(
        PfisterFamily{out.ell, joined, family_text(out.ell, fp_adjoin_text(joined))});
    sample_and_verify(out, field, budget, seed);
    return out;
}

} // namespace qlf
