#pragma once

#include <optional>
#include <variant>

#include "json.hpp"

#include "qlf/char2.hpp"
#include "qlf/quasilinear.hpp"

namespace qlf {

using OrderedJson = nlohmann::ordered_json;

struct AnnSetsPayload {
    std::vector<std::vector<RationalFunction>> sets;
};
struct AnnPowerPayload {
    std::vector<RationalFunction> set;
    int r = 1;
};
struct KernelTowerPayload {
    std::vector<PForm> tower;
};
struct KernelModularPayload {
    ModularExtensionDescriptor ext;
};
struct KernelCompositumPayload {
    std::vector<RationalFunction> roots;
    PForm form;
};
struct PformPayload {
    PForm form;
    std::optional<PForm> other;
};
struct WittTowerPayload {
    std::vector<BilinearDiagonal> forms;
};
struct WittCompositumPayload {
    std::vector<RationalFunction> roots;
    BilinearDiagonal form;
};
struct CrosscheckPayload {
    std::vector<std::string> suites; // empty means all
    std::size_t instances = 0;       // 0 means suite defaults
};

/// A fully validated job: field, command, command payload, seed, budget.
struct JobSpec {
    FieldPtr field;
    std::string command;
    uint64_t seed = 0;
    std::size_t budget = 8;
    int n = 0;
    std::variant<AnnSetsPayload, AnnPowerPayload, KernelTowerPayload, KernelModularPayload,
                 KernelCompositumPayload, PformPayload, WittTowerPayload, WittCompositumPayload,
                 CrosscheckPayload>
        payload;
};

/// Parse and validate a JSON job. Unknown fields are rejected; expressions
/// go through the base-field grammar. ParseError/SemanticError on bad input.
JobSpec parse_job(const std::string& text);

struct Report {
    OrderedJson json;
    bool failed_crosscheck = false;
};

/// Execute a job; deterministic for a fixed spec and seed. `force_check`
/// cross-validates any closed-form answer against the exact solver.
Report run_job(const JobSpec& job, bool force_check = false);

std::string render_text(const OrderedJson& value);

/// CLI exit code for a library error: 2 parse/semantic, 3 hypothesis
/// violations and friends, 4 failed crosscheck, 1 internal.
int exit_code_for(const Error& e);

// serialization helpers shared with the campaign layer
OrderedJson form_to_json(const DifferentialForm& w);
OrderedJson subspace_to_json(const SubspaceBasis& basis);
OrderedJson generator_set_to_json(const GeneratorSet& g);
OrderedJson pform_to_json(const PForm& phi);

} // namespace qlf
