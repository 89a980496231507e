#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qlf/char2.hpp"
#include "qlf/quasilinear.hpp"

namespace qlf {
namespace campaign {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string message;
    nlohmann::ordered_json counterexample; // payload on failure
};

/// Seeded random cross-validation campaigns; `instances` 0 keeps each
/// suite's default volume. Names:
///   closed-annihilators  expand(closed form) == solver per annihilator case
///   kernel-identity      tower kernel == solver over alternative p-bases
///   lemma43              T-polynomial independence vs transversal criterion
///   order-invariance     canonical kernel under permutation and rescaling
///   closed-kernels       constructed tower/compositum kernel cases
///   char2-generators     sampled Witt generators verify; corrupted fail
///   identities           Leibniz, d after d, wedge, p-th roots, coordinates
///   worked-identities    fixed displays checked once
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, uint64_t seed, std::size_t instances);

} // namespace campaign
} // namespace qlf
