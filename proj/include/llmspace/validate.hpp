#pragma once

#include <string>
#include <vector>

#include "llmspace/scenario.hpp"

namespace llmspace {

/// One compared quantity in a validation profile. Rows with a tolerance are
/// pass/fail gates; rows without one are reported for context only.
struct ValidationRow {
    std::string component;
    std::string metric; // "manu", "launch", "total", or a named check
    double reference_t = 0;
    double model_t = 0;
    double delta_frac = 0; // (model - reference) / reference
    double tol_frac = 0;
    bool checked = false;
    bool pass = true;
};

struct ValidationResult {
    std::string profile;
    std::vector<ValidationRow> rows;
    bool pass = true;
    double runtime_s = 0;
};

/// Runs one validation profile against the given catalog:
///   "cots"    - itemized reproduction of the Starlink-V1 + DGX-H100 build,
///               published reference breakdown, per-row tolerances
///   "radhard" - hardened variant; the reference total is the gate
///   "radopt"  - peripheral-optimized variant; checks the expected embodied
///               reduction band relative to the hardened baseline
ValidationResult run_validation(const std::string& profile, const TechnologyCatalog& catalog);

std::vector<std::string> validation_profiles();

} // namespace llmspace
