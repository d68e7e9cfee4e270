#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llmspace/hardware.hpp"
#include "llmspace/launch.hpp"
#include "llmspace/peripherals.hpp"
#include "llmspace/power.hpp"
#include "llmspace/workload.hpp"

namespace llmspace {

constexpr double kHoursPerYear = 8760.0;

enum class Deployment { Orbital, Terrestrial };

struct WorkloadRef {
    std::string model;
    std::string accelerator;
    std::vector<std::string> tasks; // task names; the CLI expands "all"
};

/// One full deployment description. Technology fields hold catalog names so
/// sweeps can substitute entries without editing the scenario body.
struct Scenario {
    std::string name;
    Deployment deployment = Deployment::Orbital;
    std::string node;
    std::string hardening_preset = "cots";            // used unless an inline profile is given
    std::optional<HardeningProfile> hardening_inline;
    std::string solar_tech;    // orbital only
    std::string battery_tech;  // orbital only
    std::string radiator_tech; // orbital only
    SizingPolicy sizing_policy = SizingPolicy::DemandMatch;
    OrbitTiming timing;
    ThermalEnvironment thermal;
    double dod = kDefaultDod;
    double battery_round_trip_eff = 1.0;
    double isi_w_per_m2 = kIsiWPerM2;
    std::string vehicle;  // orbital only
    std::string platform; // orbital only (comms payload bundle)
    std::string grid;     // terrestrial only
    double lifetime_years = 2;
    double duty_factor = 1.0;
    std::optional<WorkloadRef> workload;

    HardeningProfile resolve_hardening(const TechnologyCatalog& catalog) const;
};

Scenario parse_scenario(const json& doc, const std::string& default_name);
json scenario_to_json(const Scenario& s);

/// Scenarios shipped with the tool.
const std::map<std::string, Scenario>& builtin_scenarios();

/// Resolves a shipped name, a file path, or "file#name" into a named map
/// entry of that file.
Scenario resolve_scenario(const std::string& ref);

// --- reports -----------------------------------------------------------------

struct ReportItem {
    std::string component;
    double manu_kg = 0;
    double launch_kg = 0;
    CarbonMode mode = CarbonMode::DERIVED;
};

struct CarbonReport {
    std::string scenario;
    Deployment deployment = Deployment::Orbital;
    std::vector<ReportItem> items;
    double embodied_total_kg = 0;        // sum over items of manu + launch
    double operational_annual_kg = 0;    // per year of operation
    double annualized_kg = 0;            // embodied / lifetime + operational
    double lifetime_years = 0;
    double power_kw = 0;                 // effective node demand
    std::optional<PowerBudget> power_budget; // orbital only
    std::vector<std::string> warnings;
};

struct RequestCarbon {
    double operational_g = 0;
    double amortized_embodied_g = 0;
    double prefill_share_g = 0;
    double decode_share_g = 0;
};

CarbonReport evaluate(const Scenario& s, const TechnologyCatalog& catalog);

double annualize(const CarbonReport& report, double lifetime_years);

/// Per-request embodied amortization over the serving lifetime, split by
/// phase occupancy, plus grid-borne operational carbon for terrestrial
/// deployments.
RequestCarbon per_request_carbon(const CarbonReport& report, const InferenceEstimate& estimate,
                                 const Scenario& s, const TechnologyCatalog& catalog);

// --- comparison and sweeps ----------------------------------------------------

struct ComparisonRow {
    std::string scenario;
    double lifetime_years = 0;
    double annualized_kg = 0;
};

struct ComparisonPair {
    std::string a;
    std::string b;
    double embodied_ratio = 0; // embodied(a) / embodied(b)
};

struct Comparison {
    struct Entry {
        std::string scenario;
        double embodied_total_kg = 0;
        double operational_annual_kg = 0;
        double max_lifetime_years = 0; // grid cap for this scenario
    };
    std::vector<Entry> entries;
    std::vector<ComparisonRow> rows;
    std::vector<ComparisonPair> ratios;
};

/// Annualized series over an integer lifetime grid. Orbital COTS scenarios
/// are truncated at their hardening lifetime.
Comparison compare(const std::vector<Scenario>& scenarios, const TechnologyCatalog& catalog,
                   int lifetime_lo = 1, int lifetime_hi = 10);

struct SweepAxis {
    std::string path; // dotted path into the scenario document
    std::vector<json> values;
};

struct SweepCell {
    json assignment; // path -> value for this cell
    std::optional<CarbonReport> report;
    std::string error; // set when the cell failed; the sweep continues
};

struct SweepResult {
    std::vector<SweepAxis> axes;
    std::vector<SweepCell> cells; // row-major over axes as given
};

SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes,
                  const TechnologyCatalog& catalog);

std::string deployment_name(Deployment d);

} // namespace llmspace
