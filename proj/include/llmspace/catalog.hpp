#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llmspace/json_util.hpp"

namespace llmspace {

// ---------------------------------------------------------------------------
// Technology parameter tables. All units are fixed per field: kg, m2, kWh,
// cm2, GB, kgCO2e, gCO2e/kWh. Conversions beyond g<->kg and kg<->t happen
// only at report boundaries.
// ---------------------------------------------------------------------------

struct SolarTech {
    std::string name;
    double areal_density_kg_per_m2 = 0; // panel mass per unit area
    double efficiency = 0;              // conversion efficiency, in (0,1)
    double manu_intensity_kg_per_m2 = 0; // manufacturing carbon per unit area
};

struct BatteryTech {
    std::string name;
    double specific_mass_kg_per_kwh = 0;
    double manu_intensity_kg_per_kwh = 0;
    double reference_cap_kwh = 0; // informational; capacity is sized from demand
};

struct RadiatorTech {
    std::string name;
    double areal_density_kg_per_m2 = 0;
    double emissivity = 0; // in (0,1]
    double manu_intensity_kg_per_kg = 0;
};

struct ProcessNode {
    std::string name;
    double feature_size_nm = 0;
    std::optional<double> cpa_cots_kg_per_cm2;
    std::optional<double> cpa_radhard_kg_per_cm2; // absent at immature nodes
};

enum class MemKind { DDR, HBM, NAND };
enum class Hardness { COTS, RAD_HARD };

struct MemoryTech {
    std::string name;
    MemKind kind = MemKind::DDR;
    Hardness hardness = Hardness::COTS;
    double cpa_kg_per_gb = 0;
};

struct LaunchVehicle {
    std::string name;
    double per_launch_emission_kg = 0;
    double payload_capacity_kg = 0;
    double intensity_kg_per_kg = 0; // derived: emission / capacity
};

struct CommsPayload {
    std::string name;
    double mass_kg = 0;
    double manu_embodied_kg = 0;
    std::string description;
};

struct GridProfile {
    std::string name;
    double intensity_g_per_kwh = 0;
};

// --- computing hardware ----------------------------------------------------

struct LogicDie {
    std::string name;
    double area_cm2 = 0;
    std::string process; // ProcessNode name
    int count = 1;
};

struct MemoryBlock {
    std::string tech; // MemoryTech name as built (COTS)
    double capacity_gb = 0;
    std::string radhard_tech; // explicit hardened substitute; empty = auto by kind
};

enum class HardeningMode { COTS, RAD_HARD };

struct HardeningProfile {
    std::string name;
    HardeningMode mode = HardeningMode::COTS;
    double area_scale = 1;  // chip-area multiplier vs. COTS
    double power_scale = 1; // node power multiplier vs. COTS
    double lifetime_years = 2;
    std::string radhard_process = "14nm"; // mature node logic is refabbed on
};

struct ComputeNode {
    std::string name;
    std::vector<LogicDie> logic;
    std::vector<MemoryBlock> memory;
    double storage_gb = 0;
    std::string storage_tech;
    std::string radhard_storage_tech; // explicit substitute; empty = auto
    double base_mass_kg = 0;
    double power_demand_kw = 0;
    std::optional<double> manu_override_cots_kg;    // vendor aggregate, wins over bottom-up
    std::optional<double> manu_override_radhard_kg;
    std::string source; // provenance note for shipped entries
    HardeningProfile hardening; // stamped by the scenario; defaults to COTS
};

// --- inference workload ------------------------------------------------------

struct ModelSpec {
    std::string name;
    double param_count = 0;
    double layers = 0;
    double hidden_dim = 0;
    double kv_heads = 0;
    double head_dim = 0;
    double bytes_per_param = 0;
};

struct AcceleratorSpec {
    std::string name;
    double peak_flops = 0;            // at the model's precision
    double hbm_bandwidth_bytes_per_s = 0;
    double compute_util = 0;          // in (0,1]
    double mem_util = 0;              // in (0,1]
    double node_power_kw = 0;
};

struct TokenStats {
    double mean = 0;
    double min = 0;
    double max = 0;
};

struct TaskProfile {
    std::string name;
    TokenStats prompt_tokens;
    TokenStats gen_tokens;
    double request_bytes = 0;
    double response_bytes = 0;
    bool placeholder_stats = false; // shipped defaults pending measured traces
    bool has_stats = true;
};

// ---------------------------------------------------------------------------
// TechnologyCatalog: every named table in one immutable object. Loading seeds
// the built-in defaults and applies field-level overrides from a document.
// ---------------------------------------------------------------------------

class TechnologyCatalog {
  public:
    /// Defaults only, no overrides.
    static TechnologyCatalog builtin();

    /// Defaults plus overrides. Same-named entries merge field-by-field; new
    /// entries must be complete. Unknown keys anywhere are an error.
    static TechnologyCatalog load(const json& overrides);
    static TechnologyCatalog load_file(const std::string& path);

    /// Canonical serialization; load(to_json()) round-trips identically.
    json to_json() const;

    const SolarTech& solar(const std::string& name) const;
    const BatteryTech& battery(const std::string& name) const;
    const RadiatorTech& radiator(const std::string& name) const;
    const ProcessNode& process(const std::string& name) const;
    const MemoryTech& memory(const std::string& name) const;
    const LaunchVehicle& launch_vehicle(const std::string& name) const;
    const CommsPayload& comms(const std::string& name) const;
    const GridProfile& grid(const std::string& name) const;
    const ComputeNode& compute_node(const std::string& name) const;
    const HardeningProfile& hardening(const std::string& name) const;
    const ModelSpec& model(const std::string& name) const;
    const AcceleratorSpec& accelerator(const std::string& name) const;
    const TaskProfile& task(const std::string& name) const;

    /// Unique hardened memory tech of the given kind, for automatic
    /// substitution. Errors when none or several candidates exist.
    const MemoryTech& radhard_memory_for(MemKind kind) const;

    const std::map<std::string, TaskProfile>& tasks() const { return tasks_; }
    const std::map<std::string, ComputeNode>& compute_nodes() const { return nodes_; }

    std::vector<std::string> names(const std::string& category) const;

  private:
    std::map<std::string, SolarTech> solar_;
    std::map<std::string, BatteryTech> battery_;
    std::map<std::string, RadiatorTech> radiator_;
    std::map<std::string, ProcessNode> process_;
    std::map<std::string, MemoryTech> memory_;
    std::map<std::string, LaunchVehicle> vehicles_;
    std::map<std::string, CommsPayload> comms_;
    std::map<std::string, GridProfile> grids_;
    std::map<std::string, ComputeNode> nodes_;
    std::map<std::string, HardeningProfile> hardening_;
    std::map<std::string, ModelSpec> models_;
    std::map<std::string, AcceleratorSpec> accelerators_;
    std::map<std::string, TaskProfile> tasks_;

    friend TechnologyCatalog parse_catalog(const json& merged);
};

/// The shipped default tables as a JSON document (the same schema accepted by
/// load()).
const json& builtin_catalog_json();

std::string memkind_name(MemKind kind);
std::string hardness_name(Hardness h);
std::string hardening_mode_name(HardeningMode m);

} // namespace llmspace
