#include "llmspace/catalog.hpp"

#include <algorithm>
#include <cmath>

namespace llmspace {

namespace {

constexpr double kRadhardCpaRatio = 2.0;      // hardened process doubles CPA
constexpr double kRatioTolerance = 1e-9;      // relative

void check_positive(double v, const std::string& path, const std::string& field) {
    if (!(v > 0)) {
        throw config_error(path + "." + field + ": must be strictly positive, got " +
                           format_double(v));
    }
}

void check_nonnegative(double v, const std::string& path, const std::string& field) {
    if (!(v >= 0)) {
        throw config_error(path + "." + field + ": must be nonnegative, got " +
                           format_double(v));
    }
}

SolarTech parse_solar(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"areal_density_kg_per_m2", "efficiency", "manu_intensity_kg_per_m2"});
    SolarTech t;
    t.name = name;
    t.areal_density_kg_per_m2 = get_number(j, path, "areal_density_kg_per_m2");
    t.efficiency = get_number(j, path, "efficiency");
    t.manu_intensity_kg_per_m2 = get_number(j, path, "manu_intensity_kg_per_m2");
    check_positive(t.areal_density_kg_per_m2, path, "areal_density_kg_per_m2");
    check_positive(t.manu_intensity_kg_per_m2, path, "manu_intensity_kg_per_m2");
    if (!(t.efficiency > 0 && t.efficiency < 1)) {
        throw config_error(path + ".efficiency: must be in (0,1), got " +
                           format_double(t.efficiency));
    }
    return t;
}

BatteryTech parse_battery(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"specific_mass_kg_per_kwh", "manu_intensity_kg_per_kwh", "reference_cap_kwh"});
    BatteryTech t;
    t.name = name;
    t.specific_mass_kg_per_kwh = get_number(j, path, "specific_mass_kg_per_kwh");
    t.manu_intensity_kg_per_kwh = get_number(j, path, "manu_intensity_kg_per_kwh");
    t.reference_cap_kwh = get_number(j, path, "reference_cap_kwh");
    check_positive(t.specific_mass_kg_per_kwh, path, "specific_mass_kg_per_kwh");
    check_positive(t.manu_intensity_kg_per_kwh, path, "manu_intensity_kg_per_kwh");
    check_positive(t.reference_cap_kwh, path, "reference_cap_kwh");
    return t;
}

RadiatorTech parse_radiator(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"areal_density_kg_per_m2", "emissivity", "manu_intensity_kg_per_kg"});
    RadiatorTech t;
    t.name = name;
    t.areal_density_kg_per_m2 = get_number(j, path, "areal_density_kg_per_m2");
    t.emissivity = get_number(j, path, "emissivity");
    t.manu_intensity_kg_per_kg = get_number(j, path, "manu_intensity_kg_per_kg");
    check_positive(t.areal_density_kg_per_m2, path, "areal_density_kg_per_m2");
    check_positive(t.manu_intensity_kg_per_kg, path, "manu_intensity_kg_per_kg");
    if (!(t.emissivity > 0 && t.emissivity <= 1)) {
        throw config_error(path + ".emissivity: must be in (0,1], got " +
                           format_double(t.emissivity));
    }
    return t;
}

ProcessNode parse_process(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"feature_size_nm", "cpa_cots_kg_per_cm2", "cpa_radhard_kg_per_cm2"});
    ProcessNode t;
    t.name = name;
    t.feature_size_nm = get_number(j, path, "feature_size_nm");
    check_positive(t.feature_size_nm, path, "feature_size_nm");
    if (j.contains("cpa_cots_kg_per_cm2") && !j["cpa_cots_kg_per_cm2"].is_null()) {
        t.cpa_cots_kg_per_cm2 = get_number(j, path, "cpa_cots_kg_per_cm2");
        check_positive(*t.cpa_cots_kg_per_cm2, path, "cpa_cots_kg_per_cm2");
    }
    if (j.contains("cpa_radhard_kg_per_cm2") && !j["cpa_radhard_kg_per_cm2"].is_null()) {
        t.cpa_radhard_kg_per_cm2 = get_number(j, path, "cpa_radhard_kg_per_cm2");
        check_positive(*t.cpa_radhard_kg_per_cm2, path, "cpa_radhard_kg_per_cm2");
    }
    if (!t.cpa_cots_kg_per_cm2 && !t.cpa_radhard_kg_per_cm2) {
        throw config_error(path + ": at least one of cpa_cots_kg_per_cm2 / "
                                  "cpa_radhard_kg_per_cm2 is required");
    }
    if (t.cpa_cots_kg_per_cm2 && t.cpa_radhard_kg_per_cm2) {
        double ratio = *t.cpa_radhard_kg_per_cm2 / *t.cpa_cots_kg_per_cm2;
        if (std::abs(ratio - kRadhardCpaRatio) > kRatioTolerance * kRadhardCpaRatio) {
            throw config_error(path + ": cpa_radhard_kg_per_cm2 must equal 2x "
                                      "cpa_cots_kg_per_cm2, got ratio " +
                               format_double(ratio));
        }
    }
    return t;
}

MemoryTech parse_memory(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"kind", "hardness", "cpa_kg_per_gb"});
    MemoryTech t;
    t.name = name;
    std::string kind = get_string(j, path, "kind");
    if (kind == "DDR") t.kind = MemKind::DDR;
    else if (kind == "HBM") t.kind = MemKind::HBM;
    else if (kind == "NAND") t.kind = MemKind::NAND;
    else throw config_error(path + ".kind: expected DDR, HBM, or NAND, got '" + kind + "'");
    std::string hardness = get_string(j, path, "hardness");
    if (hardness == "COTS") t.hardness = Hardness::COTS;
    else if (hardness == "RAD_HARD") t.hardness = Hardness::RAD_HARD;
    else throw config_error(path + ".hardness: expected COTS or RAD_HARD, got '" + hardness + "'");
    t.cpa_kg_per_gb = get_number(j, path, "cpa_kg_per_gb");
    check_positive(t.cpa_kg_per_gb, path, "cpa_kg_per_gb");
    return t;
}

LaunchVehicle parse_vehicle(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"per_launch_emission_kg", "payload_capacity_kg"});
    LaunchVehicle t;
    t.name = name;
    t.per_launch_emission_kg = get_number(j, path, "per_launch_emission_kg");
    t.payload_capacity_kg = get_number(j, path, "payload_capacity_kg");
    check_positive(t.per_launch_emission_kg, path, "per_launch_emission_kg");
    check_positive(t.payload_capacity_kg, path, "payload_capacity_kg");
    t.intensity_kg_per_kg = t.per_launch_emission_kg / t.payload_capacity_kg;
    return t;
}

CommsPayload parse_comms(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"mass_kg", "manu_embodied_kg", "description"});
    CommsPayload t;
    t.name = name;
    t.mass_kg = get_number(j, path, "mass_kg");
    t.manu_embodied_kg = get_number(j, path, "manu_embodied_kg");
    t.description = get_string_or(j, path, "description", "");
    check_nonnegative(t.mass_kg, path, "mass_kg");
    check_nonnegative(t.manu_embodied_kg, path, "manu_embodied_kg");
    return t;
}

GridProfile parse_grid(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path, {"intensity_g_per_kwh"});
    GridProfile t;
    t.name = name;
    t.intensity_g_per_kwh = get_number(j, path, "intensity_g_per_kwh");
    check_nonnegative(t.intensity_g_per_kwh, path, "intensity_g_per_kwh");
    return t;
}

HardeningProfile parse_hardening_profile(const json& j, const std::string& name,
                                         const std::string& path) {
    reject_unknown_keys(j, path,
                        {"mode", "area_scale", "power_scale", "lifetime_years", "radhard_process"});
    HardeningProfile t;
    t.name = name;
    std::string mode = get_string(j, path, "mode");
    if (mode == "COTS") t.mode = HardeningMode::COTS;
    else if (mode == "RAD_HARD") t.mode = HardeningMode::RAD_HARD;
    else throw config_error(path + ".mode: expected COTS or RAD_HARD, got '" + mode + "'");
    t.area_scale = get_number_or(j, path, "area_scale", 1.0);
    t.power_scale = get_number_or(j, path, "power_scale", 1.0);
    t.lifetime_years = get_number(j, path, "lifetime_years");
    t.radhard_process = get_string_or(j, path, "radhard_process", "14nm");
    check_positive(t.lifetime_years, path, "lifetime_years");
    if (t.mode == HardeningMode::COTS) {
        if (t.area_scale != 1.0 || t.power_scale != 1.0) {
            throw config_error(path + ": COTS profiles require area_scale = power_scale = 1");
        }
        if (t.lifetime_years > 2.0) {
            throw config_error(path + ".lifetime_years: COTS is limited to 2 years in orbit, got " +
                               format_double(t.lifetime_years));
        }
    } else {
        if (t.area_scale < 1.0 || t.power_scale < 1.0) {
            throw config_error(path + ": RAD_HARD profiles require area_scale >= 1 and "
                                      "power_scale >= 1");
        }
    }
    return t;
}

ComputeNode parse_node(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"logic", "memory", "storage_gb", "storage_tech", "radhard_storage_tech",
                         "base_mass_kg", "power_demand_kw", "manu_override_cots_kg",
                         "manu_override_radhard_kg", "source"});
    ComputeNode t;
    t.name = name;
    if (!j.contains("logic") || !j["logic"].is_array()) {
        throw config_error(path + ".logic: expected an array of dies");
    }
    size_t idx = 0;
    for (const auto& dj : j["logic"]) {
        std::string dpath = path + ".logic[" + std::to_string(idx++) + "]";
        require_object(dj, dpath);
        reject_unknown_keys(dj, dpath, {"name", "area_cm2", "process", "count"});
        LogicDie d;
        d.name = get_string(dj, dpath, "name");
        d.area_cm2 = get_number(dj, dpath, "area_cm2");
        d.process = get_string(dj, dpath, "process");
        d.count = static_cast<int>(get_number_or(dj, dpath, "count", 1));
        check_positive(d.area_cm2, dpath, "area_cm2");
        if (d.count < 1) {
            throw config_error(dpath + ".count: must be >= 1");
        }
        t.logic.push_back(std::move(d));
    }
    if (j.contains("memory")) {
        if (!j["memory"].is_array()) {
            throw config_error(path + ".memory: expected an array of blocks");
        }
        idx = 0;
        for (const auto& mj : j["memory"]) {
            std::string mpath = path + ".memory[" + std::to_string(idx++) + "]";
            require_object(mj, mpath);
            reject_unknown_keys(mj, mpath, {"tech", "capacity_gb", "radhard_tech"});
            MemoryBlock b;
            b.tech = get_string(mj, mpath, "tech");
            b.capacity_gb = get_number(mj, mpath, "capacity_gb");
            b.radhard_tech = get_string_or(mj, mpath, "radhard_tech", "");
            check_positive(b.capacity_gb, mpath, "capacity_gb");
            t.memory.push_back(std::move(b));
        }
    }
    t.storage_gb = get_number_or(j, path, "storage_gb", 0.0);
    check_nonnegative(t.storage_gb, path, "storage_gb");
    t.storage_tech = get_string_or(j, path, "storage_tech", "NAND");
    t.radhard_storage_tech = get_string_or(j, path, "radhard_storage_tech", "");
    t.base_mass_kg = get_number(j, path, "base_mass_kg");
    t.power_demand_kw = get_number(j, path, "power_demand_kw");
    check_positive(t.base_mass_kg, path, "base_mass_kg");
    check_positive(t.power_demand_kw, path, "power_demand_kw");
    if (j.contains("manu_override_cots_kg") && !j["manu_override_cots_kg"].is_null()) {
        t.manu_override_cots_kg = get_number(j, path, "manu_override_cots_kg");
        check_positive(*t.manu_override_cots_kg, path, "manu_override_cots_kg");
    }
    if (j.contains("manu_override_radhard_kg") && !j["manu_override_radhard_kg"].is_null()) {
        t.manu_override_radhard_kg = get_number(j, path, "manu_override_radhard_kg");
        check_positive(*t.manu_override_radhard_kg, path, "manu_override_radhard_kg");
    }
    t.source = get_string_or(j, path, "source", "");
    return t;
}

ModelSpec parse_model(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"param_count", "layers", "hidden_dim", "kv_heads", "head_dim",
                         "bytes_per_param"});
    ModelSpec t;
    t.name = name;
    t.param_count = get_number(j, path, "param_count");
    t.layers = get_number(j, path, "layers");
    t.hidden_dim = get_number(j, path, "hidden_dim");
    t.kv_heads = get_number(j, path, "kv_heads");
    t.head_dim = get_number(j, path, "head_dim");
    t.bytes_per_param = get_number(j, path, "bytes_per_param");
    for (auto [v, f] : {std::pair{t.param_count, "param_count"}, {t.layers, "layers"},
                        {t.hidden_dim, "hidden_dim"}, {t.kv_heads, "kv_heads"},
                        {t.head_dim, "head_dim"}, {t.bytes_per_param, "bytes_per_param"}}) {
        check_positive(v, path, f);
    }
    if (t.kv_heads * t.head_dim > t.hidden_dim) {
        throw config_error(path + ": kv_heads * head_dim must not exceed hidden_dim");
    }
    return t;
}

AcceleratorSpec parse_accelerator(const json& j, const std::string& name,
                                  const std::string& path) {
    reject_unknown_keys(j, path,
                        {"peak_flops", "hbm_bandwidth_bytes_per_s", "compute_util", "mem_util",
                         "node_power_kw"});
    AcceleratorSpec t;
    t.name = name;
    t.peak_flops = get_number(j, path, "peak_flops");
    t.hbm_bandwidth_bytes_per_s = get_number(j, path, "hbm_bandwidth_bytes_per_s");
    t.compute_util = get_number(j, path, "compute_util");
    t.mem_util = get_number(j, path, "mem_util");
    t.node_power_kw = get_number(j, path, "node_power_kw");
    check_positive(t.peak_flops, path, "peak_flops");
    check_positive(t.hbm_bandwidth_bytes_per_s, path, "hbm_bandwidth_bytes_per_s");
    check_positive(t.node_power_kw, path, "node_power_kw");
    for (auto [v, f] : {std::pair{t.compute_util, "compute_util"}, {t.mem_util, "mem_util"}}) {
        if (!(v > 0 && v <= 1)) {
            throw config_error(path + "." + std::string(f) + ": must be in (0,1], got " +
                               format_double(v));
        }
    }
    return t;
}

TokenStats parse_token_stats(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"mean", "min", "max"});
    TokenStats s;
    s.mean = get_number(j, path, "mean");
    s.min = get_number(j, path, "min");
    s.max = get_number(j, path, "max");
    if (!(s.min <= s.mean && s.mean <= s.max)) {
        throw config_error(path + ": requires min <= mean <= max");
    }
    if (s.min < 0) {
        throw config_error(path + ".min: must be nonnegative");
    }
    return s;
}

TaskProfile parse_task(const json& j, const std::string& name, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"prompt_tokens", "gen_tokens", "request_bytes", "response_bytes",
                         "placeholder_stats"});
    TaskProfile t;
    t.name = name;
    bool prompt_null = !j.contains("prompt_tokens") || j["prompt_tokens"].is_null();
    bool gen_null = !j.contains("gen_tokens") || j["gen_tokens"].is_null();
    if (prompt_null || gen_null) {
        // A task may be declared without statistics; estimates then require a
        // measured trace.
        t.has_stats = false;
    } else {
        t.prompt_tokens = parse_token_stats(j["prompt_tokens"], path + ".prompt_tokens");
        t.gen_tokens = parse_token_stats(j["gen_tokens"], path + ".gen_tokens");
    }
    t.request_bytes = get_number_or(j, path, "request_bytes", 0.0);
    t.response_bytes = get_number_or(j, path, "response_bytes", 0.0);
    check_nonnegative(t.request_bytes, path, "request_bytes");
    check_nonnegative(t.response_bytes, path, "response_bytes");
    t.placeholder_stats = get_bool_or(j, path, "placeholder_stats", false);
    return t;
}

template <typename T, typename Parser>
void parse_category(const json& merged, const std::string& category,
                    std::map<std::string, T>& out, Parser parser) {
    auto it = merged.find(category);
    if (it == merged.end()) {
        return;
    }
    require_object(*it, "catalog." + category);
    for (auto entry = it->begin(); entry != it->end(); ++entry) {
        std::string path = "catalog." + category + "." + entry.key();
        require_object(entry.value(), path);
        out[entry.key()] = parser(entry.value(), entry.key(), path);
    }
}

template <typename T>
const T& lookup_in(const std::map<std::string, T>& table, const std::string& category,
                   const std::string& name) {
    auto it = table.find(name);
    if (it == table.end()) {
        std::vector<std::string> candidates;
        candidates.reserve(table.size());
        for (const auto& [k, v] : table) candidates.push_back(k);
        throw not_found_error("unknown " + category + " '" + name +
                              "' (available: " + join_names(candidates) + ")");
    }
    return it->second;
}

const std::vector<std::string>& category_names() {
    static const std::vector<std::string> names = {
        "solar", "battery", "radiator", "process", "memory", "launch_vehicle",
        "comms", "grid", "hardening", "compute_node", "model", "accelerator", "task"};
    return names;
}

} // namespace

TechnologyCatalog parse_catalog(const json& merged) {
    TechnologyCatalog c;
    parse_category(merged, "solar", c.solar_, parse_solar);
    parse_category(merged, "battery", c.battery_, parse_battery);
    parse_category(merged, "radiator", c.radiator_, parse_radiator);
    parse_category(merged, "process", c.process_, parse_process);
    parse_category(merged, "memory", c.memory_, parse_memory);
    parse_category(merged, "launch_vehicle", c.vehicles_, parse_vehicle);
    parse_category(merged, "comms", c.comms_, parse_comms);
    parse_category(merged, "grid", c.grids_, parse_grid);
    parse_category(merged, "hardening", c.hardening_, parse_hardening_profile);
    parse_category(merged, "compute_node", c.nodes_, parse_node);
    parse_category(merged, "model", c.models_, parse_model);
    parse_category(merged, "accelerator", c.accelerators_, parse_accelerator);
    parse_category(merged, "task", c.tasks_, parse_task);

    // Referential integrity for node entries.
    for (const auto& [name, node] : c.nodes_) {
        std::string path = "catalog.compute_node." + name;
        for (const auto& die : node.logic) {
            if (!c.process_.count(die.process)) {
                throw config_error(path + ": unknown process '" + die.process + "'");
            }
        }
        for (const auto& block : node.memory) {
            if (!c.memory_.count(block.tech)) {
                throw config_error(path + ": unknown memory tech '" + block.tech + "'");
            }
            if (!block.radhard_tech.empty() && !c.memory_.count(block.radhard_tech)) {
                throw config_error(path + ": unknown memory tech '" + block.radhard_tech + "'");
            }
        }
        if (node.storage_gb > 0 && !c.memory_.count(node.storage_tech)) {
            throw config_error(path + ": unknown storage tech '" + node.storage_tech + "'");
        }
    }
    return c;
}

TechnologyCatalog TechnologyCatalog::builtin() {
    return parse_catalog(builtin_catalog_json());
}

TechnologyCatalog TechnologyCatalog::load(const json& overrides) {
    json merged = builtin_catalog_json();
    if (!overrides.is_null()) {
        require_object(overrides, "catalog");
        reject_unknown_keys(overrides, "catalog", category_names());
        merged.merge_patch(overrides);
    }
    return parse_catalog(merged);
}

TechnologyCatalog TechnologyCatalog::load_file(const std::string& path) {
    return load(read_json_file(path));
}

const SolarTech& TechnologyCatalog::solar(const std::string& name) const {
    return lookup_in(solar_, "solar tech", name);
}
const BatteryTech& TechnologyCatalog::battery(const std::string& name) const {
    return lookup_in(battery_, "battery tech", name);
}
const RadiatorTech& TechnologyCatalog::radiator(const std::string& name) const {
    return lookup_in(radiator_, "radiator tech", name);
}
const ProcessNode& TechnologyCatalog::process(const std::string& name) const {
    return lookup_in(process_, "process", name);
}
const MemoryTech& TechnologyCatalog::memory(const std::string& name) const {
    return lookup_in(memory_, "memory tech", name);
}
const LaunchVehicle& TechnologyCatalog::launch_vehicle(const std::string& name) const {
    return lookup_in(vehicles_, "launch vehicle", name);
}
const CommsPayload& TechnologyCatalog::comms(const std::string& name) const {
    return lookup_in(comms_, "comms payload", name);
}
const GridProfile& TechnologyCatalog::grid(const std::string& name) const {
    return lookup_in(grids_, "grid profile", name);
}
const ComputeNode& TechnologyCatalog::compute_node(const std::string& name) const {
    return lookup_in(nodes_, "compute node", name);
}
const HardeningProfile& TechnologyCatalog::hardening(const std::string& name) const {
    return lookup_in(hardening_, "hardening profile", name);
}
const ModelSpec& TechnologyCatalog::model(const std::string& name) const {
    return lookup_in(models_, "model", name);
}
const AcceleratorSpec& TechnologyCatalog::accelerator(const std::string& name) const {
    return lookup_in(accelerators_, "accelerator", name);
}
const TaskProfile& TechnologyCatalog::task(const std::string& name) const {
    return lookup_in(tasks_, "task", name);
}

const MemoryTech& TechnologyCatalog::radhard_memory_for(MemKind kind) const {
    const MemoryTech* found = nullptr;
    for (const auto& [name, tech] : memory_) {
        if (tech.kind == kind && tech.hardness == Hardness::RAD_HARD) {
            if (found) {
                throw config_error("ambiguous hardened substitute for " + memkind_name(kind) +
                                   ": both '" + found->name + "' and '" + name +
                                   "' qualify; set radhard_tech explicitly");
            }
            found = &tech;
        }
    }
    if (!found) {
        throw not_found_error("no hardened memory tech of kind " + memkind_name(kind) +
                              " in catalog");
    }
    return *found;
}

std::vector<std::string> TechnologyCatalog::names(const std::string& category) const {
    std::vector<std::string> out;
    auto collect = [&out](const auto& table) {
        for (const auto& [k, v] : table) out.push_back(k);
    };
    if (category == "solar") collect(solar_);
    else if (category == "battery") collect(battery_);
    else if (category == "radiator") collect(radiator_);
    else if (category == "process") collect(process_);
    else if (category == "memory") collect(memory_);
    else if (category == "launch_vehicle") collect(vehicles_);
    else if (category == "comms") collect(comms_);
    else if (category == "grid") collect(grids_);
    else if (category == "hardening") collect(hardening_);
    else if (category == "compute_node") collect(nodes_);
    else if (category == "model") collect(models_);
    else if (category == "accelerator") collect(accelerators_);
    else if (category == "task") collect(tasks_);
    else throw not_found_error("unknown catalog category '" + category +
                               "' (available: " + join_names(category_names()) + ")");
    return out;
}

json TechnologyCatalog::to_json() const {
    json doc = json::object();
    for (const auto& [name, t] : solar_) {
        doc["solar"][name] = {{"areal_density_kg_per_m2", t.areal_density_kg_per_m2},
                              {"efficiency", t.efficiency},
                              {"manu_intensity_kg_per_m2", t.manu_intensity_kg_per_m2}};
    }
    for (const auto& [name, t] : battery_) {
        doc["battery"][name] = {{"specific_mass_kg_per_kwh", t.specific_mass_kg_per_kwh},
                                {"manu_intensity_kg_per_kwh", t.manu_intensity_kg_per_kwh},
                                {"reference_cap_kwh", t.reference_cap_kwh}};
    }
    for (const auto& [name, t] : radiator_) {
        doc["radiator"][name] = {{"areal_density_kg_per_m2", t.areal_density_kg_per_m2},
                                 {"emissivity", t.emissivity},
                                 {"manu_intensity_kg_per_kg", t.manu_intensity_kg_per_kg}};
    }
    for (const auto& [name, t] : process_) {
        json e = {{"feature_size_nm", t.feature_size_nm}};
        if (t.cpa_cots_kg_per_cm2) e["cpa_cots_kg_per_cm2"] = *t.cpa_cots_kg_per_cm2;
        if (t.cpa_radhard_kg_per_cm2) e["cpa_radhard_kg_per_cm2"] = *t.cpa_radhard_kg_per_cm2;
        doc["process"][name] = std::move(e);
    }
    for (const auto& [name, t] : memory_) {
        doc["memory"][name] = {{"kind", memkind_name(t.kind)},
                               {"hardness", hardness_name(t.hardness)},
                               {"cpa_kg_per_gb", t.cpa_kg_per_gb}};
    }
    for (const auto& [name, t] : vehicles_) {
        doc["launch_vehicle"][name] = {{"per_launch_emission_kg", t.per_launch_emission_kg},
                                       {"payload_capacity_kg", t.payload_capacity_kg}};
    }
    for (const auto& [name, t] : comms_) {
        doc["comms"][name] = {{"mass_kg", t.mass_kg},
                              {"manu_embodied_kg", t.manu_embodied_kg},
                              {"description", t.description}};
    }
    for (const auto& [name, t] : grids_) {
        doc["grid"][name] = {{"intensity_g_per_kwh", t.intensity_g_per_kwh}};
    }
    for (const auto& [name, t] : hardening_) {
        json e = {{"mode", hardening_mode_name(t.mode)},
                  {"area_scale", t.area_scale},
                  {"power_scale", t.power_scale},
                  {"lifetime_years", t.lifetime_years}};
        if (t.mode == HardeningMode::RAD_HARD) e["radhard_process"] = t.radhard_process;
        doc["hardening"][name] = std::move(e);
    }
    for (const auto& [name, t] : nodes_) {
        json dies = json::array();
        for (const auto& d : t.logic) {
            dies.push_back({{"name", d.name},
                            {"area_cm2", d.area_cm2},
                            {"process", d.process},
                            {"count", d.count}});
        }
        json blocks = json::array();
        for (const auto& b : t.memory) {
            json bj = {{"tech", b.tech}, {"capacity_gb", b.capacity_gb}};
            if (!b.radhard_tech.empty()) bj["radhard_tech"] = b.radhard_tech;
            blocks.push_back(std::move(bj));
        }
        json e = {{"logic", std::move(dies)},
                  {"memory", std::move(blocks)},
                  {"storage_gb", t.storage_gb},
                  {"storage_tech", t.storage_tech},
                  {"base_mass_kg", t.base_mass_kg},
                  {"power_demand_kw", t.power_demand_kw}};
        if (!t.radhard_storage_tech.empty()) e["radhard_storage_tech"] = t.radhard_storage_tech;
        if (t.manu_override_cots_kg) e["manu_override_cots_kg"] = *t.manu_override_cots_kg;
        if (t.manu_override_radhard_kg) {
            e["manu_override_radhard_kg"] = *t.manu_override_radhard_kg;
        }
        if (!t.source.empty()) e["source"] = t.source;
        doc["compute_node"][name] = std::move(e);
    }
    for (const auto& [name, t] : models_) {
        doc["model"][name] = {{"param_count", t.param_count},
                              {"layers", t.layers},
                              {"hidden_dim", t.hidden_dim},
                              {"kv_heads", t.kv_heads},
                              {"head_dim", t.head_dim},
                              {"bytes_per_param", t.bytes_per_param}};
    }
    for (const auto& [name, t] : accelerators_) {
        doc["accelerator"][name] = {{"peak_flops", t.peak_flops},
                                    {"hbm_bandwidth_bytes_per_s", t.hbm_bandwidth_bytes_per_s},
                                    {"compute_util", t.compute_util},
                                    {"mem_util", t.mem_util},
                                    {"node_power_kw", t.node_power_kw}};
    }
    for (const auto& [name, t] : tasks_) {
        json e;
        if (t.has_stats) {
            e["prompt_tokens"] = {{"mean", t.prompt_tokens.mean},
                                  {"min", t.prompt_tokens.min},
                                  {"max", t.prompt_tokens.max}};
            e["gen_tokens"] = {{"mean", t.gen_tokens.mean},
                               {"min", t.gen_tokens.min},
                               {"max", t.gen_tokens.max}};
        } else {
            e["prompt_tokens"] = nullptr;
            e["gen_tokens"] = nullptr;
        }
        e["request_bytes"] = t.request_bytes;
        e["response_bytes"] = t.response_bytes;
        e["placeholder_stats"] = t.placeholder_stats;
        doc["task"][name] = std::move(e);
    }
    return doc;
}

std::string memkind_name(MemKind kind) {
    switch (kind) {
        case MemKind::DDR: return "DDR";
        case MemKind::HBM: return "HBM";
        case MemKind::NAND: return "NAND";
    }
    return "?";
}

std::string hardness_name(Hardness h) {
    return h == Hardness::COTS ? "COTS" : "RAD_HARD";
}

std::string hardening_mode_name(HardeningMode m) {
    return m == HardeningMode::COTS ? "COTS" : "RAD_HARD";
}

} // namespace llmspace
