#include "llmspace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "llmspace/errors.hpp"

namespace llmspace {

namespace {

const json& builtin_scenarios_json() {
    static const json doc = json::parse(R"JSON(
{
  "starlink_v1_cots": {
    "deployment": "orbital", "node": "dgx_h100", "hardening": "cots",
    "solar_tech": "Si", "battery_tech": "NMC", "radiator_tech": "honeycomb",
    "sizing_policy": "demand_match",
    "vehicle": "falcon9", "platform": "starlink_v1_bundle",
    "lifetime_years": 2, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "h100_sxm", "tasks": ["all"]}
  },
  "starlink_v1_radhard": {
    "deployment": "orbital", "node": "dgx_h100", "hardening": "rad-hard",
    "solar_tech": "Si", "battery_tech": "rad-hard", "radiator_tech": "honeycomb",
    "sizing_policy": "demand_match",
    "vehicle": "falcon9", "platform": "starlink_v1_bundle",
    "lifetime_years": 10, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "h100_sxm", "tasks": ["all"]}
  },
  "starlink_v1_radopt": {
    "deployment": "orbital", "node": "dgx_h100", "hardening": "rad-hard",
    "solar_tech": "multi-junction", "battery_tech": "rad-hard", "radiator_tech": "honeycomb",
    "sizing_policy": "demand_match",
    "vehicle": "falcon9", "platform": "starlink_v1_bundle",
    "lifetime_years": 10, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "h100_sxm", "tasks": ["all"]}
  },
  "a100_radhard": {
    "deployment": "orbital", "node": "dgx_a100",
    "hardening": {"mode": "RAD_HARD", "area_scale": 15.0, "power_scale": 1.0,
                  "lifetime_years": 10.0, "radhard_process": "14nm"},
    "solar_tech": "Si", "battery_tech": "rad-hard", "radiator_tech": "honeycomb",
    "sizing_policy": "demand_match",
    "vehicle": "falcon9", "platform": "starlink_v1_bundle",
    "lifetime_years": 10, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "a100_sxm", "tasks": ["all"]}
  },
  "terrestrial_clean": {
    "deployment": "terrestrial", "node": "dgx_h100", "hardening": "cots",
    "grid": "clean", "lifetime_years": 10, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "h100_sxm", "tasks": ["all"]}
  },
  "terrestrial_dirty": {
    "deployment": "terrestrial", "node": "dgx_h100", "hardening": "cots",
    "grid": "dirty", "lifetime_years": 10, "duty_factor": 1.0,
    "workload": {"model": "codellama-34b", "accelerator": "h100_sxm", "tasks": ["all"]}
  },
  "jetson_radhard": {
    "deployment": "orbital", "node": "jetson_nano", "hardening": "rad-hard",
    "solar_tech": "Si", "battery_tech": "LFP", "radiator_tech": "passive",
    "sizing_policy": "demand_match",
    "vehicle": "falcon9", "platform": "cubesat_rf",
    "lifetime_years": 10, "duty_factor": 1.0
  },
  "jetson_terrestrial_clean": {
    "deployment": "terrestrial", "node": "jetson_nano", "hardening": "cots",
    "grid": "clean", "lifetime_years": 10, "duty_factor": 1.0
  }
}
)JSON");
    return doc;
}

OrbitTiming parse_timing(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"cycles_per_day", "sunlit_minutes", "eclipse_minutes"});
    OrbitTiming t;
    t.cycles_per_day = get_number_or(j, path, "cycles_per_day", t.cycles_per_day);
    t.sunlit_minutes = get_number_or(j, path, "sunlit_minutes", t.sunlit_minutes);
    t.eclipse_minutes = get_number_or(j, path, "eclipse_minutes", t.eclipse_minutes);
    return t;
}

ThermalEnvironment parse_thermal(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"radiator_temp_k", "background_temp_k"});
    ThermalEnvironment t;
    t.radiator_temp_k = get_number_or(j, path, "radiator_temp_k", t.radiator_temp_k);
    t.background_temp_k = get_number_or(j, path, "background_temp_k", t.background_temp_k);
    return t;
}

HardeningProfile parse_inline_hardening(const json& j, const std::string& path) {
    reject_unknown_keys(j, path,
                        {"mode", "area_scale", "power_scale", "lifetime_years", "radhard_process"});
    HardeningProfile t;
    t.name = "inline";
    std::string mode = get_string(j, path, "mode");
    if (mode == "COTS") t.mode = HardeningMode::COTS;
    else if (mode == "RAD_HARD") t.mode = HardeningMode::RAD_HARD;
    else throw config_error(path + ".mode: expected COTS or RAD_HARD, got '" + mode + "'");
    t.area_scale = get_number_or(j, path, "area_scale", 1.0);
    t.power_scale = get_number_or(j, path, "power_scale", 1.0);
    t.lifetime_years = get_number(j, path, "lifetime_years");
    t.radhard_process = get_string_or(j, path, "radhard_process", "14nm");
    if (t.mode == HardeningMode::COTS && (t.area_scale != 1.0 || t.power_scale != 1.0)) {
        throw config_error(path + ": COTS profiles require area_scale = power_scale = 1");
    }
    if (t.mode == HardeningMode::RAD_HARD && (t.area_scale < 1.0 || t.power_scale < 1.0)) {
        throw config_error(path + ": RAD_HARD profiles require scales >= 1");
    }
    return t;
}

} // namespace

Scenario parse_scenario(const json& doc, const std::string& default_name) {
    std::string path = "scenario";
    require_object(doc, path);
    reject_unknown_keys(doc, path,
                        {"name", "deployment", "node", "hardening", "solar_tech", "battery_tech",
                         "radiator_tech", "sizing_policy", "timing", "thermal", "dod",
                         "battery_round_trip_eff", "isi_w_per_m2", "vehicle", "platform", "grid",
                         "lifetime_years", "duty_factor", "workload"});
    Scenario s;
    s.name = get_string_or(doc, path, "name", default_name);
    path = "scenario." + s.name;

    std::string deployment = get_string(doc, path, "deployment");
    if (deployment == "orbital") s.deployment = Deployment::Orbital;
    else if (deployment == "terrestrial") s.deployment = Deployment::Terrestrial;
    else throw config_error(path + ".deployment: expected 'orbital' or 'terrestrial', got '" +
                            deployment + "'");

    s.node = get_string(doc, path, "node");

    if (doc.contains("hardening")) {
        const json& h = doc["hardening"];
        if (h.is_string()) {
            s.hardening_preset = h.get<std::string>();
        } else if (h.is_object()) {
            s.hardening_inline = parse_inline_hardening(h, path + ".hardening");
        } else {
            throw config_error(path + ".hardening: expected a preset name or a profile object");
        }
    }

    s.solar_tech = get_string_or(doc, path, "solar_tech", "");
    s.battery_tech = get_string_or(doc, path, "battery_tech", "");
    s.radiator_tech = get_string_or(doc, path, "radiator_tech", "");

    std::string policy = get_string_or(doc, path, "sizing_policy", "demand_match");
    if (policy == "demand_match") s.sizing_policy = SizingPolicy::DemandMatch;
    else if (policy == "recharge_aware") s.sizing_policy = SizingPolicy::RechargeAware;
    else throw config_error(path + ".sizing_policy: expected 'demand_match' or "
                            "'recharge_aware', got '" + policy + "'");

    if (doc.contains("timing")) s.timing = parse_timing(doc["timing"], path + ".timing");
    if (doc.contains("thermal")) s.thermal = parse_thermal(doc["thermal"], path + ".thermal");

    s.dod = get_number_or(doc, path, "dod", kDefaultDod);
    if (!(s.dod > 0 && s.dod <= 1)) {
        throw config_error(path + ".dod: must be in (0,1], got " + format_double(s.dod));
    }
    s.battery_round_trip_eff = get_number_or(doc, path, "battery_round_trip_eff", 1.0);
    if (!(s.battery_round_trip_eff > 0 && s.battery_round_trip_eff <= 1)) {
        throw config_error(path + ".battery_round_trip_eff: must be in (0,1], got " +
                           format_double(s.battery_round_trip_eff));
    }
    s.isi_w_per_m2 = get_number_or(doc, path, "isi_w_per_m2", kIsiWPerM2);
    if (!(s.isi_w_per_m2 > 0)) {
        throw config_error(path + ".isi_w_per_m2: must be positive");
    }

    s.vehicle = get_string_or(doc, path, "vehicle", "");
    s.platform = get_string_or(doc, path, "platform", "");
    s.grid = get_string_or(doc, path, "grid", "");

    s.lifetime_years = get_number_or(doc, path, "lifetime_years", 2.0);
    if (!(s.lifetime_years > 0)) {
        throw config_error(path + ".lifetime_years: must be positive");
    }
    s.duty_factor = get_number_or(doc, path, "duty_factor", 1.0);
    if (!(s.duty_factor > 0 && s.duty_factor <= 1)) {
        throw config_error(path + ".duty_factor: must be in (0,1], got " +
                           format_double(s.duty_factor));
    }

    if (doc.contains("workload") && !doc["workload"].is_null()) {
        const json& w = doc["workload"];
        std::string wpath = path + ".workload";
        require_object(w, wpath);
        reject_unknown_keys(w, wpath, {"model", "accelerator", "tasks"});
        WorkloadRef ref;
        ref.model = get_string(w, wpath, "model");
        ref.accelerator = get_string(w, wpath, "accelerator");
        if (w.contains("tasks")) {
            if (!w["tasks"].is_array()) {
                throw config_error(wpath + ".tasks: expected an array of task names");
            }
            for (const auto& t : w["tasks"]) {
                if (!t.is_string()) {
                    throw config_error(wpath + ".tasks: entries must be strings");
                }
                ref.tasks.push_back(t.get<std::string>());
            }
        }
        s.workload = std::move(ref);
    }

    // Deployment-specific completeness.
    if (s.deployment == Deployment::Orbital) {
        for (auto [value, field] :
             {std::pair{&s.solar_tech, "solar_tech"}, {&s.battery_tech, "battery_tech"},
              {&s.radiator_tech, "radiator_tech"}, {&s.vehicle, "vehicle"},
              {&s.platform, "platform"}}) {
            if (value->empty()) {
                throw config_error(path + ": orbital scenarios require '" + std::string(field) +
                                   "'");
            }
        }
    } else {
        if (s.grid.empty()) {
            throw config_error(path + ": terrestrial scenarios require 'grid'");
        }
    }
    return s;
}

json scenario_to_json(const Scenario& s) {
    json doc;
    doc["name"] = s.name;
    doc["deployment"] = deployment_name(s.deployment);
    doc["node"] = s.node;
    if (s.hardening_inline) {
        const auto& h = *s.hardening_inline;
        json hj = {{"mode", hardening_mode_name(h.mode)},
                   {"area_scale", h.area_scale},
                   {"power_scale", h.power_scale},
                   {"lifetime_years", h.lifetime_years}};
        if (h.mode == HardeningMode::RAD_HARD) hj["radhard_process"] = h.radhard_process;
        doc["hardening"] = std::move(hj);
    } else {
        doc["hardening"] = s.hardening_preset;
    }
    if (!s.solar_tech.empty()) doc["solar_tech"] = s.solar_tech;
    if (!s.battery_tech.empty()) doc["battery_tech"] = s.battery_tech;
    if (!s.radiator_tech.empty()) doc["radiator_tech"] = s.radiator_tech;
    doc["sizing_policy"] = sizing_policy_name(s.sizing_policy);
    doc["timing"] = {{"cycles_per_day", s.timing.cycles_per_day},
                     {"sunlit_minutes", s.timing.sunlit_minutes},
                     {"eclipse_minutes", s.timing.eclipse_minutes}};
    doc["thermal"] = {{"radiator_temp_k", s.thermal.radiator_temp_k},
                      {"background_temp_k", s.thermal.background_temp_k}};
    doc["dod"] = s.dod;
    doc["battery_round_trip_eff"] = s.battery_round_trip_eff;
    doc["isi_w_per_m2"] = s.isi_w_per_m2;
    if (!s.vehicle.empty()) doc["vehicle"] = s.vehicle;
    if (!s.platform.empty()) doc["platform"] = s.platform;
    if (!s.grid.empty()) doc["grid"] = s.grid;
    doc["lifetime_years"] = s.lifetime_years;
    doc["duty_factor"] = s.duty_factor;
    if (s.workload) {
        doc["workload"] = {{"model", s.workload->model},
                           {"accelerator", s.workload->accelerator},
                           {"tasks", s.workload->tasks}};
    }
    return doc;
}

const std::map<std::string, Scenario>& builtin_scenarios() {
    static const std::map<std::string, Scenario> scenarios = [] {
        std::map<std::string, Scenario> out;
        const json& doc = builtin_scenarios_json();
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            out[it.key()] = parse_scenario(it.value(), it.key());
        }
        return out;
    }();
    return scenarios;
}

Scenario resolve_scenario(const std::string& ref) {
    const auto& shipped = builtin_scenarios();
    if (auto it = shipped.find(ref); it != shipped.end()) {
        return it->second;
    }
    std::string file = ref;
    std::string member;
    if (auto hash = ref.find('#'); hash != std::string::npos) {
        file = ref.substr(0, hash);
        member = ref.substr(hash + 1);
    }
    if (!std::filesystem::exists(file)) {
        std::vector<std::string> names;
        names.reserve(shipped.size());
        for (const auto& [k, v] : shipped) names.push_back(k);
        throw not_found_error("unknown scenario '" + ref + "': not a shipped scenario (" +
                              join_names(names) + ") and no such file");
    }
    json doc = read_json_file(file);
    if (!member.empty()) {
        require_object(doc, file);
        if (!doc.contains(member)) {
            std::vector<std::string> names;
            for (auto it = doc.begin(); it != doc.end(); ++it) names.push_back(it.key());
            throw not_found_error(file + ": no scenario named '" + member +
                                  "' (available: " + join_names(names) + ")");
        }
        return parse_scenario(doc[member], member);
    }
    std::string base = std::filesystem::path(file).stem().string();
    if (doc.is_object() && !doc.contains("deployment")) {
        bool looks_like_map = !doc.empty();
        std::vector<std::string> names;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            looks_like_map = looks_like_map && it.value().is_object();
            names.push_back(it.key());
        }
        if (looks_like_map) {
            throw config_error(file + ": holds a named scenario map; select one with '" + file +
                               "#<name>' (available: " + join_names(names) + ")");
        }
    }
    return parse_scenario(doc, base);
}

HardeningProfile Scenario::resolve_hardening(const TechnologyCatalog& catalog) const {
    if (hardening_inline) {
        return *hardening_inline;
    }
    return catalog.hardening(hardening_preset);
}

CarbonReport evaluate(const Scenario& s, const TechnologyCatalog& catalog) {
    CarbonReport report;
    report.scenario = s.name;
    report.deployment = s.deployment;
    report.lifetime_years = s.lifetime_years;

    HardeningProfile hardening = s.resolve_hardening(catalog);
    if (s.deployment == Deployment::Orbital && hardening.mode == HardeningMode::COTS &&
        s.lifetime_years > hardening.lifetime_years) {
        throw config_error("scenario '" + s.name + "': COTS hardware survives only " +
                           format_double(hardening.lifetime_years) +
                           " years in orbit; requested lifetime " +
                           format_double(s.lifetime_years) + " years needs a hardened profile");
    }

    ComputeNode node = catalog.compute_node(s.node);
    node.hardening = hardening;
    NodeCarbon nc = node_carbon(node, catalog);
    report.power_kw = nc.power_kw;

    if (s.deployment == Deployment::Orbital) {
        auto notes = s.timing.validate();
        report.warnings.insert(report.warnings.end(), notes.begin(), notes.end());

        SizedPeripheral solar = size_solar(nc.power_kw, s.timing, catalog.solar(s.solar_tech),
                                           s.isi_w_per_m2, s.sizing_policy,
                                           s.battery_round_trip_eff);
        SizedPeripheral battery =
            size_battery(nc.power_kw, s.timing, catalog.battery(s.battery_tech), s.dod);
        // All electrical power is treated as heat to reject.
        SizedPeripheral radiator =
            size_radiator(nc.power_kw, catalog.radiator(s.radiator_tech), s.thermal);
        PlatformCarbon platform = platform_carbon(catalog.comms(s.platform));

        LaunchAssignment manifest;
        manifest.vehicle = s.vehicle;
        manifest.items = {{"solar array", solar.mass_kg},
                          {"battery", battery.mass_kg},
                          {"cooling panel", radiator.mass_kg},
                          {"computing hardware", nc.mass_kg},
                          {"platform", platform.mass_kg}};
        LaunchCarbon launch = launch_carbon(manifest, catalog);
        report.warnings.insert(report.warnings.end(), launch.warnings.begin(),
                               launch.warnings.end());

        report.items = {
            {"solar array", solar.manu_carbon_kg, launch.items[0].carbon_kg, CarbonMode::DERIVED},
            {"battery", battery.manu_carbon_kg, launch.items[1].carbon_kg, CarbonMode::DERIVED},
            {"cooling panel", radiator.manu_carbon_kg, launch.items[2].carbon_kg,
             CarbonMode::DERIVED},
            {"computing hardware", nc.total_kg, launch.items[3].carbon_kg, nc.mode},
            {"platform", platform.manu_kg, launch.items[4].carbon_kg, CarbonMode::CATALOG},
        };
        report.power_budget = daily_budget(solar, battery, s.timing, nc.power_kw, s.dod,
                                           s.battery_round_trip_eff);
        report.operational_annual_kg = 0.0; // solar-powered
    } else {
        report.items = {{"computing hardware", nc.total_kg, 0.0, nc.mode}};
        const GridProfile& grid = catalog.grid(s.grid);
        report.operational_annual_kg =
            nc.power_kw * kHoursPerYear * s.duty_factor * grid.intensity_g_per_kwh / 1000.0;
    }

    double total = 0;
    for (const auto& item : report.items) {
        total += item.manu_kg + item.launch_kg;
    }
    report.embodied_total_kg = total;
    report.annualized_kg = annualize(report, s.lifetime_years);
    return report;
}

double annualize(const CarbonReport& report, double lifetime_years) {
    if (!(lifetime_years > 0)) {
        throw domain_error("annualize: lifetime must be positive, got " +
                           format_double(lifetime_years));
    }
    return report.embodied_total_kg / lifetime_years + report.operational_annual_kg;
}

RequestCarbon per_request_carbon(const CarbonReport& report, const InferenceEstimate& estimate,
                                 const Scenario& s, const TechnologyCatalog& catalog) {
    if (!(s.duty_factor > 0)) {
        throw domain_error("per-request carbon: duty factor must be positive");
    }
    RequestCarbon out;
    double lifetime_s = s.lifetime_years * kHoursPerYear * 3600.0;
    double amortized_kg =
        report.embodied_total_kg * estimate.e2e_s / (lifetime_s * s.duty_factor);
    out.amortized_embodied_g = amortized_kg * 1000.0;
    if (estimate.e2e_s > 0) {
        out.prefill_share_g = out.amortized_embodied_g * estimate.ttft_s / estimate.e2e_s;
        out.decode_share_g =
            out.amortized_embodied_g * (estimate.e2e_s - estimate.ttft_s) / estimate.e2e_s;
    }
    if (s.deployment == Deployment::Terrestrial) {
        const GridProfile& grid = catalog.grid(s.grid);
        double request_kwh = (estimate.prefill_j + estimate.decode_j) / 3.6e6;
        out.operational_g = request_kwh * grid.intensity_g_per_kwh;
    }
    return out;
}

Comparison compare(const std::vector<Scenario>& scenarios, const TechnologyCatalog& catalog,
                   int lifetime_lo, int lifetime_hi) {
    if (scenarios.size() < 2) {
        throw domain_error("compare: at least two scenarios are required");
    }
    if (lifetime_lo < 1 || lifetime_hi < lifetime_lo) {
        throw domain_error("compare: invalid lifetime grid");
    }
    Comparison out;
    for (const auto& s : scenarios) {
        CarbonReport report = evaluate(s, catalog);
        double cap = static_cast<double>(lifetime_hi);
        HardeningProfile hardening = s.resolve_hardening(catalog);
        if (s.deployment == Deployment::Orbital && hardening.mode == HardeningMode::COTS) {
            cap = std::min(cap, hardening.lifetime_years);
        }
        Comparison::Entry entry;
        entry.scenario = s.name;
        entry.embodied_total_kg = report.embodied_total_kg;
        entry.operational_annual_kg = report.operational_annual_kg;
        entry.max_lifetime_years = cap;
        out.entries.push_back(entry);
        for (int years = lifetime_lo; years <= lifetime_hi; ++years) {
            if (static_cast<double>(years) > cap) break;
            out.rows.push_back({s.name, static_cast<double>(years),
                                annualize(report, static_cast<double>(years))});
        }
    }
    for (size_t i = 0; i < out.entries.size(); ++i) {
        for (size_t j = i + 1; j < out.entries.size(); ++j) {
            out.ratios.push_back({out.entries[i].scenario, out.entries[j].scenario,
                                  out.entries[i].embodied_total_kg /
                                      out.entries[j].embodied_total_kg});
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> segments;
    size_t start = 0;
    while (true) {
        size_t dot = path.find('.', start);
        std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
        if (key.empty()) {
            throw config_error("sweep axis: empty path segment in '" + path + "'");
        }
        segments.push_back(std::move(key));
        if (dot == std::string::npos) return segments;
        start = dot + 1;
    }
}

void set_by_path(json& doc, const std::string& path, const json& value) {
    json* cursor = &doc;
    auto segments = split_path(path);
    for (size_t i = 0; i + 1 < segments.size(); ++i) {
        if (!cursor->contains(segments[i]) || !(*cursor)[segments[i]].is_object()) {
            (*cursor)[segments[i]] = json::object();
        }
        cursor = &(*cursor)[segments[i]];
    }
    (*cursor)[segments.back()] = value;
}

// A path is valid when it resolves inside the scenario's canonical document;
// bad values are a per-cell concern, bad paths fail the whole sweep.
void require_path(const json& doc, const std::string& path) {
    const json* cursor = &doc;
    for (const auto& segment : split_path(path)) {
        if (!cursor->is_object() || !cursor->contains(segment)) {
            std::vector<std::string> keys;
            if (cursor->is_object()) {
                for (auto it = cursor->begin(); it != cursor->end(); ++it) {
                    keys.push_back(it.key());
                }
            }
            throw config_error("sweep axis '" + path + "': no such path in this scenario (at '" +
                               segment + "'; available: " + join_names(keys) + ")");
        }
        cursor = &(*cursor)[segment];
    }
}

} // namespace

SweepResult sweep(const Scenario& base, const std::vector<SweepAxis>& axes,
                  const TechnologyCatalog& catalog) {
    SweepResult out;
    out.axes = axes;
    json base_doc = scenario_to_json(base);

    for (const auto& axis : axes) {
        if (axis.values.empty()) {
            throw config_error("sweep axis '" + axis.path + "': at least one value is required");
        }
        require_path(base_doc, axis.path);
    }

    size_t total = 1;
    for (const auto& axis : axes) total *= axis.values.size();

    for (size_t flat = 0; flat < total; ++flat) {
        // Row-major: the last axis varies fastest.
        SweepCell cell;
        cell.assignment = json::object();
        json doc = base_doc;
        size_t remainder = flat;
        for (size_t a = axes.size(); a-- > 0;) {
            size_t idx = remainder % axes[a].values.size();
            remainder /= axes[a].values.size();
            set_by_path(doc, axes[a].path, axes[a].values[idx]);
            cell.assignment[axes[a].path] = axes[a].values[idx];
        }
        try {
            Scenario patched = parse_scenario(doc, base.name);
            cell.report = evaluate(patched, catalog);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
        out.cells.push_back(std::move(cell));
    }
    return out;
}

std::string deployment_name(Deployment d) {
    return d == Deployment::Orbital ? "orbital" : "terrestrial";
}

} // namespace llmspace
