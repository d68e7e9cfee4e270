#include "llmspace/catalog.hpp"

namespace llmspace {

// Shipped defaults. Peripheral, process, memory, vehicle, and grid figures are
// published lifecycle-assessment and vehicle numbers; compute-node die areas,
// capacities, and workload statistics marked "public vendor specifications" or
// placeholder_stats are catalog data, not measured values.
const json& builtin_catalog_json() {
    static const json doc = json::parse(R"JSON(
{
  "solar": {
    "Si":             {"areal_density_kg_per_m2": 1.0, "efficiency": 0.17, "manu_intensity_kg_per_m2": 80.0},
    "GaAs":           {"areal_density_kg_per_m2": 1.1, "efficiency": 0.30, "manu_intensity_kg_per_m2": 130.0},
    "multi-junction": {"areal_density_kg_per_m2": 1.2, "efficiency": 0.50, "manu_intensity_kg_per_m2": 180.0}
  },
  "battery": {
    "LFP":      {"specific_mass_kg_per_kwh": 8.3, "manu_intensity_kg_per_kwh": 54.0,  "reference_cap_kwh": 0.4},
    "NMC":      {"specific_mass_kg_per_kwh": 4.5, "manu_intensity_kg_per_kwh": 80.0,  "reference_cap_kwh": 10.0},
    "rad-hard": {"specific_mass_kg_per_kwh": 5.5, "manu_intensity_kg_per_kwh": 100.0, "reference_cap_kwh": 10.0}
  },
  "radiator": {
    "passive":   {"areal_density_kg_per_m2": 2.7, "emissivity": 0.80, "manu_intensity_kg_per_kg": 12.0},
    "honeycomb": {"areal_density_kg_per_m2": 2.8, "emissivity": 0.95, "manu_intensity_kg_per_kg": 13.8},
    "heat-pipe": {"areal_density_kg_per_m2": 3.0, "emissivity": 0.98, "manu_intensity_kg_per_kg": 17.0}
  },
  "process": {
    "28nm": {"feature_size_nm": 28, "cpa_cots_kg_per_cm2": 0.9,  "cpa_radhard_kg_per_cm2": 1.8},
    "14nm": {"feature_size_nm": 14, "cpa_cots_kg_per_cm2": 1.2,  "cpa_radhard_kg_per_cm2": 2.4},
    "7nm":  {"feature_size_nm": 7,  "cpa_cots_kg_per_cm2": 2.15},
    "4nm":  {"feature_size_nm": 4,  "cpa_cots_kg_per_cm2": 3.0}
  },
  "memory": {
    "DDR4":     {"kind": "DDR",  "hardness": "COTS",     "cpa_kg_per_gb": 0.4},
    "HBM2":     {"kind": "HBM",  "hardness": "COTS",     "cpa_kg_per_gb": 1.8},
    "MRAM-DDR": {"kind": "DDR",  "hardness": "RAD_HARD", "cpa_kg_per_gb": 0.6},
    "MRAM-HBM": {"kind": "HBM",  "hardness": "RAD_HARD", "cpa_kg_per_gb": 2.3},
    "NAND":     {"kind": "NAND", "hardness": "COTS",     "cpa_kg_per_gb": 0.018},
    "rad-NAND": {"kind": "NAND", "hardness": "RAD_HARD", "cpa_kg_per_gb": 0.16}
  },
  "launch_vehicle": {
    "falcon9": {"per_launch_emission_kg": 330000.0, "payload_capacity_kg": 22800.0}
  },
  "comms": {
    "starlink_v1_bundle": {"mass_kg": 166.5, "manu_embodied_kg": 1630.0,
                           "description": "Starlink-V1 bus plus communication payload, aggregated"},
    "cubesat_rf":         {"mass_kg": 2.0, "manu_embodied_kg": 20.0,
                           "description": "CubeSat UHF/S-band RF payload, no separate bus"}
  },
  "grid": {
    "clean": {"intensity_g_per_kwh": 20.0},
    "dirty": {"intensity_g_per_kwh": 380.0}
  },
  "hardening": {
    "cots":     {"mode": "COTS",     "area_scale": 1.0,  "power_scale": 1.0, "lifetime_years": 2.0},
    "rad-hard": {"mode": "RAD_HARD", "area_scale": 15.0, "power_scale": 2.0, "lifetime_years": 10.0, "radhard_process": "14nm"},
    "rad-L":    {"mode": "RAD_HARD", "area_scale": 10.0, "power_scale": 1.5, "lifetime_years": 10.0, "radhard_process": "14nm"},
    "rad-H":    {"mode": "RAD_HARD", "area_scale": 20.0, "power_scale": 3.0, "lifetime_years": 10.0, "radhard_process": "14nm"}
  },
  "compute_node": {
    "dgx_h100": {
      "logic": [{"name": "gpu", "area_cm2": 8.14, "process": "4nm", "count": 8}],
      "memory": [{"tech": "HBM2", "capacity_gb": 640.0}, {"tech": "DDR4", "capacity_gb": 2048.0}],
      "storage_gb": 30720.0, "storage_tech": "NAND",
      "base_mass_kg": 130.0, "power_demand_kw": 10.0,
      "manu_override_cots_kg": 960.0, "manu_override_radhard_kg": 5160.0,
      "source": "public vendor specifications"
    },
    "dgx_a100": {
      "logic": [{"name": "gpu", "area_cm2": 8.26, "process": "7nm", "count": 8}],
      "memory": [{"tech": "HBM2", "capacity_gb": 320.0}, {"tech": "DDR4", "capacity_gb": 2048.0}],
      "storage_gb": 15360.0, "storage_tech": "NAND",
      "base_mass_kg": 130.0, "power_demand_kw": 11.0,
      "source": "public vendor specifications"
    },
    "jetson_nano": {
      "logic": [{"name": "soc", "area_cm2": 1.18, "process": "28nm", "count": 1}],
      "memory": [{"tech": "DDR4", "capacity_gb": 4.0}],
      "storage_gb": 16.0, "storage_tech": "NAND",
      "base_mass_kg": 2.0, "power_demand_kw": 0.01,
      "source": "public vendor specifications"
    }
  },
  "model": {
    "codellama-34b": {
      "param_count": 3.4e10, "layers": 48, "hidden_dim": 8192,
      "kv_heads": 8, "head_dim": 128, "bytes_per_param": 2
    }
  },
  "accelerator": {
    "h100_sxm": {"peak_flops": 9.89e14, "hbm_bandwidth_bytes_per_s": 3.35e12,
                 "compute_util": 0.5, "mem_util": 0.8, "node_power_kw": 10.0},
    "a100_sxm": {"peak_flops": 3.12e14, "hbm_bandwidth_bytes_per_s": 2.039e12,
                 "compute_util": 0.5, "mem_util": 0.8, "node_power_kw": 11.0}
  },
  "task": {
    "bank":    {"prompt_tokens": {"mean": 120,  "min": 40,   "max": 400},
                "gen_tokens":    {"mean": 20,   "min": 4,    "max": 60},
                "request_bytes": 480,   "response_bytes": 80,   "placeholder_stats": true},
    "bcode":   {"prompt_tokens": {"mean": 1100, "min": 300,  "max": 3000},
                "gen_tokens":    {"mean": 450,  "min": 100,  "max": 1200},
                "request_bytes": 4400,  "response_bytes": 1800, "placeholder_stats": true},
    "cfresol": {"prompt_tokens": {"mean": 300,  "min": 100,  "max": 800},
                "gen_tokens":    {"mean": 24,   "min": 8,    "max": 60},
                "request_bytes": 1200,  "response_bytes": 96,   "placeholder_stats": true},
    "macalc":  {"prompt_tokens": {"mean": 80,   "min": 30,   "max": 200},
                "gen_tokens":    {"mean": 150,  "min": 40,   "max": 400},
                "request_bytes": 320,   "response_bytes": 600,  "placeholder_stats": true},
    "mareas":  {"prompt_tokens": {"mean": 120,  "min": 50,   "max": 300},
                "gen_tokens":    {"mean": 250,  "min": 80,   "max": 600},
                "request_bytes": 480,   "response_bytes": 1000, "placeholder_stats": true},
    "paragen": {"prompt_tokens": {"mean": 140,  "min": 60,   "max": 350},
                "gen_tokens":    {"mean": 130,  "min": 50,   "max": 320},
                "request_bytes": 560,   "response_bytes": 520,  "placeholder_stats": true},
    "finan":   {"prompt_tokens": {"mean": 2600, "min": 800,  "max": 6000},
                "gen_tokens":    {"mean": 180,  "min": 60,   "max": 450},
                "request_bytes": 10400, "response_bytes": 720,  "placeholder_stats": true},
    "ifeval":  {"prompt_tokens": {"mean": 180,  "min": 60,   "max": 500},
                "gen_tokens":    {"mean": 380,  "min": 100,  "max": 900},
                "request_bytes": 720,   "response_bytes": 1520, "placeholder_stats": true},
    "ensum":   {"prompt_tokens": {"mean": 9000, "min": 3000, "max": 16000},
                "gen_tokens":    {"mean": 320,  "min": 100,  "max": 800},
                "request_bytes": 36000, "response_bytes": 1280, "placeholder_stats": true},
    "mmlup":   {"prompt_tokens": {"mean": 900,  "min": 300,  "max": 2000},
                "gen_tokens":    {"mean": 220,  "min": 60,   "max": 600},
                "request_bytes": 3600,  "response_bytes": 880,  "placeholder_stats": true},
    "omath":   {"prompt_tokens": {"mean": 260,  "min": 100,  "max": 700},
                "gen_tokens":    {"mean": 850,  "min": 200,  "max": 2000},
                "request_bytes": 1040,  "response_bytes": 3400, "placeholder_stats": true}
  }
}
)JSON");
    return doc;
}

} // namespace llmspace
