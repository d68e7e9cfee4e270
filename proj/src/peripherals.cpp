#include "llmspace/peripherals.hpp"

#include <cmath>

#include "llmspace/errors.hpp"
#include "llmspace/json_util.hpp"

namespace llmspace {

std::vector<std::string> OrbitTiming::validate() const {
    if (!(cycles_per_day > 0) || !(sunlit_minutes > 0) || !(eclipse_minutes > 0)) {
        throw domain_error("orbit timing: cycles_per_day, sunlit_minutes, and eclipse_minutes "
                           "must all be positive");
    }
    if (cycles_per_day * period_minutes() > 1440.0 + 1e-9) {
        throw domain_error("orbit timing: " + format_double(cycles_per_day) + " cycles of " +
                           format_double(period_minutes()) + " min exceed one day");
    }
    std::vector<std::string> notes;
    if (period_minutes() < 85.0 || period_minutes() > 105.0) {
        notes.push_back("orbit period " + format_double(period_minutes()) +
                        " min is outside the typical LEO range of 85-105 min");
    }
    return notes;
}

void ThermalEnvironment::validate() const {
    if (!(background_temp_k >= 0)) {
        throw domain_error("thermal environment: background temperature must be >= 0 K");
    }
    if (!(radiator_temp_k > background_temp_k)) {
        throw domain_error("thermal environment: radiator temperature " +
                           format_double(radiator_temp_k) +
                           " K must exceed background temperature " +
                           format_double(background_temp_k) + " K; no net radiation is possible");
    }
    if (!(sigma > 0)) {
        throw domain_error("thermal environment: sigma must be positive");
    }
}

SizedPeripheral size_solar(double demand_kw, const OrbitTiming& timing, const SolarTech& tech,
                           double isi_w_per_m2, SizingPolicy policy,
                           double battery_round_trip_eff) {
    if (!(demand_kw > 0)) {
        throw domain_error("solar sizing: demand must be positive, got " +
                           format_double(demand_kw) + " kW");
    }
    if (!(isi_w_per_m2 > 0)) {
        throw domain_error("solar sizing: irradiance must be positive");
    }
    if (!(battery_round_trip_eff > 0 && battery_round_trip_eff <= 1)) {
        throw domain_error("solar sizing: battery round-trip efficiency must be in (0,1]");
    }
    double target_kw = demand_kw;
    if (policy == SizingPolicy::RechargeAware) {
        // The array must also replace the eclipse draw during the sunlit leg,
        // including what the battery loses in the round trip.
        target_kw = demand_kw *
                    (timing.sunlit_minutes + timing.eclipse_minutes / battery_round_trip_eff) /
                    timing.sunlit_minutes;
    }
    double area_m2 = target_kw * 1000.0 / (isi_w_per_m2 * tech.efficiency);
    SizedPeripheral p;
    p.kind = PeripheralKind::SOLAR;
    p.tech_name = tech.name;
    p.sizing = area_m2;
    p.mass_kg = tech.areal_density_kg_per_m2 * area_m2;
    p.manu_carbon_kg = tech.manu_intensity_kg_per_m2 * area_m2;
    p.gen_power_kw = isi_w_per_m2 * area_m2 * tech.efficiency / 1000.0;
    return p;
}

SizedPeripheral size_battery(double demand_kw, const OrbitTiming& timing, const BatteryTech& tech,
                             double dod) {
    if (!(demand_kw > 0)) {
        throw domain_error("battery sizing: demand must be positive, got " +
                           format_double(demand_kw) + " kW");
    }
    if (!(dod > 0 && dod <= 1)) {
        throw domain_error("battery sizing: depth of discharge must be in (0,1], got " +
                           format_double(dod));
    }
    double capacity_kwh = demand_kw * (timing.eclipse_minutes / 60.0) / dod;
    SizedPeripheral p;
    p.kind = PeripheralKind::BATTERY;
    p.tech_name = tech.name;
    p.sizing = capacity_kwh;
    p.mass_kg = tech.specific_mass_kg_per_kwh * capacity_kwh;
    p.manu_carbon_kg = tech.manu_intensity_kg_per_kwh * capacity_kwh;
    return p;
}

SizedPeripheral size_radiator(double heat_load_kw, const RadiatorTech& tech,
                              const ThermalEnvironment& env) {
    if (!(heat_load_kw > 0)) {
        throw domain_error("radiator sizing: heat load must be positive, got " +
                           format_double(heat_load_kw) + " kW");
    }
    env.validate();
    double t4 = std::pow(env.radiator_temp_k, 4) - std::pow(env.background_temp_k, 4);
    double flux_w_per_m2 = tech.emissivity * env.sigma * t4;
    double area_m2 = heat_load_kw * 1000.0 / flux_w_per_m2;
    SizedPeripheral p;
    p.kind = PeripheralKind::RADIATOR;
    p.tech_name = tech.name;
    p.sizing = area_m2;
    p.mass_kg = tech.areal_density_kg_per_m2 * area_m2;
    p.manu_carbon_kg = tech.manu_intensity_kg_per_kg * p.mass_kg;
    return p;
}

std::string sizing_policy_name(SizingPolicy policy) {
    return policy == SizingPolicy::DemandMatch ? "demand_match" : "recharge_aware";
}

} // namespace llmspace
