#pragma once

#include <string>
#include <vector>

#include "llmspace/catalog.hpp"

namespace llmspace {

/// Incident solar irradiance at Earth orbit, W/m2.
constexpr double kIsiWPerM2 = 1367.0;

/// Stefan-Boltzmann constant, W/(m2 K^4).
constexpr double kStefanBoltzmann = 5.670374419e-8;

constexpr double kDefaultDod = 0.8;

struct OrbitTiming {
    double cycles_per_day = 1440.0 / 95.0; // 95-minute orbit
    double sunlit_minutes = 60.0;
    double eclipse_minutes = 35.0;

    double period_minutes() const { return sunlit_minutes + eclipse_minutes; }

    /// Throws on impossible timing; returns advisory notes for unusual but
    /// acceptable values (period outside the typical LEO range).
    std::vector<std::string> validate() const;
};

struct ThermalEnvironment {
    double radiator_temp_k = 236.4;
    double background_temp_k = 3.0;
    double sigma = kStefanBoltzmann;

    void validate() const; // requires radiator_temp_k > background_temp_k >= 0
};

enum class PeripheralKind { SOLAR, BATTERY, RADIATOR };

enum class SizingPolicy {
    DemandMatch,   // array power equals the demand
    RechargeAware, // array additionally recharges the eclipse draw while sunlit
};

struct SizedPeripheral {
    PeripheralKind kind = PeripheralKind::SOLAR;
    std::string tech_name;
    double sizing = 0;        // area m2 for solar/radiator, capacity kWh for battery
    double mass_kg = 0;
    double manu_carbon_kg = 0;
    double gen_power_kw = 0;  // solar only: power produced by the sized array
};

/// Sizes a solar array for the given demand. The sizing policy fixes the
/// target array power; area follows from irradiance and efficiency, mass and
/// manufacturing carbon scale with area. The recharge-aware policy charges
/// battery losses to the array via the round-trip efficiency.
SizedPeripheral size_solar(double demand_kw, const OrbitTiming& timing, const SolarTech& tech,
                           double isi_w_per_m2 = kIsiWPerM2,
                           SizingPolicy policy = SizingPolicy::DemandMatch,
                           double battery_round_trip_eff = 1.0);

/// Sizes a battery to carry the demand through eclipse at the given depth of
/// discharge.
SizedPeripheral size_battery(double demand_kw, const OrbitTiming& timing, const BatteryTech& tech,
                             double dod = kDefaultDod);

/// Sizes a radiative cooling panel for the given heat load from the
/// Stefan-Boltzmann relation.
SizedPeripheral size_radiator(double heat_load_kw, const RadiatorTech& tech,
                              const ThermalEnvironment& env);

std::string sizing_policy_name(SizingPolicy policy);

} // namespace llmspace
