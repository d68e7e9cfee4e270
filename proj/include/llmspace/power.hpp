#pragma once

#include "llmspace/peripherals.hpp"

namespace llmspace {

/// Daily energy flows of the power system and its two feasibility
/// constraints: the array must carry the load and recharge the battery while
/// sunlit, and the battery must carry the load through eclipse.
struct PowerBudget {
    double solar_daily_kwh = 0;   // array output per day
    double battery_daily_kwh = 0; // energy cycled through the battery per day
    double demand_daily_kwh = 0;
    bool feasible = false;
    double slack_kwh = 0;         // solar_daily_kwh - demand_daily_kwh
};

/// Charging losses land on the sunlit constraint: the array must deliver the
/// eclipse draw divided by the round-trip efficiency on top of the load.
PowerBudget daily_budget(const SizedPeripheral& solar, const SizedPeripheral& battery,
                         const OrbitTiming& timing, double demand_kw, double dod,
                         double battery_round_trip_eff = 1.0);

} // namespace llmspace
