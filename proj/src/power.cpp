#include "llmspace/power.hpp"

#include <algorithm>

#include "llmspace/errors.hpp"

namespace llmspace {

namespace {

// Comparisons tolerate rounding from the sizing chain: systems sized to meet
// a constraint with equality must not flip infeasible by a few ulps.
bool at_least(double lhs, double rhs) {
    return lhs >= rhs - 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

} // namespace

PowerBudget daily_budget(const SizedPeripheral& solar, const SizedPeripheral& battery,
                         const OrbitTiming& timing, double demand_kw, double dod,
                         double battery_round_trip_eff) {
    if (solar.kind != PeripheralKind::SOLAR || battery.kind != PeripheralKind::BATTERY) {
        throw domain_error("daily budget: expects a sized solar array and a sized battery");
    }
    if (!(dod > 0 && dod <= 1)) {
        throw domain_error("daily budget: depth of discharge must be in (0,1]");
    }
    if (!(battery_round_trip_eff > 0 && battery_round_trip_eff <= 1)) {
        throw domain_error("daily budget: battery round-trip efficiency must be in (0,1]");
    }
    double gen_kw = solar.gen_power_kw;
    double cap_kwh = battery.sizing;

    PowerBudget b;
    b.solar_daily_kwh = gen_kw * timing.cycles_per_day * (timing.sunlit_minutes / 60.0);
    b.battery_daily_kwh = timing.cycles_per_day * cap_kwh * dod;
    b.demand_daily_kwh = demand_kw * 24.0;
    b.slack_kwh = b.solar_daily_kwh - b.demand_daily_kwh;

    bool sunlit_ok = at_least(gen_kw * timing.sunlit_minutes,
                              demand_kw * (timing.sunlit_minutes +
                                           timing.eclipse_minutes / battery_round_trip_eff));
    bool eclipse_ok = at_least(cap_kwh * dod, demand_kw * timing.eclipse_minutes / 60.0);
    b.feasible = sunlit_ok && eclipse_ok;
    return b;
}

} // namespace llmspace
