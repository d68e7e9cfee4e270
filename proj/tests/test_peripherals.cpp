#include <doctest.h>

#include <random>

#include "llmspace/peripherals.hpp"

using namespace llmspace;

namespace {

// Independent sizing oracles: direct evaluation of the closed-form relations,
// kept separate from the implementation under test.
double oracle_solar_area(double demand_kw, double isi, double eta) {
    return demand_kw * 1000.0 / (isi * eta);
}

double oracle_battery_cap(double demand_kw, double eclipse_min, double dod) {
    return demand_kw * (eclipse_min / 60.0) / dod;
}

double oracle_radiator_area(double heat_kw, double emissivity, double t, double t_bg) {
    double flux = emissivity * kStefanBoltzmann * (t * t * t * t - t_bg * t_bg * t_bg * t_bg);
    return heat_kw * 1000.0 / flux;
}

} // namespace

TEST_SUITE("peripherals") {

TEST_CASE("solar sizing matches the direct relation for Si at 10 kW") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto sized = size_solar(10.0, timing, cat.solar("Si"));

    double area = oracle_solar_area(10.0, kIsiWPerM2, 0.17); // 43.0311...
    CHECK(sized.sizing == doctest::Approx(area).epsilon(1e-12));
    CHECK(sized.sizing == doctest::Approx(43.0311).epsilon(1e-4));
    CHECK(sized.manu_carbon_kg == doctest::Approx(80.0 * area).epsilon(1e-12));
    CHECK(sized.manu_carbon_kg == doctest::Approx(3442.49).epsilon(1e-4));
    CHECK(sized.mass_kg == doctest::Approx(43.0311).epsilon(1e-4));
}

TEST_CASE("solar sizing is linear in demand") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto one = size_solar(10.0, timing, cat.solar("Si"));
    auto two = size_solar(20.0, timing, cat.solar("Si"));
    CHECK(two.sizing == doctest::Approx(2.0 * one.sizing).epsilon(1e-12));
    CHECK(two.mass_kg == doctest::Approx(2.0 * one.mass_kg).epsilon(1e-12));
    CHECK(two.manu_carbon_kg == doctest::Approx(2.0 * one.manu_carbon_kg).epsilon(1e-12));
    CHECK(two.gen_power_kw == doctest::Approx(2.0 * one.gen_power_kw).epsilon(1e-12));
}

TEST_CASE("multi-junction shrinks the array but costs more per area") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto sized = size_solar(10.0, timing, cat.solar("multi-junction"));
    CHECK(sized.sizing == doctest::Approx(14.6306).epsilon(1e-4));
    CHECK(sized.manu_carbon_kg == doctest::Approx(2633.5).epsilon(1e-3));
    CHECK(sized.mass_kg == doctest::Approx(17.5567).epsilon(1e-4));
}

TEST_CASE("sized array reproduces its target power") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    for (const auto& name : cat.names("solar")) {
        auto sized = size_solar(7.3, timing, cat.solar(name));
        double regenerated = kIsiWPerM2 * sized.sizing * cat.solar(name).efficiency / 1000.0;
        CHECK(regenerated == doctest::Approx(7.3).epsilon(1e-9));
        CHECK(sized.gen_power_kw == doctest::Approx(7.3).epsilon(1e-9));
    }
}

TEST_CASE("recharge-aware policy scales the array by the orbit duty") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing; // 60 sunlit / 35 eclipse
    auto matched = size_solar(10.0, timing, cat.solar("Si"), kIsiWPerM2,
                              SizingPolicy::DemandMatch);
    auto aware = size_solar(10.0, timing, cat.solar("Si"), kIsiWPerM2,
                            SizingPolicy::RechargeAware);
    CHECK(aware.gen_power_kw == doctest::Approx(10.0 * 95.0 / 60.0).epsilon(1e-12));
    CHECK(aware.sizing / matched.sizing == doctest::Approx(95.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("battery sizing carries the eclipse load at the given discharge depth") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto sized = size_battery(10.0, timing, cat.battery("NMC"), 0.8);
    CHECK(sized.sizing == doctest::Approx(oracle_battery_cap(10, 35, 0.8)).epsilon(1e-12));
    CHECK(sized.sizing == doctest::Approx(7.29167).epsilon(1e-5));
    CHECK(sized.manu_carbon_kg == doctest::Approx(583.333).epsilon(1e-5));
    CHECK(sized.mass_kg == doctest::Approx(32.8125).epsilon(1e-5));
}

TEST_CASE("full discharge removes the derating") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto sized = size_battery(10.0, timing, cat.battery("NMC"), 1.0);
    CHECK(sized.sizing == doctest::Approx(5.83333).epsilon(1e-5));
}

TEST_CASE("hardened battery at 20 kW") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    auto sized = size_battery(20.0, timing, cat.battery("rad-hard"), 0.8);
    CHECK(sized.sizing == doctest::Approx(14.5833).epsilon(1e-4));
    CHECK(sized.manu_carbon_kg == doctest::Approx(1458.33).epsilon(1e-4));
    CHECK(sized.mass_kg == doctest::Approx(80.2083).epsilon(1e-4));
}

TEST_CASE("battery rejects bad discharge depths") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    CHECK_THROWS_AS(size_battery(10.0, timing, cat.battery("NMC"), 0.0), Error);
    CHECK_THROWS_AS(size_battery(10.0, timing, cat.battery("NMC"), 1.2), Error);
    CHECK_THROWS_AS(size_battery(-1.0, timing, cat.battery("NMC"), 0.8), Error);
}

TEST_CASE("radiator sizing matches the radiation balance at defaults") {
    auto cat = TechnologyCatalog::builtin();
    ThermalEnvironment env; // 236.4 K against 3 K
    auto sized = size_radiator(10.0, cat.radiator("honeycomb"), env);
    double area = oracle_radiator_area(10.0, 0.95, 236.4, 3.0);
    CHECK(sized.sizing == doctest::Approx(area).epsilon(1e-12));
    CHECK(sized.sizing == doctest::Approx(59.4394).epsilon(1e-4));
    CHECK(sized.mass_kg == doctest::Approx(166.430).epsilon(1e-4));
    CHECK(sized.manu_carbon_kg == doctest::Approx(2296.74).epsilon(1e-4));
}

TEST_CASE("a 3 K background is indistinguishable from empty space") {
    auto cat = TechnologyCatalog::builtin();
    ThermalEnvironment cold;
    cold.background_temp_k = 0.0;
    ThermalEnvironment cmb;
    cmb.background_temp_k = 3.0;
    auto a = size_radiator(10.0, cat.radiator("honeycomb"), cold);
    auto b = size_radiator(10.0, cat.radiator("honeycomb"), cmb);
    CHECK(std::abs(a.sizing - b.sizing) / b.sizing < 1e-4);
}

TEST_CASE("radiator sizing is linear in heat load") {
    auto cat = TechnologyCatalog::builtin();
    ThermalEnvironment env;
    auto one = size_radiator(10.0, cat.radiator("honeycomb"), env);
    auto two = size_radiator(20.0, cat.radiator("honeycomb"), env);
    CHECK(two.sizing == doctest::Approx(2.0 * one.sizing).epsilon(1e-12));
    CHECK(two.mass_kg == doctest::Approx(2.0 * one.mass_kg).epsilon(1e-12));
    CHECK(two.manu_carbon_kg == doctest::Approx(2.0 * one.manu_carbon_kg).epsilon(1e-12));
}

TEST_CASE("degenerate thermal environments are rejected") {
    auto cat = TechnologyCatalog::builtin();
    ThermalEnvironment env;
    env.radiator_temp_k = 3.0;
    env.background_temp_k = 3.0;
    CHECK_THROWS_WITH_AS(size_radiator(10.0, cat.radiator("honeycomb"), env),
                         doctest::Contains("exceed"), Error);
    env.background_temp_k = -1.0;
    CHECK_THROWS_AS(size_radiator(10.0, cat.radiator("honeycomb"), env), Error);
}

TEST_CASE("all sizers are homogeneous of degree one") {
    auto cat = TechnologyCatalog::builtin();
    OrbitTiming timing;
    ThermalEnvironment env;
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> demand_dist(0.01, 100.0);
    std::uniform_real_distribution<double> k_dist(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        double demand = demand_dist(rng);
        double k = k_dist(rng);
        auto s1 = size_solar(demand, timing, cat.solar("GaAs"));
        auto s2 = size_solar(k * demand, timing, cat.solar("GaAs"));
        CHECK(s2.manu_carbon_kg == doctest::Approx(k * s1.manu_carbon_kg).epsilon(1e-12));
        auto b1 = size_battery(demand, timing, cat.battery("LFP"), 0.8);
        auto b2 = size_battery(k * demand, timing, cat.battery("LFP"), 0.8);
        CHECK(b2.mass_kg == doctest::Approx(k * b1.mass_kg).epsilon(1e-12));
        auto r1 = size_radiator(demand, cat.radiator("heat-pipe"), env);
        auto r2 = size_radiator(k * demand, cat.radiator("heat-pipe"), env);
        CHECK(r2.sizing == doctest::Approx(k * r1.sizing).epsilon(1e-12));
    }
}

TEST_CASE("radiator area falls as emissivity or temperature rises") {
    auto cat = TechnologyCatalog::builtin();
    // Across catalog entries ordered by emissivity.
    ThermalEnvironment env;
    double prev_area = 1e300;
    for (const auto& name : {"passive", "honeycomb", "heat-pipe"}) {
        auto sized = size_radiator(10.0, cat.radiator(name), env);
        CHECK(sized.sizing < prev_area);
        prev_area = sized.sizing;
    }
    // Across a temperature grid.
    prev_area = 1e300;
    for (double t = 200.0; t <= 320.0; t += 10.0) {
        ThermalEnvironment e;
        e.radiator_temp_k = t;
        auto sized = size_radiator(10.0, cat.radiator("honeycomb"), e);
        CHECK(sized.sizing < prev_area);
        prev_area = sized.sizing;
    }
}

TEST_CASE("orbit timing flags unusual periods without rejecting them") {
    OrbitTiming typical;
    CHECK(typical.validate().empty());

    OrbitTiming low;
    low.sunlit_minutes = 50;
    low.eclipse_minutes = 30;
    low.cycles_per_day = 18;
    CHECK(low.validate().size() == 1);

    OrbitTiming impossible;
    impossible.cycles_per_day = 20;
    CHECK_THROWS_WITH_AS(impossible.validate(), doctest::Contains("exceed one day"), Error);
}

} // TEST_SUITE
