// Acceptance suite: every release gate in one binary, one verdict line per
// criterion. Exits nonzero when any criterion fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "llmspace/validate.hpp"

using namespace llmspace;

namespace {

int g_failures = 0;

void verdict(int number, bool pass, const std::string& description) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << description
              << "\n";
    if (!pass) ++g_failures;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LLMSPACE_BIN_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string describe_rows(const ValidationResult& result) {
    std::string out;
    for (const auto& row : result.rows) {
        if (row.checked && !row.pass) {
            out += " [" + row.component + " " + row.metric + " off by " +
                   format_double(row.delta_frac * 100) + "%]";
        }
    }
    return out;
}

// 1 + 2: reproduction of the reference breakdown, itemized for the COTS
// build, total-only for the hardened build, each within a second.
void criterion_1_2(const TechnologyCatalog& catalog) {
    ValidationResult cots = run_validation("cots", catalog);
    auto report = evaluate(builtin_scenarios().at("starlink_v1_cots"), catalog);
    bool catalog_mode = false;
    for (const auto& item : report.items) {
        if (item.component == "computing hardware") {
            catalog_mode = item.mode == CarbonMode::CATALOG;
        }
    }
    verdict(1, cots.pass && catalog_mode && cots.runtime_s < 1.0,
            "COTS build reproduces the reference breakdown per-row, computing row in catalog "
            "mode (runtime " + format_double(cots.runtime_s) + " s)" + describe_rows(cots));

    ValidationResult hard = run_validation("radhard", catalog);
    verdict(2, hard.pass && hard.runtime_s < 1.0,
            "hardened build reproduces the reference total within 5% (runtime " +
                format_double(hard.runtime_s) + " s)" + describe_rows(hard));
}

void criterion_3(const TechnologyCatalog& catalog) {
    auto hard = evaluate(builtin_scenarios().at("starlink_v1_radhard"), catalog);
    auto opt = evaluate(builtin_scenarios().at("starlink_v1_radopt"), catalog);
    double reduction = 1.0 - opt.embodied_total_kg / hard.embodied_total_kg;
    verdict(3, reduction >= 0.05 && reduction <= 0.09,
            "peripheral-optimized build cuts embodied carbon by " +
                format_double(reduction * 100) + "% (band 5-9%)");
}

void criterion_4(const TechnologyCatalog& catalog) {
    auto clean = evaluate(builtin_scenarios().at("terrestrial_clean"), catalog);
    auto hard = evaluate(builtin_scenarios().at("starlink_v1_radhard"), catalog);
    auto dirty = evaluate(builtin_scenarios().at("terrestrial_dirty"), catalog);
    bool pass = true;
    for (int years = 3; years <= 10; ++years) {
        double c = annualize(clean, years);
        double h = annualize(hard, years);
        double d = annualize(dirty, years);
        pass = pass && c < h && h < d;
    }
    verdict(4, pass, "hardened orbital annualized emissions sit between the clean and dirty "
                     "grids over 3-10 yr");
}

void criterion_5(const TechnologyCatalog& catalog) {
    auto orbital = evaluate(builtin_scenarios().at("jetson_radhard"), catalog);
    auto clean = evaluate(builtin_scenarios().at("jetson_terrestrial_clean"), catalog);
    bool pass = true;
    for (int years = 1; years <= 10; ++years) {
        pass = pass && annualize(orbital, years) > annualize(clean, years);
    }
    verdict(5, pass, "small-accelerator orbital deployment exceeds the clean grid at every "
                     "lifetime 1-10 yr");
}

void criterion_6(const TechnologyCatalog& catalog) {
    bool pass = true;
    std::string offenders;
    for (const auto& [name, scenario] : builtin_scenarios()) {
        if (scenario.deployment != Deployment::Orbital) continue;
        auto report = evaluate(scenario, catalog);
        double prev = annualize(report, 1.0);
        for (int years = 2; years <= 10; ++years) {
            double cur = annualize(report, years);
            if (!(cur < prev)) {
                pass = false;
                offenders += " " + name;
                break;
            }
            prev = cur;
        }
    }
    verdict(6, pass, "annualized emissions fall strictly with lifetime for every orbital "
                     "scenario" + offenders);
}

void criterion_7(const TechnologyCatalog& catalog) {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> demand_dist(0.05, 50.0);
    std::uniform_real_distribution<double> sunlit_dist(55.0, 65.0);
    std::uniform_real_distribution<double> eclipse_dist(30.0, 35.0);
    std::uniform_real_distribution<double> dod_dist(0.2, 1.0);
    auto solar_names = catalog.names("solar");
    auto battery_names = catalog.names("battery");
    bool pass = true;
    for (int i = 0; i < 1000 && pass; ++i) {
        OrbitTiming timing;
        timing.sunlit_minutes = sunlit_dist(rng);
        timing.eclipse_minutes = eclipse_dist(rng);
        timing.cycles_per_day = 1440.0 / timing.period_minutes();
        double demand = demand_dist(rng);
        double dod = dod_dist(rng);
        const auto& solar_tech = catalog.solar(solar_names[i % solar_names.size()]);
        const auto& battery_tech = catalog.battery(battery_names[i % battery_names.size()]);
        for (auto policy : {SizingPolicy::DemandMatch, SizingPolicy::RechargeAware}) {
            auto solar = size_solar(demand, timing, solar_tech, kIsiWPerM2, policy);
            auto battery = size_battery(demand, timing, battery_tech, dod);
            PowerBudget b = daily_budget(solar, battery, timing, demand, dod);
            double solar_expected =
                solar.gen_power_kw * timing.cycles_per_day * (timing.sunlit_minutes / 60.0);
            double battery_expected = timing.cycles_per_day * battery.sizing * dod;
            pass = pass && std::abs(b.solar_daily_kwh - solar_expected) <= 1e-9 * solar_expected;
            pass = pass &&
                   std::abs(b.battery_daily_kwh - battery_expected) <= 1e-9 * battery_expected;
            if (policy == SizingPolicy::RechargeAware) {
                pass = pass && b.feasible;
            }
        }
    }
    verdict(7, pass, "daily-energy identities hold to 1e-9 and recharge-aware sizing stays "
                     "feasible over 1000 randomized systems");
}

void criterion_8(const TechnologyCatalog& catalog) {
    const ModelSpec& model = catalog.model("codellama-34b");
    const AcceleratorSpec& h100 = catalog.accelerator("h100_sxm");
    const AcceleratorSpec& a100 = catalog.accelerator("a100_sxm");
    bool latency_pass = true;
    bool decode_pass = true;
    for (const auto& [name, task] : catalog.tasks()) {
        auto fast = estimate_task(model, h100, task, 1);
        auto slow = estimate_task(model, a100, task, 1);
        latency_pass = latency_pass && slow.mean_case.ttft_s > fast.mean_case.ttft_s &&
                       slow.mean_case.tbt_s > fast.mean_case.tbt_s &&
                       slow.mean_case.e2e_s > fast.mean_case.e2e_s;
        if (task.gen_tokens.mean >= task.prompt_tokens.mean) {
            decode_pass = decode_pass && fast.mean_case.decode_j > fast.mean_case.prefill_j &&
                          slow.mean_case.decode_j > slow.mean_case.prefill_j;
        }
    }
    verdict(8, latency_pass && decode_pass,
            "the lower-bandwidth accelerator is slower on every task and generation-heavy "
            "tasks are decode-dominated");
}

void criterion_9(const TechnologyCatalog& catalog) {
    const ModelSpec& model = catalog.model("codellama-34b");
    bool pass = true;
    double worst = 1e300;
    for (const auto& accel_name : {"h100_sxm", "a100_sxm"}) {
        const AcceleratorSpec& accel = catalog.accelerator(accel_name);
        for (const auto& [name, task] : catalog.tasks()) {
            if (task.gen_tokens.mean < 16) continue;
            auto est = estimate_task(model, accel, task, 1);
            double inference = est.mean_case.prefill_j + est.mean_case.decode_j;
            double tx = transmission_energy_j(task.request_bytes, task.response_bytes);
            double ratio = inference / tx;
            worst = std::min(worst, ratio);
            pass = pass && ratio > 1e3;
        }
    }
    verdict(9, pass, "inference energy exceeds transmission energy by >1000x on every task "
                     "(worst ratio " + format_double(worst) + ")");
}

void criterion_10(const TechnologyCatalog& catalog) {
    auto resum = [](const CarbonReport& report) {
        double total = 0;
        for (const auto& item : report.items) total += item.manu_kg + item.launch_kg;
        return total;
    };
    bool pass = true;
    for (const auto& [name, scenario] : builtin_scenarios()) {
        auto report = evaluate(scenario, catalog);
        pass = pass && report.embodied_total_kg == resum(report);
    }

    std::mt19937 rng(77);
    auto pick = [&rng](const std::vector<std::string>& names) {
        std::uniform_int_distribution<size_t> d(0, names.size() - 1);
        return names[d(rng)];
    };
    std::uniform_real_distribution<double> dod_dist(0.3, 1.0);
    std::uniform_real_distribution<double> sunlit_dist(55.0, 65.0);
    std::uniform_real_distribution<double> eclipse_dist(30.0, 35.0);
    std::uniform_int_distribution<int> life_dist(1, 10);
    auto nodes = catalog.names("compute_node");
    auto solars = catalog.names("solar");
    auto batteries = catalog.names("battery");
    auto radiators = catalog.names("radiator");
    std::vector<std::string> hardened_presets = {"rad-hard", "rad-L", "rad-H"};
    int built = 0;
    for (int i = 0; i < 100; ++i) {
        Scenario s = builtin_scenarios().at("starlink_v1_cots");
        s.name = "random_" + std::to_string(i);
        s.node = pick(nodes);
        bool cots = i % 3 == 0;
        s.hardening_preset = cots ? "cots" : pick(hardened_presets);
        s.lifetime_years = cots ? 1 + (i % 2) : life_dist(rng);
        s.solar_tech = pick(solars);
        s.battery_tech = pick(batteries);
        s.radiator_tech = pick(radiators);
        s.sizing_policy = i % 2 ? SizingPolicy::RechargeAware : SizingPolicy::DemandMatch;
        s.dod = dod_dist(rng);
        s.timing.sunlit_minutes = sunlit_dist(rng);
        s.timing.eclipse_minutes = eclipse_dist(rng);
        s.timing.cycles_per_day = 1440.0 / s.timing.period_minutes();
        auto report = evaluate(s, catalog);
        pass = pass && report.embodied_total_kg == resum(report);
        ++built;
    }
    verdict(10, pass && built == 100,
            "independent item re-summation matches the embodied total bit-exactly on shipped "
            "plus 100 randomized scenarios");
}

void criterion_11() {
    const std::vector<std::string> commands = {
        "evaluate --scenario starlink_v1_cots --format json",
        "evaluate --scenario starlink_v1_radhard --format csv",
        "evaluate --scenario terrestrial_dirty",
        "compare --scenario terrestrial_clean --scenario starlink_v1_radhard --scenario "
        "terrestrial_dirty --format csv",
        "compare --scenario starlink_v1_radhard --scenario starlink_v1_radopt --format json",
        "workload --scenario starlink_v1_radhard --task all --format json",
        "workload --scenario a100_radhard --task omath --format csv",
        "sweep --scenario starlink_v1_radhard --axis lifetime_years=1,2,3,4,5 --format csv",
        "validate --format json",
        "catalog",
    };
    bool pass = true;
    std::string offender;
    for (const auto& cmd : commands) {
        auto first = run_cli(cmd);
        auto second = run_cli(cmd);
        bool same = first.exit_code == second.exit_code && first.output == second.output &&
                    !first.output.empty() && first.exit_code == 0;
        if (!same && offender.empty()) offender = " [" + cmd + "]";
        pass = pass && same;
    }
    verdict(11, pass, "every command is byte-identical across repeated runs" + offender);
}

} // namespace

int main() {
    auto catalog = TechnologyCatalog::builtin();
    criterion_1_2(catalog);
    criterion_3(catalog);
    criterion_4(catalog);
    criterion_5(catalog);
    criterion_6(catalog);
    criterion_7(catalog);
    criterion_8(catalog);
    criterion_9(catalog);
    criterion_10(catalog);
    criterion_11();
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << g_failures << " criterion(s) failed\n";
    }
    return g_failures;
}
