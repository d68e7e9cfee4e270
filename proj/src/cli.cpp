#include "llmspace/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "llmspace/errors.hpp"
#include "llmspace/validate.hpp"

namespace llmspace {

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;

std::string fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
    return buf;
}

std::string pct(double frac) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.2f%%", frac * 100.0);
    return buf;
}

struct Context {
    TechnologyCatalog catalog;
    json catalog_json; // resolved, for the inputs digest
    std::string format = "table";
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

/// Envelope emission for --format json. The digest covers the resolved
/// catalog plus every command input, so equal inputs hash equally and any
/// change shows up.
void emit_json(Context& ctx, const std::string& command, const json& params,
               const json& results) {
    json resolved = {{"catalog", ctx.catalog_json}, {"command", command}, {"params", params}};
    json envelope = {{"schema_version", kSchemaVersion},
                     {"command", command},
                     {"inputs_digest", fnv1a64_hex(resolved.dump())},
                     {"results", results}};
    *ctx.out << envelope.dump(2) << "\n";
}

void emit_csv(Context& ctx, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto& out = *ctx.out;
    for (size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << csv_field(header[i]);
    }
    out << "\r\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << "\r\n";
    }
}

json items_to_json(const CarbonReport& report) {
    json items = json::array();
    for (const auto& item : report.items) {
        items.push_back({{"component", item.component},
                         {"manu_kg", item.manu_kg},
                         {"launch_kg", item.launch_kg},
                         {"mode", carbon_mode_name(item.mode)}});
    }
    return items;
}

json report_to_json(const CarbonReport& report) {
    json r = {{"scenario", report.scenario},
              {"deployment", deployment_name(report.deployment)},
              {"lifetime_years", report.lifetime_years},
              {"power_kw", report.power_kw},
              {"items", items_to_json(report)},
              {"embodied_total_kg", report.embodied_total_kg},
              {"operational_annual_kg_per_year", report.operational_annual_kg},
              {"annualized_kg_per_year", report.annualized_kg},
              {"warnings", report.warnings}};
    if (report.power_budget) {
        const auto& b = *report.power_budget;
        r["power_budget"] = {{"solar_daily_kwh", b.solar_daily_kwh},
                             {"battery_daily_kwh", b.battery_daily_kwh},
                             {"demand_daily_kwh", b.demand_daily_kwh},
                             {"feasible", b.feasible},
                             {"slack_kwh", b.slack_kwh}};
    }
    return r;
}

void print_report_table(Context& ctx, const CarbonReport& report) {
    auto& out = *ctx.out;
    out << "scenario: " << report.scenario << " (" << deployment_name(report.deployment)
        << ")\n";
    out << "node power: " << format_double(report.power_kw)
        << " kW, lifetime: " << format_double(report.lifetime_years) << " yr\n\n";
    out << "  component            manu_kg      launch_kg    mode\n";
    for (const auto& item : report.items) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-20s %-12s %-12s %s\n", item.component.c_str(),
                      fixed(item.manu_kg, 3).c_str(), fixed(item.launch_kg, 3).c_str(),
                      carbon_mode_name(item.mode).c_str());
        out << line;
    }
    out << "\n";
    out << "  embodied total:     " << fixed(report.embodied_total_kg, 3) << " kg ("
        << fixed(report.embodied_total_kg / 1000.0, 3) << " t)\n";
    out << "  operational:        " << fixed(report.operational_annual_kg, 3) << " kg/yr\n";
    out << "  annualized:         " << fixed(report.annualized_kg, 3) << " kg/yr\n";
    if (report.power_budget) {
        const auto& b = *report.power_budget;
        out << "  power budget:       solar " << fixed(b.solar_daily_kwh, 2)
            << " kWh/day, battery " << fixed(b.battery_daily_kwh, 2) << " kWh/day, demand "
            << fixed(b.demand_daily_kwh, 2) << " kWh/day\n";
        out << "  feasible:           " << (b.feasible ? "yes" : "no") << " (slack "
            << fixed(b.slack_kwh, 2) << " kWh/day)\n";
    }
    for (const auto& w : report.warnings) {
        out << "  warning: " << w << "\n";
    }
}

int cmd_evaluate(Context& ctx, const std::string& scenario_ref, bool strict_power) {
    Scenario scenario = resolve_scenario(scenario_ref);
    CarbonReport report = evaluate(scenario, ctx.catalog);

    if (ctx.format == "json") {
        json params = {{"scenario", scenario_to_json(scenario)}, {"strict_power", strict_power}};
        emit_json(ctx, "evaluate", params, report_to_json(report));
    } else if (ctx.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        double manu_sum = 0, launch_sum = 0;
        for (const auto& item : report.items) {
            manu_sum += item.manu_kg;
            launch_sum += item.launch_kg;
            rows.push_back({item.component, format_double(item.manu_kg),
                            format_double(item.launch_kg), carbon_mode_name(item.mode)});
        }
        rows.push_back({"total", format_double(manu_sum), format_double(launch_sum), ""});
        emit_csv(ctx, {"component", "manu_kg", "launch_kg", "mode"}, rows);
    } else {
        print_report_table(ctx, report);
    }

    if (strict_power && report.power_budget && !report.power_budget->feasible) {
        *ctx.err << "power budget infeasible for scenario '" << scenario.name << "'\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

int cmd_compare(Context& ctx, const std::vector<std::string>& refs, int lifetime_lo,
                int lifetime_hi) {
    if (refs.size() < 2) {
        throw domain_error("compare: at least two --scenario flags are required");
    }
    std::vector<Scenario> scenarios;
    scenarios.reserve(refs.size());
    for (const auto& ref : refs) {
        scenarios.push_back(resolve_scenario(ref));
    }
    Comparison cmp = compare(scenarios, ctx.catalog, lifetime_lo, lifetime_hi);

    if (ctx.format == "json") {
        json rows = json::array();
        for (const auto& row : cmp.rows) {
            rows.push_back({{"scenario", row.scenario},
                            {"lifetime_years", row.lifetime_years},
                            {"annualized_kg", row.annualized_kg}});
        }
        json entries = json::array();
        for (const auto& e : cmp.entries) {
            entries.push_back({{"scenario", e.scenario},
                               {"embodied_total_kg", e.embodied_total_kg},
                               {"operational_annual_kg_per_year", e.operational_annual_kg},
                               {"max_lifetime_years", e.max_lifetime_years}});
        }
        json ratios = json::array();
        for (const auto& r : cmp.ratios) {
            ratios.push_back({{"a", r.a}, {"b", r.b}, {"embodied_ratio", r.embodied_ratio}});
        }
        json params = {{"scenarios", json::array()},
                       {"lifetime_lo", lifetime_lo},
                       {"lifetime_hi", lifetime_hi}};
        for (const auto& s : scenarios) params["scenarios"].push_back(scenario_to_json(s));
        emit_json(ctx, "compare", params,
                  {{"entries", entries}, {"rows", rows}, {"embodied_ratios", ratios}});
    } else if (ctx.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : cmp.rows) {
            rows.push_back({row.scenario, format_double(row.lifetime_years),
                            format_double(row.annualized_kg)});
        }
        emit_csv(ctx, {"scenario", "lifetime_years", "annualized_kg"}, rows);
    } else {
        auto& out = *ctx.out;
        out << "annualized emissions, kg/yr (lifetime " << lifetime_lo << "-" << lifetime_hi
            << " yr)\n\n";
        for (const auto& e : cmp.entries) {
            out << "  " << e.scenario << ": embodied " << fixed(e.embodied_total_kg, 1)
                << " kg, operational " << fixed(e.operational_annual_kg, 1) << " kg/yr\n";
        }
        out << "\n  scenario  lifetime_years  annualized_kg\n";
        for (const auto& row : cmp.rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-24s %2d  %s\n", row.scenario.c_str(),
                          static_cast<int>(row.lifetime_years),
                          fixed(row.annualized_kg, 3).c_str());
            out << line;
        }
        out << "\n  embodied ratios\n";
        for (const auto& r : cmp.ratios) {
            out << "  " << r.a << " / " << r.b << " = " << fixed(r.embodied_ratio, 4) << "\n";
        }
    }
    return kExitOk;
}

int cmd_workload(Context& ctx, const std::string& scenario_ref, const std::string& task_arg,
                 const std::string& trace_path, double prompt_override, double gen_override,
                 double j_per_bit) {
    Scenario scenario = resolve_scenario(scenario_ref);
    if (!scenario.workload) {
        throw config_error("scenario '" + scenario.name +
                           "' declares no workload (model/accelerator); add a workload block");
    }
    const ModelSpec& model = ctx.catalog.model(scenario.workload->model);
    AcceleratorSpec accel = ctx.catalog.accelerator(scenario.workload->accelerator);

    CarbonReport report = evaluate(scenario, ctx.catalog);
    // Phase energy follows the deployed node's demand, not the accelerator
    // entry's default.
    accel.node_power_kw = report.power_kw;

    std::optional<Calibration> calibration;
    std::optional<TaskProfile> trace_profile;
    std::string trace_content;
    if (!trace_path.empty()) {
        std::ifstream in(trace_path, std::ios::binary);
        if (!in) throw io_error("cannot open trace file: " + trace_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        trace_content = buf.str();
        auto records = read_trace_file(trace_path);
        TraceIngest ingest = ingest_trace(records, model, accel, "trace");
        calibration = ingest.calibration;
        trace_profile = ingest.profile;
    }

    // Task selection: an explicit name, or every task the scenario names
    // ("all" expands to the whole catalog).
    std::vector<std::string> task_names;
    if (task_arg == "all") {
        bool expand_all = scenario.workload->tasks.empty();
        for (const auto& t : scenario.workload->tasks) {
            if (t == "all") expand_all = true;
        }
        if (expand_all) {
            for (const auto& [name, t] : ctx.catalog.tasks()) task_names.push_back(name);
        } else {
            task_names = scenario.workload->tasks;
        }
    } else {
        task_names.push_back(task_arg);
    }

    struct TaskRow {
        std::string task;
        std::string stats_source;
        TaskProfile profile;
        InferenceEstimate mean;
        RequestCarbon carbon;
    };
    std::vector<TaskRow> rows;
    for (const auto& name : task_names) {
        TaskRow row;
        row.task = name;
        TaskProfile profile = ctx.catalog.task(name);
        if (!profile.has_stats) {
            if (trace_profile) {
                TokenStats p = trace_profile->prompt_tokens;
                TokenStats g = trace_profile->gen_tokens;
                profile.prompt_tokens = p;
                profile.gen_tokens = g;
                profile.request_bytes = trace_profile->request_bytes;
                profile.response_bytes = trace_profile->response_bytes;
                profile.has_stats = true;
                row.stats_source = "trace";
            } else {
                throw config_error("task '" + name +
                                   "' has no token statistics; supply a measured trace via "
                                   "--trace to ingest them");
            }
        } else {
            row.stats_source = profile.placeholder_stats ? "placeholder" : "catalog";
        }
        if (prompt_override > 0) {
            profile.prompt_tokens = {prompt_override, prompt_override, prompt_override};
        }
        if (gen_override > 0) {
            profile.gen_tokens = {gen_override, gen_override, gen_override};
        }
        TaskEstimate est = estimate_task(model, accel, profile, 1);
        InferenceEstimate mean = est.mean_case;
        mean.tx_j = transmission_energy_j(profile.request_bytes, profile.response_bytes,
                                          j_per_bit);
        if (calibration) {
            double g = std::max(1.0, profile.gen_tokens.mean);
            double tx = mean.tx_j;
            mean = apply_calibration(mean, *calibration, g);
            mean.tx_j = tx;
        }
        row.profile = profile;
        row.mean = mean;
        row.carbon = per_request_carbon(report, mean, scenario, ctx.catalog);
        rows.push_back(std::move(row));
    }

    if (ctx.format == "json") {
        json tasks = json::array();
        for (const auto& row : rows) {
            tasks.push_back({{"task", row.task},
                             {"stats_source", row.stats_source},
                             {"prompt_tokens_mean", row.profile.prompt_tokens.mean},
                             {"gen_tokens_mean", row.profile.gen_tokens.mean},
                             {"ttft_s", row.mean.ttft_s},
                             {"tbt_s", row.mean.tbt_s},
                             {"e2e_s", row.mean.e2e_s},
                             {"prefill_j", row.mean.prefill_j},
                             {"decode_j", row.mean.decode_j},
                             {"tx_j", row.mean.tx_j},
                             {"request_carbon",
                              {{"operational_g", row.carbon.operational_g},
                               {"amortized_embodied_g", row.carbon.amortized_embodied_g},
                               {"prefill_share_g", row.carbon.prefill_share_g},
                               {"decode_share_g", row.carbon.decode_share_g}}}});
        }
        json results = {{"scenario", scenario.name},
                        {"model", model.name},
                        {"accelerator", scenario.workload->accelerator},
                        {"node_power_kw", report.power_kw},
                        {"tasks", tasks}};
        if (calibration) {
            results["calibration"] = {{"energy_scale", calibration->energy_scale},
                                      {"ttft_scale", calibration->ttft_scale},
                                      {"tbt_scale", calibration->tbt_scale}};
        } else {
            results["calibration"] = nullptr;
        }
        json params = {{"scenario", scenario_to_json(scenario)},
                       {"task", task_arg},
                       {"trace", trace_content},
                       {"prompt_len_override", prompt_override},
                       {"gen_len_override", gen_override},
                       {"j_per_bit", j_per_bit}};
        emit_json(ctx, "workload", params, results);
    } else if (ctx.format == "csv") {
        std::vector<std::vector<std::string>> out_rows;
        for (const auto& row : rows) {
            out_rows.push_back({row.task, row.stats_source,
                                format_double(row.profile.prompt_tokens.mean),
                                format_double(row.profile.gen_tokens.mean),
                                format_double(row.mean.ttft_s), format_double(row.mean.tbt_s),
                                format_double(row.mean.e2e_s), format_double(row.mean.prefill_j),
                                format_double(row.mean.decode_j), format_double(row.mean.tx_j),
                                format_double(row.carbon.operational_g),
                                format_double(row.carbon.amortized_embodied_g),
                                format_double(row.carbon.prefill_share_g),
                                format_double(row.carbon.decode_share_g)});
        }
        emit_csv(ctx,
                 {"task", "stats_source", "prompt_tokens_mean", "gen_tokens_mean", "ttft_s",
                  "tbt_s", "e2e_s", "prefill_j", "decode_j", "tx_j", "operational_g",
                  "amortized_embodied_g", "prefill_share_g", "decode_share_g"},
                 out_rows);
    } else {
        auto& out = *ctx.out;
        out << "scenario: " << scenario.name << ", model: " << model.name
            << ", accelerator: " << scenario.workload->accelerator << " (node "
            << format_double(report.power_kw) << " kW)\n";
        if (calibration) {
            out << "calibration: energy x" << fixed(calibration->energy_scale, 4) << ", ttft x"
                << fixed(calibration->ttft_scale, 4) << ", tbt x"
                << fixed(calibration->tbt_scale, 4) << "\n";
        }
        out << "\n  task      source       ttft_s    tbt_s     e2e_s     prefill_j  decode_j   "
               "tx_j       embodied_g\n";
        for (const auto& row : rows) {
            char line[240];
            std::snprintf(line, sizeof(line),
                          "  %-9s %-12s %-9s %-9s %-9s %-10s %-10s %-10s %s\n", row.task.c_str(),
                          row.stats_source.c_str(), fixed(row.mean.ttft_s, 4).c_str(),
                          fixed(row.mean.tbt_s, 4).c_str(), fixed(row.mean.e2e_s, 3).c_str(),
                          fixed(row.mean.prefill_j, 1).c_str(),
                          fixed(row.mean.decode_j, 1).c_str(), fixed(row.mean.tx_j, 4).c_str(),
                          fixed(row.carbon.amortized_embodied_g, 4).c_str());
            out << line;
        }
    }
    return kExitOk;
}

int cmd_sweep(Context& ctx, const std::string& scenario_ref,
              const std::vector<std::string>& axis_specs) {
    Scenario base = resolve_scenario(scenario_ref);
    std::vector<SweepAxis> axes;
    for (const auto& spec : axis_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw config_error("sweep axis '" + spec + "': expected path=value[,value...]");
        }
        SweepAxis axis;
        axis.path = spec.substr(0, eq);
        std::string rest = spec.substr(eq + 1);
        std::istringstream ss(rest);
        std::string token;
        while (std::getline(ss, token, ',')) {
            json v = json::parse(token, nullptr, false);
            if (v.is_discarded()) v = token; // plain string value
            axis.values.push_back(std::move(v));
        }
        if (axis.values.empty()) {
            throw config_error("sweep axis '" + axis.path + "': no values given");
        }
        axes.push_back(std::move(axis));
    }

    SweepResult result = sweep(base, axes, ctx.catalog);

    auto cell_json = [](const SweepCell& cell) {
        json c = {{"assignment", cell.assignment}};
        if (cell.report) {
            c["embodied_total_kg"] = cell.report->embodied_total_kg;
            c["annualized_kg_per_year"] = cell.report->annualized_kg;
            c["operational_annual_kg_per_year"] = cell.report->operational_annual_kg;
            if (cell.report->power_budget) {
                c["feasible"] = cell.report->power_budget->feasible;
            }
        } else {
            c["error"] = cell.error;
        }
        return c;
    };

    if (ctx.format == "json") {
        json cells = json::array();
        for (const auto& cell : result.cells) cells.push_back(cell_json(cell));
        json params = {{"scenario", scenario_to_json(base)}, {"axes", json::array()}};
        for (const auto& axis : axes) {
            params["axes"].push_back({{"path", axis.path}, {"values", axis.values}});
        }
        emit_json(ctx, "sweep", params, {{"cells", cells}});
    } else if (ctx.format == "csv") {
        std::vector<std::string> header;
        for (const auto& axis : axes) header.push_back(axis.path);
        header.insert(header.end(), {"embodied_total_kg", "annualized_kg_per_year",
                                     "operational_annual_kg_per_year", "feasible", "error"});
        std::vector<std::vector<std::string>> rows;
        for (const auto& cell : result.cells) {
            std::vector<std::string> row;
            for (const auto& axis : axes) {
                const json& v = cell.assignment[axis.path];
                row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            }
            if (cell.report) {
                row.push_back(format_double(cell.report->embodied_total_kg));
                row.push_back(format_double(cell.report->annualized_kg));
                row.push_back(format_double(cell.report->operational_annual_kg));
                row.push_back(cell.report->power_budget
                                  ? (cell.report->power_budget->feasible ? "true" : "false")
                                  : "");
                row.push_back("");
            } else {
                row.insert(row.end(), {"", "", "", "", cell.error});
            }
            rows.push_back(std::move(row));
        }
        emit_csv(ctx, header, rows);
    } else {
        auto& out = *ctx.out;
        out << "sweep of " << base.name << ": " << result.cells.size() << " cells\n\n";
        for (const auto& cell : result.cells) {
            out << "  " << cell.assignment.dump() << " -> ";
            if (cell.report) {
                out << "embodied " << fixed(cell.report->embodied_total_kg, 1)
                    << " kg, annualized " << fixed(cell.report->annualized_kg, 1) << " kg/yr";
                if (cell.report->power_budget) {
                    out << (cell.report->power_budget->feasible ? ", feasible" : ", infeasible");
                }
                out << "\n";
            } else {
                out << "error: " << cell.error << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_validate(Context& ctx, const std::string& profile_arg) {
    std::vector<std::string> profiles;
    if (profile_arg == "all") {
        profiles = validation_profiles();
    } else {
        profiles.push_back(profile_arg);
    }
    std::vector<ValidationResult> results;
    results.reserve(profiles.size());
    bool all_pass = true;
    for (const auto& p : profiles) {
        results.push_back(run_validation(p, ctx.catalog));
        all_pass = all_pass && results.back().pass;
    }

    if (ctx.format == "json") {
        json payload = json::array();
        for (const auto& r : results) {
            json rows = json::array();
            for (const auto& row : r.rows) {
                rows.push_back({{"component", row.component},
                                {"metric", row.metric},
                                {"reference_t", row.reference_t},
                                {"model_t", row.model_t},
                                {"delta_frac", row.delta_frac},
                                {"tolerance_frac", row.tol_frac},
                                {"checked", row.checked},
                                {"pass", row.pass}});
            }
            payload.push_back({{"profile", r.profile}, {"pass", r.pass}, {"rows", rows}});
        }
        emit_json(ctx, "validate", {{"profile", profile_arg}},
                  {{"profiles", payload}, {"pass", all_pass}});
    } else if (ctx.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            for (const auto& row : r.rows) {
                rows.push_back({r.profile, row.component, row.metric,
                                format_double(row.reference_t), format_double(row.model_t),
                                format_double(row.delta_frac), format_double(row.tol_frac),
                                row.checked ? "true" : "false", row.pass ? "pass" : "FAIL"});
            }
        }
        emit_csv(ctx,
                 {"profile", "component", "metric", "reference_t", "model_t", "delta_frac",
                  "tolerance_frac", "checked", "status"},
                 rows);
    } else {
        auto& out = *ctx.out;
        for (const auto& r : results) {
            out << "profile: " << r.profile << "\n";
            out << "  component             metric              reference_t  model_t   delta    "
                   " tolerance  status\n";
            for (const auto& row : r.rows) {
                char line[240];
                std::snprintf(line, sizeof(line), "  %-21s %-19s %-12s %-9s %-9s %-10s %s\n",
                              row.component.c_str(), row.metric.c_str(),
                              fixed(row.reference_t, 3).c_str(), fixed(row.model_t, 3).c_str(),
                              pct(row.delta_frac).c_str(),
                              row.checked ? (fixed(row.tol_frac * 100, 1) + "%").c_str() : "-",
                              row.checked ? (row.pass ? "pass" : "FAIL") : "info");
                out << line;
            }
            out << "  result: " << (r.pass ? "pass" : "FAIL") << "\n\n";
        }
    }

    if (!all_pass) {
        for (const auto& r : results) {
            for (const auto& row : r.rows) {
                if (row.checked && !row.pass) {
                    *ctx.err << "tolerance breach: " << r.profile << " " << row.component << " "
                             << row.metric << " delta " << pct(row.delta_frac) << " exceeds "
                             << fixed(row.tol_frac * 100, 1) << "%\n";
                }
            }
        }
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_catalog(Context& ctx) {
    if (ctx.format == "json") {
        emit_json(ctx, "catalog", json::object(), ctx.catalog.to_json());
    } else {
        *ctx.out << ctx.catalog.to_json().dump(2) << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"embodied + operational carbon modeling for orbital and terrestrial "
                 "LLM serving"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "catalog override file (JSON)")
        ->envname("LLMSPACE_CATALOG");

    std::string format = "table";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* eval_cmd = app.add_subcommand("evaluate", "itemized carbon report for one scenario");
    std::string eval_scenario;
    bool strict_power = false;
    eval_cmd->add_option("--scenario", eval_scenario, "shipped name or scenario file")
        ->required();
    eval_cmd->add_flag("--strict-power", strict_power,
                       "exit 2 when the power budget is infeasible");
    add_format(eval_cmd);

    auto* compare_cmd =
        app.add_subcommand("compare", "annualized series across scenarios and lifetimes");
    std::vector<std::string> compare_scenarios;
    int lifetime_lo = 1, lifetime_hi = 10;
    compare_cmd->add_option("--scenario", compare_scenarios, "scenario (repeat two or more)")
        ->required();
    compare_cmd->add_option("--lifetime-lo", lifetime_lo, "grid start, years");
    compare_cmd->add_option("--lifetime-hi", lifetime_hi, "grid end, years");
    add_format(compare_cmd);

    auto* workload_cmd =
        app.add_subcommand("workload", "per-task latency, energy, and per-request carbon");
    std::string wl_scenario, wl_task = "all", wl_trace;
    double wl_prompt = 0, wl_gen = 0, wl_per_bit = kTxJoulesPerBit;
    workload_cmd->add_option("--scenario", wl_scenario, "scenario with a workload block")
        ->required();
    workload_cmd->add_option("--task", wl_task, "task name or 'all'");
    workload_cmd->add_option("--trace", wl_trace, "measured trace file for calibration");
    workload_cmd->add_option("--prompt-len", wl_prompt, "override prompt length, tokens");
    workload_cmd->add_option("--gen-len", wl_gen, "override generation length, tokens");
    workload_cmd->add_option("--per-bit", wl_per_bit, "transmission energy, J/bit");
    add_format(workload_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Cartesian design-space sweep");
    std::string sweep_scenario;
    std::vector<std::string> sweep_axes;
    sweep_cmd->add_option("--scenario", sweep_scenario, "base scenario")->required();
    sweep_cmd->add_option("--axis", sweep_axes, "axis as path=value[,value...] (repeatable)")
        ->required();
    add_format(sweep_cmd);

    auto* validate_cmd =
        app.add_subcommand("validate", "reproduce the reference breakdown within tolerances");
    std::string profile = "all";
    validate_cmd->add_option("--profile", profile, "cots, radhard, radopt, or all")
        ->check(CLI::IsMember({"cots", "radhard", "radopt", "all"}));
    add_format(validate_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "dump the resolved catalog");
    add_format(catalog_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage_out;
        int code = app.exit(e, usage_out, err);
        out << usage_out.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx;
        if (!catalog_path.empty()) {
            ctx.catalog = TechnologyCatalog::load_file(catalog_path);
        } else {
            ctx.catalog = TechnologyCatalog::builtin();
        }
        ctx.catalog_json = ctx.catalog.to_json();
        ctx.format = format;
        ctx.out = &out;
        ctx.err = &err;

        if (eval_cmd->parsed()) return cmd_evaluate(ctx, eval_scenario, strict_power);
        if (compare_cmd->parsed()) {
            return cmd_compare(ctx, compare_scenarios, lifetime_lo, lifetime_hi);
        }
        if (workload_cmd->parsed()) {
            return cmd_workload(ctx, wl_scenario, wl_task, wl_trace, wl_prompt, wl_gen,
                                wl_per_bit);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(ctx, sweep_scenario, sweep_axes);
        if (validate_cmd->parsed()) return cmd_validate(ctx, profile);
        if (catalog_cmd->parsed()) return cmd_catalog(ctx);
        err << "no subcommand given\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace llmspace
