#include "llmspace/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "llmspace/errors.hpp"
#include "llmspace/json_util.hpp"

namespace llmspace {

namespace {

double checked_len(double v, const char* what) {
    if (!(v >= 1)) {
        throw domain_error(std::string(what) + " must be at least 1 token, got " +
                           format_double(v));
    }
    return v;
}

/// Mean over t = 1..steps of max(flat, a + b*t) with b >= 0. The memory term
/// grows with position, so the sequence has at most one crossover.
double mean_step_time(double flat, double a, double b, long long steps) {
    if (steps <= 0) return std::max(flat, a + b);
    auto ramp_sum = [&](long long from, long long to) {
        // sum of a + b*t for t in [from, to]
        double n = static_cast<double>(to - from + 1);
        double t_sum = (static_cast<double>(from) + static_cast<double>(to)) * n / 2.0;
        return a * n + b * t_sum;
    };
    double total;
    if (flat <= a + b) {
        total = ramp_sum(1, steps);
    } else if (flat >= a + b * static_cast<double>(steps)) {
        total = flat * static_cast<double>(steps);
    } else {
        auto first_above = static_cast<long long>(std::floor((flat - a) / b)) + 1;
        first_above = std::clamp(first_above, 1ll, steps);
        total = flat * static_cast<double>(first_above - 1) + ramp_sum(first_above, steps);
    }
    return total / static_cast<double>(steps);
}

} // namespace

InferenceEstimate estimate_request(const ModelSpec& model, const AcceleratorSpec& accel,
                                   double prompt_len, double gen_len) {
    checked_len(prompt_len, "prompt_len");
    checked_len(gen_len, "gen_len");

    double eff_flops = accel.peak_flops * accel.compute_util;
    double eff_bw = accel.hbm_bandwidth_bytes_per_s * accel.mem_util;
    double weight_bytes = model.param_count * model.bytes_per_param;
    double kv_bytes_per_pos = 2.0 * model.layers * model.kv_heads * model.head_dim *
                              model.bytes_per_param;

    // Prompt phase: all tokens in one pass; quadratic attention term on top of
    // the weight GEMMs, one full read of the weights.
    double prefill_flops = 2.0 * model.param_count * prompt_len +
                           2.0 * model.layers * prompt_len * prompt_len * model.hidden_dim;
    double ttft = std::max(prefill_flops / eff_flops, weight_bytes / eff_bw);

    // Generation: each step re-reads the weights plus the KV cache up to its
    // position.
    double step_compute = 2.0 * model.param_count / eff_flops;
    double step_mem_base = (weight_bytes + kv_bytes_per_pos * prompt_len) / eff_bw;
    double step_mem_slope = kv_bytes_per_pos / eff_bw;
    auto steps = static_cast<long long>(std::llround(gen_len));
    steps = std::max(steps, 1ll);
    double tbt = mean_step_time(step_compute, step_mem_base, step_mem_slope, steps);

    InferenceEstimate est;
    est.ttft_s = ttft;
    est.tbt_s = tbt;
    est.e2e_s = ttft + (gen_len - 1.0) * tbt;
    double watts = accel.node_power_kw * 1000.0;
    est.prefill_j = watts * est.ttft_s;
    est.decode_j = watts * (est.e2e_s - est.ttft_s);
    est.tx_j = 0;
    return est;
}

double transmission_energy_j(double request_bytes, double response_bytes, double j_per_bit) {
    if (request_bytes < 0 || response_bytes < 0 || j_per_bit < 0) {
        throw domain_error("transmission energy: inputs must be nonnegative");
    }
    return (request_bytes + response_bytes) * 8.0 * j_per_bit;
}

TaskEstimate estimate_task(const ModelSpec& model, const AcceleratorSpec& accel,
                           const TaskProfile& task, double n_requests) {
    if (!(n_requests >= 1)) {
        throw domain_error("estimate_task: n_requests must be at least 1");
    }
    if (!task.has_stats) {
        throw domain_error("task '" + task.name +
                           "' has no token statistics; ingest a measured trace to supply them");
    }
    auto at = [&](double p, double g) {
        InferenceEstimate e = estimate_request(model, accel, std::max(1.0, p), std::max(1.0, g));
        e.tx_j = transmission_energy_j(task.request_bytes, task.response_bytes);
        return e;
    };
    TaskEstimate out;
    out.mean_case = at(task.prompt_tokens.mean, task.gen_tokens.mean);
    out.min_case = at(task.prompt_tokens.min, task.gen_tokens.min);
    out.max_case = at(task.prompt_tokens.max, task.gen_tokens.max);
    out.total_energy_j = n_requests * (out.mean_case.prefill_j + out.mean_case.decode_j);
    return out;
}

TraceIngest ingest_trace(const std::vector<TraceRecord>& records, const ModelSpec& model,
                         const AcceleratorSpec& accel, const std::string& task_name) {
    if (records.empty()) {
        throw domain_error("trace ingestion: at least one record is required");
    }
    TokenStats prompt{0, records[0].prompt_len, records[0].prompt_len};
    TokenStats gen{0, records[0].gen_len, records[0].gen_len};
    double energy_ratio = 0, ttft_ratio = 0, tbt_ratio = 0;
    for (const auto& r : records) {
        if (!(r.prompt_len >= 1) || !(r.gen_len >= 1)) {
            throw domain_error("trace ingestion: token counts must be at least 1");
        }
        if (!(r.energy_j > 0) || !(r.ttft_s > 0) || !(r.tbt_s > 0)) {
            throw domain_error("trace ingestion: measured energy and latencies must be positive");
        }
        prompt.mean += r.prompt_len;
        prompt.min = std::min(prompt.min, r.prompt_len);
        prompt.max = std::max(prompt.max, r.prompt_len);
        gen.mean += r.gen_len;
        gen.min = std::min(gen.min, r.gen_len);
        gen.max = std::max(gen.max, r.gen_len);

        InferenceEstimate modeled = estimate_request(model, accel, r.prompt_len, r.gen_len);
        energy_ratio += r.energy_j / (modeled.prefill_j + modeled.decode_j);
        ttft_ratio += r.ttft_s / modeled.ttft_s;
        tbt_ratio += r.tbt_s / modeled.tbt_s;
    }
    auto n = static_cast<double>(records.size());
    prompt.mean /= n;
    gen.mean /= n;

    TraceIngest out;
    out.profile.name = task_name;
    out.profile.prompt_tokens = prompt;
    out.profile.gen_tokens = gen;
    out.profile.request_bytes = kBytesPerToken * prompt.mean;
    out.profile.response_bytes = kBytesPerToken * gen.mean;
    out.profile.placeholder_stats = false;
    out.profile.has_stats = true;
    out.calibration.energy_scale = energy_ratio / n;
    out.calibration.ttft_scale = ttft_ratio / n;
    out.calibration.tbt_scale = tbt_ratio / n;
    return out;
}

std::vector<TraceRecord> read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open trace file: " + path);
    }
    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) {
            size_t a = field.find_first_not_of(" \t\r");
            size_t b = field.find_last_not_of(" \t\r");
            fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
        }
        return fields;
    };

    std::string line;
    if (!std::getline(in, line)) {
        throw config_error(path + ": empty trace file; header row required");
    }
    const std::vector<std::string> expected = {"prompt_len", "gen_len", "energy_j", "ttft_s",
                                               "tbt_s"};
    if (split(line) != expected) {
        throw config_error(path + ": header must be '" + join_names(expected) + "'");
    }

    std::vector<TraceRecord> records;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split(line);
        if (fields.size() != expected.size()) {
            throw config_error(path + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(expected.size()) + " columns, got " +
                               std::to_string(fields.size()));
        }
        TraceRecord r;
        double* slots[] = {&r.prompt_len, &r.gen_len, &r.energy_j, &r.ttft_s, &r.tbt_s};
        for (size_t i = 0; i < fields.size(); ++i) {
            try {
                *slots[i] = std::stod(fields[i]);
            } catch (const std::exception&) {
                throw config_error(path + ":" + std::to_string(line_no) + ": column '" +
                                   expected[i] + "' is not a number: '" + fields[i] + "'");
            }
        }
        records.push_back(r);
    }
    if (records.empty()) {
        throw config_error(path + ": trace contains no records");
    }
    return records;
}

InferenceEstimate apply_calibration(const InferenceEstimate& estimate, const Calibration& cal,
                                    double gen_len) {
    InferenceEstimate out = estimate;
    out.ttft_s = estimate.ttft_s * cal.ttft_scale;
    out.tbt_s = estimate.tbt_s * cal.tbt_scale;
    out.e2e_s = out.ttft_s + (gen_len - 1.0) * out.tbt_s;
    out.prefill_j = estimate.prefill_j * cal.energy_scale;
    out.decode_j = estimate.decode_j * cal.energy_scale;
    return out;
}

} // namespace llmspace
