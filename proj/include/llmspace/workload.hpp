#pragma once

#include <string>
#include <vector>

#include "llmspace/catalog.hpp"

namespace llmspace {

/// Terrestrial request/response transmission cost, J per bit.
constexpr double kTxJoulesPerBit = 0.5e-6;

/// Rough payload size used when deriving byte counts from token statistics.
constexpr double kBytesPerToken = 4.0;

struct InferenceEstimate {
    double ttft_s = 0;      // prompt processing
    double tbt_s = 0;       // mean per-token generation step
    double e2e_s = 0;       // ttft + (gen_len - 1) * tbt
    double prefill_j = 0;
    double decode_j = 0;
    double tx_j = 0;
};

/// Roofline estimate of one request. Prompt processing is bounded by the
/// larger of its compute time and the single pass over the weights; each
/// generation step is bounded by the larger of its compute time and the
/// weight plus KV-cache traffic, which grows with position.
InferenceEstimate estimate_request(const ModelSpec& model, const AcceleratorSpec& accel,
                                   double prompt_len, double gen_len);

double transmission_energy_j(double request_bytes, double response_bytes,
                             double j_per_bit = kTxJoulesPerBit);

struct TaskEstimate {
    InferenceEstimate mean_case;
    InferenceEstimate min_case;
    InferenceEstimate max_case;
    double total_energy_j = 0; // n_requests * mean-case inference energy
};

TaskEstimate estimate_task(const ModelSpec& model, const AcceleratorSpec& accel,
                           const TaskProfile& task, double n_requests = 1);

// --- measured-trace ingestion -----------------------------------------------

struct TraceRecord {
    double prompt_len = 0;
    double gen_len = 0;
    double energy_j = 0;
    double ttft_s = 0;
    double tbt_s = 0;
};

struct Calibration {
    double energy_scale = 1;
    double ttft_scale = 1;
    double tbt_scale = 1;
};

struct TraceIngest {
    TaskProfile profile;
    Calibration calibration;
};

/// Builds a task profile from measured records and calibration factors as the
/// mean measured/modeled ratio per quantity.
TraceIngest ingest_trace(const std::vector<TraceRecord>& records, const ModelSpec& model,
                         const AcceleratorSpec& accel, const std::string& task_name);

/// Parses a delimited trace file: header `prompt_len,gen_len,energy_j,ttft_s,tbt_s`
/// then one record per line.
std::vector<TraceRecord> read_trace_file(const std::string& path);

/// Applies calibration multiplicatively; e2e is rebuilt from the scaled
/// phases so the latency identity still holds.
InferenceEstimate apply_calibration(const InferenceEstimate& estimate, const Calibration& cal,
                                    double gen_len);

} // namespace llmspace
