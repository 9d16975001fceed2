#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpdetect/corpus.hpp"
#include "fpdetect/detector.hpp"

namespace fpdetect {

/// Canonical method names accepted by run_bench and the CLI --methods list.
/// "proposal" is the ridge-orientation detector; the rest are the
/// reconstruction baselines.
const std::vector<std::string>& all_method_names();
bool is_method_name(const std::string& name);

/// One method's row of the comparison matrix.
struct MethodRow {
    std::string name;
    std::vector<bool> verdicts;        // per frame: present?
    std::vector<bool> correct;         // verdict == ground-truth label
    std::int64_t mean_elapsed_us = 0;
    std::int64_t median_elapsed_us = 0;
};

/// Verdict matrix + timing summary for a corpus. Every field except the
/// *_us timings is a pure function of (frame bytes, method, config).
struct BenchReport {
    std::string corpus_dir;
    std::string manifest_digest;
    std::vector<std::string> frame_names;
    std::vector<FrameLabel> labels;
    DetectorConfig config;
    std::vector<MethodRow> methods;
};

/// Runs each named method over every frame. Throws std::invalid_argument
/// for unknown method names or an empty frame list.
BenchReport run_bench(const std::vector<LabeledFrame>& frames,
                      const std::vector<std::string>& methods,
                      const DetectorConfig& config,
                      const std::string& corpus_dir = {},
                      const std::string& manifest_digest = {});

/// JSON form of the report. Timing fields all carry the "_us" suffix so
/// consumers can strip them when comparing runs.
std::string bench_report_json(const BenchReport& report);

/// Aligned OK/Fail matrix, one row per method (OK = verdict matches the
/// ground-truth label).
std::string bench_matrix_table(const BenchReport& report);

/// Mean elapsed time per method, milliseconds with one decimal.
std::string bench_timing_table(const BenchReport& report);

/// FNV-1a 64-bit digest, hex encoded; file variant digests the raw bytes.
std::string fnv1a64_hex(const std::string& bytes);
std::string digest_file(const std::string& path);

} // namespace fpdetect
