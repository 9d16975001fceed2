#include "fpdetect/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "fpdetect/baselines.hpp"

namespace fpdetect {

namespace {

struct MethodCall {
    // returns (present, elapsed_us)
    std::function<std::pair<bool, std::int64_t>(const GrayImage&, const DetectorConfig&)> run;
};

const std::vector<std::pair<std::string, MethodCall>>& method_table() {
    static const std::vector<std::pair<std::string, MethodCall>> table = {
        {"proposal",
         {[](const GrayImage& img, const DetectorConfig& config) {
             const DetectionResult r = detect(img, config);
             return std::make_pair(r.present, r.stage_timings.at("total"));
         }}},
        {"method1_segmentation_brightness",
         {[](const GrayImage& img, const DetectorConfig& config) {
             const BaselineVerdict v = detect_segmentation_brightness(
                 img, 4, 12, 80, config.roi_area_fraction);
             return std::make_pair(v.present, v.elapsed_us);
         }}},
        {"method2_brightness_difference",
         {[](const GrayImage& img, const DetectorConfig& config) {
             const BaselineVerdict v =
                 detect_brightness_difference(img, 80, config.roi_area_fraction);
             return std::make_pair(v.present, v.elapsed_us);
         }}},
        {"method3_histogram_analysis",
         {[](const GrayImage& img, const DetectorConfig&) {
             const BaselineVerdict v = detect_histogram_analysis(img);
             return std::make_pair(v.present, v.elapsed_us);
         }}},
        {"method4_zone_brightness",
         {[](const GrayImage& img, const DetectorConfig&) {
             const BaselineVerdict v = detect_zone_brightness(img);
             return std::make_pair(v.present, v.elapsed_us);
         }}},
        {"method5_reverse_area",
         {[](const GrayImage& img, const DetectorConfig& config) {
             const BaselineVerdict v =
                 detect_reverse_area(img, 8, 16, 60, config.roi_area_fraction);
             return std::make_pair(v.present, v.elapsed_us);
         }}},
    };
    return table;
}

std::int64_t median(std::vector<std::int64_t> values) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2;
}

} // namespace

const std::vector<std::string>& all_method_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, call] : method_table()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_method_name(const std::string& name) {
    const auto& names = all_method_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

BenchReport run_bench(const std::vector<LabeledFrame>& frames,
                      const std::vector<std::string>& methods,
                      const DetectorConfig& config,
                      const std::string& corpus_dir,
                      const std::string& manifest_digest) {
    if (frames.empty())
        throw std::invalid_argument("run_bench: empty corpus");
    config.validate();

    BenchReport report;
    report.corpus_dir = corpus_dir;
    report.manifest_digest = manifest_digest;
    report.config = config;
    for (const LabeledFrame& f : frames) {
        report.frame_names.push_back(f.name);
        report.labels.push_back(f.label);
    }

    for (const std::string& name : methods) {
        const auto& table = method_table();
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&](const auto& entry) { return entry.first == name; });
        if (it == table.end())
            throw std::invalid_argument("run_bench: unknown method '" + name + "'");

        MethodRow row;
        row.name = name;
        std::vector<std::int64_t> times;
        times.reserve(frames.size());
        for (const LabeledFrame& frame : frames) {
            const auto [present, elapsed] = it->second.run(frame.image, config);
            row.verdicts.push_back(present);
            row.correct.push_back(present ==
                                  (frame.label == FrameLabel::FingerprintPresent));
            times.push_back(elapsed);
        }
        std::int64_t sum = 0;
        for (std::int64_t t : times) sum += t;
        row.mean_elapsed_us = times.empty() ? 0 : sum / static_cast<std::int64_t>(times.size());
        row.median_elapsed_us = median(times);
        report.methods.push_back(std::move(row));
    }
    return report;
}

std::string bench_report_json(const BenchReport& report) {
    nlohmann::ordered_json j;
    j["corpus_dir"] = report.corpus_dir;
    j["manifest_digest"] = report.manifest_digest;
    j["frame_count"] = report.frame_names.size();
    j["frames"] = report.frame_names;
    {
        std::vector<std::string> labels;
        for (FrameLabel l : report.labels) labels.emplace_back(to_string(l));
        j["labels"] = labels;
    }
    {
        nlohmann::ordered_json c;
        c["block_size"] = report.config.block_size;
        c["feature_threshold"] = report.config.feature_threshold;
        c["roi_area_fraction"] = report.config.roi_area_fraction;
        c["fixed_threshold"] = report.config.threshold_policy.fixed_threshold;
        c["large_image_pixel_cutoff"] = report.config.threshold_policy.large_image_pixel_cutoff;
        c["reference_width"] = report.config.reference_size.first;
        c["reference_height"] = report.config.reference_size.second;
        c["scale_threshold_with_area"] = report.config.scale_threshold_with_area;
        j["config"] = std::move(c);
    }
    j["methods"] = nlohmann::ordered_json::array();
    for (const MethodRow& row : report.methods) {
        nlohmann::ordered_json m;
        m["name"] = row.name;
        std::vector<std::string> verdicts, cells;
        for (std::size_t i = 0; i < row.verdicts.size(); ++i) {
            verdicts.emplace_back(row.verdicts[i] ? "present" : "absent");
            cells.emplace_back(row.correct[i] ? "OK" : "Fail");
        }
        m["verdicts"] = verdicts;
        m["cells"] = cells;
        m["mean_elapsed_us"] = row.mean_elapsed_us;
        m["median_elapsed_us"] = row.median_elapsed_us;
        j["methods"].push_back(std::move(m));
    }
    return j.dump(2) + "\n";
}

std::string bench_matrix_table(const BenchReport& report) {
    std::size_t name_width = std::string("Method").size();
    for (const MethodRow& row : report.methods)
        name_width = std::max(name_width, row.name.size());
    const std::size_t cell_width =
        std::string("Image" + std::to_string(report.frame_names.size())).size();

    std::ostringstream out;
    out << std::left;
    out.width(static_cast<std::streamsize>(name_width));
    out << "Method";
    for (std::size_t i = 0; i < report.frame_names.size(); ++i) {
        out << "  ";
        out.width(static_cast<std::streamsize>(cell_width));
        out << ("Image" + std::to_string(i + 1));
    }
    out << '\n';
    for (const MethodRow& row : report.methods) {
        out.width(static_cast<std::streamsize>(name_width));
        out << row.name;
        for (bool ok : row.correct) {
            out << "  ";
            out.width(static_cast<std::streamsize>(cell_width));
            out << (ok ? "OK" : "Fail");
        }
        out << '\n';
    }
    return out.str();
}

std::string bench_timing_table(const BenchReport& report) {
    std::size_t name_width = std::string("Method").size();
    for (const MethodRow& row : report.methods)
        name_width = std::max(name_width, row.name.size());

    std::ostringstream out;
    out << std::left;
    out.width(static_cast<std::streamsize>(name_width));
    out << "Method";
    out << "  Elapsed Time (ms)\n";
    for (const MethodRow& row : report.methods) {
        out.width(static_cast<std::streamsize>(name_width));
        out << row.name;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  %.1f", row.mean_elapsed_us / 1000.0);
        out << buf << '\n';
    }
    return out.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("digest_file: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64_hex(buffer.str());
}

} // namespace fpdetect
