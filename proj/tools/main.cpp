#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config_file.hpp"
#include "fpdetect/bench.hpp"
#include "fpdetect/corpus.hpp"
#include "fpdetect/detector.hpp"
#include "fpdetect/imageio.hpp"

namespace fs = std::filesystem;
using namespace fpdetect;

namespace {

constexpr int kExitPresent = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitError = 2;

DetectorConfig build_config(const std::string& config_path,
                            const std::vector<std::string>& overrides) {
    DetectorConfig config;
    if (!config_path.empty()) config = cli::load_config_file(config_path);
    for (const std::string& entry : overrides) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + entry + "'");
        cli::apply_config_entry(config, entry.substr(0, eq), entry.substr(eq + 1));
    }
    config.validate();
    return config;
}

int cmd_detect(const std::string& image_path, const std::string& config_path,
               const std::vector<std::string>& overrides, bool as_json) {
    const DetectorConfig config = build_config(config_path, overrides);
    const GrayImage img = load_pgm_file(image_path);
    const DetectionResult res = detect(img, config);

    if (as_json) {
        nlohmann::ordered_json j;
        j["verdict"] = res.present ? "present" : "absent";
        j["feature_count"] = res.feature_count;
        j["threshold_used"] = res.threshold_used;
        j["binarization_threshold"] = res.binarization_threshold;
        j["timings"] = res.stage_timings;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (res.present ? "present" : "absent") << "\n"
                  << "feature_count: " << res.feature_count << "\n"
                  << "threshold_used: " << res.threshold_used << "\n"
                  << "binarization_threshold: " << res.binarization_threshold << "\n"
                  << "timings_us:";
        for (const auto& [stage, us] : res.stage_timings)
            std::cout << " " << stage << "=" << us;
        std::cout << "\n";
    }
    return res.present ? kExitPresent : kExitAbsent;
}

int cmd_bench(const std::string& corpus_path, std::string methods_arg,
              const std::string& config_path, const std::vector<std::string>& overrides,
              const std::string& out_path) {
    const DetectorConfig config = build_config(config_path, overrides);

    const CorpusLoad corpus = load_corpus_dir(corpus_path);
    for (const std::string& err : corpus.errors)
        std::cerr << "warning: " << err << "\n";
    if (corpus.frames.empty()) {
        std::cerr << "error: no frames in '" << corpus_path << "'\n";
        return kExitError;
    }

    std::vector<std::string> methods;
    if (methods_arg.empty()) {
        methods = all_method_names();
    } else {
        std::stringstream ss(methods_arg);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            if (!is_method_name(name))
                throw std::invalid_argument("unknown method '" + name + "'");
            methods.push_back(name);
        }
        if (methods.empty())
            throw std::invalid_argument("--methods lists no methods");
    }

    std::string digest;
    const fs::path manifest = fs::path(corpus_path) / "manifest.tsv";
    if (fs::exists(manifest)) {
        digest = digest_file(manifest.string());
    } else {
        std::string joined;
        for (const LabeledFrame& f : corpus.frames) joined += f.name + "\n";
        digest = fnv1a64_hex(joined);
    }

    const BenchReport report =
        run_bench(corpus.frames, methods, config, corpus_path, digest);

    std::cout << bench_matrix_table(report) << "\n" << bench_timing_table(report);
    const std::string json = bench_report_json(report);
    if (out_path.empty()) {
        std::cout << "\n" << json;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitError;
        }
        out << json;
    }
    return 0;
}

int cmd_corpus(const std::string& kind, int count, int width, int height,
               std::uint64_t seed, const std::string& out_dir) {
    std::vector<LabeledFrame> frames;
    if (kind == "ridge") {
        frames = make_ridge_set(count, width, height, seed);
    } else if (kind == "noise") {
        frames = make_noise_set(count, width, height, seed);
    } else if (kind == "mixed") {
        frames = make_mixed_set(count, width, height, seed);
    } else if (const auto noise_kind = parse_noise_kind(kind)) {
        frames = make_noise_kind_set(*noise_kind, count, width, height, seed);
    } else {
        std::cerr << "error: unknown corpus kind '" << kind
                  << "' (ridge, noise, mixed, salt_pepper, uniform, blobs, dead_lines)\n";
        return kExitError;
    }
    write_corpus(out_dir, frames);
    std::cout << "wrote " << frames.size() << " frames + manifest.tsv to " << out_dir
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fingerprint presence detection (ridge orientation check)"};
    app.require_subcommand(1);

    std::string image_path, config_path, out_path, corpus_path, methods_arg;
    std::vector<std::string> overrides;
    bool as_json = false;

    auto* detect_cmd = app.add_subcommand("detect", "Decide whether a frame contains a fingerprint");
    detect_cmd->add_option("image", image_path, "PGM (P5) image file")->required();
    detect_cmd->add_option("--config", config_path, "key=value config file");
    detect_cmd->add_option("--set", overrides, "config override key=value (repeatable)");
    detect_cmd->add_flag("--json", as_json, "emit a single JSON object");

    auto* bench_cmd = app.add_subcommand("bench", "Run the method comparison over a corpus");
    bench_cmd->add_option("corpus", corpus_path, "corpus directory")->required();
    bench_cmd->add_option("--methods", methods_arg, "comma-separated method list");
    bench_cmd->add_option("--config", config_path, "key=value config file");
    bench_cmd->add_option("--set", overrides, "config override key=value (repeatable)");
    bench_cmd->add_option("--out", out_path, "write the JSON report here");

    std::string corpus_kind;
    int count = 10, width = 256, height = 360;
    std::uint64_t seed = 1;
    std::string corpus_out;
    auto* corpus_cmd = app.add_subcommand("corpus", "Generate a labeled synthetic corpus");
    corpus_cmd->add_option("kind", corpus_kind,
                           "ridge | noise | mixed | salt_pepper | uniform | blobs | dead_lines")
        ->required();
    corpus_cmd->add_option("--count", count, "number of frames");
    corpus_cmd->add_option("--width", width, "frame width");
    corpus_cmd->add_option("--height", height, "frame height");
    corpus_cmd->add_option("--seed", seed, "base seed (frame i uses seed+i)");
    corpus_cmd->add_option("--out", corpus_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (detect_cmd->parsed())
            return cmd_detect(image_path, config_path, overrides, as_json);
        if (bench_cmd->parsed())
            return cmd_bench(corpus_path, methods_arg, config_path, overrides, out_path);
        return cmd_corpus(corpus_kind, count, width, height, seed, corpus_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
