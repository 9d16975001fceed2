#include "fpdetect/detector.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "fpdetect/imageio.hpp"
#include "fpdetect/orientation.hpp"
#include "fpdetect/preprocess.hpp"
#include "fpdetect/ridge_features.hpp"

namespace fpdetect {

namespace {

class StageClock {
public:
    explicit StageClock(StageTimings& out) : out_(out), last_(now()) {}

    void mark(const char* stage) {
        const auto t = now();
        out_[stage] = std::chrono::duration_cast<std::chrono::microseconds>(t - last_).count();
        last_ = t;
    }

private:
    static std::chrono::steady_clock::time_point now() {
        return std::chrono::steady_clock::now();
    }

    StageTimings& out_;
    std::chrono::steady_clock::time_point last_;
};

} // namespace

int roi_block_count(std::pair<int, int> dims, const DetectorConfig& config) {
    const auto [w, h] = roi_dims(dims.first, dims.second, config.roi_area_fraction);
    return (w / config.block_size) * (h / config.block_size);
}

int effective_threshold(std::pair<int, int> dims, const DetectorConfig& config) {
    config.validate();
    if (!config.scale_threshold_with_area)
        return config.feature_threshold;
    const int blocks = roi_block_count(dims, config);
    const int ref_blocks = roi_block_count(config.reference_size, config);
    if (ref_blocks == 0)
        return std::max(config.feature_threshold, 1);
    const long scaled = std::lround(static_cast<double>(config.feature_threshold) *
                                    blocks / ref_blocks);
    return static_cast<int>(std::max(scaled, 1L));
}

DetectionResult detect(const GrayImage& img, const DetectorConfig& config) {
    config.validate();
    DetectionResult res;
    StageClock clock(res.stage_timings);
    const auto start = std::chrono::steady_clock::now();

    const GrayImage roi = center_roi(img, config.roi_area_fraction);
    if (roi.width() < 3 || roi.height() < 3)
        throw std::invalid_argument("detect: frame smaller than 3x3 after ROI crop");
    clock.mark("roi");

    const GrayImage filtered = low_pass_filter(roi);
    clock.mark("lowpass");

    res.binarization_threshold = choose_threshold(filtered, config.threshold_policy);
    const BinaryImage bin = binarize(filtered, res.binarization_threshold);
    clock.mark("binarization");

    const CandidateMask mask = candidate_mask(bin);
    clock.mark("cn_mask");

    const GradientField field = sobel_gradients(filtered, mask);
    clock.mark("sobel");

    // A ROI narrower than one block yields an empty grid, not an error.
    std::vector<BlockStats> stats;
    if (field.width >= config.block_size && field.height >= config.block_size)
        stats = block_average_gradients(field, config.block_size);
    clock.mark("block_avg");

    res.feature_count = count_feature_blocks(stats);
    res.threshold_used =
        effective_threshold({img.width(), img.height()}, config);
    res.present = res.feature_count > res.threshold_used;
    clock.mark("count");

    res.stage_timings["total"] =
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

std::vector<BatchEntry> detect_batch(const std::vector<GrayImage>& frames,
                                     const DetectorConfig& config) {
    std::vector<BatchEntry> out;
    out.reserve(frames.size());
    for (const GrayImage& frame : frames) {
        BatchEntry entry;
        try {
            entry.result = detect(frame, config);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace fpdetect
