#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpdetect/binarization.hpp"
#include "fpdetect/image.hpp"

namespace fpdetect {

/// Pipeline parameters. Defaults target a 256x360 sensor frame: 16-pixel
/// blocks, a 175-block feature threshold and a 2/3-area centered ROI.
struct DetectorConfig {
    int block_size = 16;
    int feature_threshold = 175;
    double roi_area_fraction = 2.0 / 3.0;
    ThresholdPolicy threshold_policy{};
    std::pair<int, int> reference_size{256, 360};
    bool scale_threshold_with_area = true;

    void validate() const {
        if (block_size < 2)
            throw std::invalid_argument("DetectorConfig: block_size must be >= 2");
        if (feature_threshold < 1)
            throw std::invalid_argument("DetectorConfig: feature_threshold must be >= 1");
        if (!(roi_area_fraction > 0.0) || roi_area_fraction > 1.0)
            throw std::invalid_argument("DetectorConfig: roi_area_fraction outside (0,1]");
        if (reference_size.first < 3 || reference_size.second < 3)
            throw std::invalid_argument("DetectorConfig: reference_size too small");
        threshold_policy.validate();
    }
};

/// Wall-clock time per pipeline stage, microseconds. Informational only;
/// every other result field is deterministic for a fixed frame and config.
using StageTimings = std::map<std::string, std::int64_t>;

struct DetectionResult {
    bool present = false;
    int feature_count = 0;
    int threshold_used = 0;
    int binarization_threshold = 0;
    StageTimings stage_timings;
};

/// Number of complete blocks the ROI of a frame of the given size yields.
int roi_block_count(std::pair<int, int> dims, const DetectorConfig& config);

/// Feature threshold adjusted to the frame size: scaled by the ratio of the
/// frame's ROI block count to the reference frame's (area-proportional),
/// never below 1. Unscaled when scale_threshold_with_area is off.
int effective_threshold(std::pair<int, int> dims, const DetectorConfig& config);

/// Full presence check: centered ROI -> low-pass -> threshold + binarize ->
/// crossing-number candidate mask -> Sobel on the filtered grayscale at
/// masked pixels -> per-block squared-gradient averages -> feature-block
/// count compared (strictly) against the effective threshold.
///
/// Throws std::invalid_argument when the ROI crop falls below 3x3. Flat or
/// otherwise degenerate content is not an error: it yields count 0, absent.
/// A ROI smaller than one block yields no blocks, hence count 0.
DetectionResult detect(const GrayImage& img, const DetectorConfig& config);

/// One frame's outcome inside a batch. `error` is empty on success.
struct BatchEntry {
    std::optional<DetectionResult> result;
    std::string error;

    bool ok() const { return result.has_value(); }
};

/// Element-wise detect, order preserved; a frame that fails records its
/// error in place and never aborts the batch.
std::vector<BatchEntry> detect_batch(const std::vector<GrayImage>& frames,
                                     const DetectorConfig& config);

} // namespace fpdetect
