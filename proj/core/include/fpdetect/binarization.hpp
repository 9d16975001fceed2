#pragma once

#include <array>
#include <cstdint>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Routes between Otsu and a fixed threshold by image size. The fixed value
/// must stay within the 100-150 band.
struct ThresholdPolicy {
    std::int64_t large_image_pixel_cutoff = 131072;
    int fixed_threshold = 125;

    void validate() const {
        if (fixed_threshold < 100 || fixed_threshold > 150)
            throw std::invalid_argument("ThresholdPolicy: fixed_threshold outside 100-150");
        if (large_image_pixel_cutoff < 1)
            throw std::invalid_argument("ThresholdPolicy: cutoff must be positive");
    }
};

using Histogram = std::array<std::int64_t, 256>;

Histogram intensity_histogram(const GrayImage& img);

/// Otsu's threshold: the t in 0..254 maximizing between-class variance of
/// the split {<= t} vs {> t}. Ties break toward the smallest t; the argmax
/// comparison is exact (integer arithmetic), not floating point.
/// Throws std::invalid_argument when the histogram holds a single value.
int otsu_threshold(const GrayImage& img);
int otsu_threshold(const Histogram& hist);

/// Between-class variance at the best split and the total variance, both as
/// doubles. Feeds the histogram-analysis baseline.
struct OtsuStats {
    int threshold = 0;
    double between_class_variance = 0.0;
    double total_variance = 0.0;
};
OtsuStats otsu_stats(const GrayImage& img);

/// Ridges are dark: out(x,y) = 1 iff img(x,y) <= t.
BinaryImage binarize(const GrayImage& img, int threshold);

/// Fixed threshold for large frames, Otsu otherwise; degenerate histograms
/// fall back to the fixed value.
int choose_threshold(const GrayImage& img, const ThresholdPolicy& policy);

} // namespace fpdetect
