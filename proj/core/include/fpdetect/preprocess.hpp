#pragma once

#include <variant>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Smoothing / enhancement selector. LowPass is the fast default path;
/// the other two exist for the literature-style comparison pipeline.
struct LowPass {};
struct HistogramEqualize {};
struct Normalize {
    double target_mean = 100.0;
    double target_variance = 100.0;
};
using PreprocessMode = std::variant<LowPass, HistogramEqualize, Normalize>;

/// 3x3 box mean with edge replication. Integer arithmetic, round half up.
GrayImage low_pass_filter(const GrayImage& img);

/// Standard CDF remap: out = round(255 * (cdf(v) - cdf_min) / (N - cdf_min)).
/// Constant images map to themselves.
GrayImage histogram_equalize(const GrayImage& img);

/// Mean/variance normalization toward (target_mean, target_variance),
/// clamped to 0-255. Throws std::invalid_argument on zero-variance input
/// or non-positive target_variance.
GrayImage normalize(const GrayImage& img, double target_mean, double target_variance);

GrayImage apply_preprocess(const GrayImage& img, const PreprocessMode& mode);

} // namespace fpdetect
