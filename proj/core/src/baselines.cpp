#include "fpdetect/baselines.hpp"

#include <algorithm>
#include <chrono>

#include "fpdetect/binarization.hpp"
#include "fpdetect/imageio.hpp"

namespace fpdetect {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
        .count();
}

int intensity_range(const GrayImage& img, int x0, int y0, int x1, int y1) {
    int lo = 255, hi = 0;
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            const int v = img(x, y);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo;
}

GrayImage roi_or_self(const GrayImage& img, double area_fraction) {
    // Frames too small to crop are scanned whole.
    try {
        return center_roi(img, area_fraction);
    } catch (const std::invalid_argument&) {
        return img;
    }
}

// Tiles with intensity range >= min_range ("active"), over a grid x grid split.
int active_tiles(const GrayImage& roi, int grid, int min_range) {
    int active = 0;
    for (int ty = 0; ty < grid; ++ty) {
        for (int tx = 0; tx < grid; ++tx) {
            const int x0 = tx * roi.width() / grid;
            const int x1 = (tx + 1) * roi.width() / grid;
            const int y0 = ty * roi.height() / grid;
            const int y1 = (ty + 1) * roi.height() / grid;
            if (x1 <= x0 || y1 <= y0) continue;
            if (intensity_range(roi, x0, y0, x1, y1) >= min_range) ++active;
        }
    }
    return active;
}

} // namespace

BaselineVerdict detect_brightness_difference(const GrayImage& img, int min_range,
                                             double roi_area_fraction) {
    const auto start = Clock::now();
    const GrayImage roi = roi_or_self(img, roi_area_fraction);
    const int range = intensity_range(roi, 0, 0, roi.width(), roi.height());
    BaselineVerdict v;
    v.method_name = "method2_brightness_difference";
    v.score = range;
    v.present = range >= min_range;
    v.elapsed_us = elapsed_us(start);
    return v;
}

BaselineVerdict detect_segmentation_brightness(const GrayImage& img, int grid,
                                               int min_active_blocks, int min_range,
                                               double roi_area_fraction) {
    if (grid < 2)
        throw std::invalid_argument("detect_segmentation_brightness: grid must be >= 2");
    const auto start = Clock::now();
    const GrayImage roi = roi_or_self(img, roi_area_fraction);
    const int active = active_tiles(roi, grid, min_range);
    BaselineVerdict v;
    v.method_name = "method1_segmentation_brightness";
    v.score = active;
    v.present = active >= min_active_blocks;
    v.elapsed_us = elapsed_us(start);
    return v;
}

BaselineVerdict detect_histogram_analysis(const GrayImage& img, double bimodality_min) {
    const auto start = Clock::now();
    const OtsuStats stats = otsu_stats(img);
    const double ratio = stats.total_variance > 0.0
                             ? stats.between_class_variance / stats.total_variance
                             : 0.0;
    BaselineVerdict v;
    v.method_name = "method3_histogram_analysis";
    v.score = ratio;
    v.present = stats.total_variance > 0.0 && ratio >= bimodality_min;
    v.elapsed_us = elapsed_us(start);
    return v;
}

BaselineVerdict detect_zone_brightness(const GrayImage& img, int min_range,
                                       double zone_area_fraction) {
    BaselineVerdict v = detect_brightness_difference(img, min_range, zone_area_fraction);
    v.method_name = "method4_zone_brightness";
    return v;
}

BaselineVerdict detect_reverse_area(const GrayImage& img, int grid,
                                    int max_inactive_blocks, int min_range,
                                    double roi_area_fraction) {
    if (grid < 2)
        throw std::invalid_argument("detect_reverse_area: grid must be >= 2");
    const auto start = Clock::now();
    const GrayImage roi = roi_or_self(img, roi_area_fraction);
    const int inactive = grid * grid - active_tiles(roi, grid, min_range);
    BaselineVerdict v;
    v.method_name = "method5_reverse_area";
    v.score = inactive;
    v.present = inactive <= max_inactive_blocks;
    v.elapsed_us = elapsed_us(start);
    return v;
}

} // namespace fpdetect
