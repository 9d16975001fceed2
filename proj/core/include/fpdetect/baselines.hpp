#pragma once

#include <cstdint>
#include <string>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Verdict of one comparison method. These detectors are documented
/// reconstructions of the classic brightness/histogram checks this library
/// is benchmarked against; only their qualitative failure modes matter.
struct BaselineVerdict {
    std::string method_name;
    bool present = false;
    double score = 0.0; // method-specific statistic
    std::int64_t elapsed_us = 0;
};

/// Method 2: present iff max-min intensity over the centered ROI reaches
/// min_range. score = the range.
BaselineVerdict detect_brightness_difference(const GrayImage& img,
                                             int min_range = 80,
                                             double roi_area_fraction = 2.0 / 3.0);

/// Method 1: split the ROI into grid x grid tiles; a tile is active when its
/// intensity range reaches min_range; present iff enough tiles are active.
/// score = active tile count.
BaselineVerdict detect_segmentation_brightness(const GrayImage& img,
                                               int grid = 4,
                                               int min_active_blocks = 12,
                                               int min_range = 80,
                                               double roi_area_fraction = 2.0 / 3.0);

/// Method 3: present iff Otsu between-class variance / total variance, a
/// bimodality statistic in [0,1], reaches bimodality_min. Constant images
/// are absent. score = the ratio.
BaselineVerdict detect_histogram_analysis(const GrayImage& img,
                                          double bimodality_min = 0.5);

/// Method 4: the method-2 brightness check restricted to a small central
/// zone (parameter variant, same code path).
BaselineVerdict detect_zone_brightness(const GrayImage& img,
                                       int min_range = 80,
                                       double zone_area_fraction = 0.25);

/// Method 5: the method-1 tile statistic read in reverse — present iff the
/// number of flat ("uncovered") tiles stays below a cap (parameter variant,
/// same tile scan). score = flat tile count.
BaselineVerdict detect_reverse_area(const GrayImage& img,
                                    int grid = 8,
                                    int max_inactive_blocks = 16,
                                    int min_range = 60,
                                    double roi_area_fraction = 2.0 / 3.0);

} // namespace fpdetect
