#pragma once

#include <string>

#include "fpdetect/detector.hpp"

namespace fpdetect::cli {

/// Applies one `key=value` override to the config. Keys: block_size,
/// feature_threshold, roi_area_fraction, fixed_threshold,
/// large_image_pixel_cutoff, reference_width, reference_height,
/// scale_threshold_with_area. Throws std::invalid_argument on unknown keys
/// or unparseable values.
void apply_config_entry(DetectorConfig& config, const std::string& key,
                        const std::string& value);

/// Flat key=value config file; '#' starts a comment, blank lines skipped.
DetectorConfig load_config_file(const std::string& path,
                                DetectorConfig base = DetectorConfig{});

} // namespace fpdetect::cli
