#include "config_file.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace fpdetect::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw std::invalid_argument("config: bad boolean '" + value + "'");
}

} // namespace

void apply_config_entry(DetectorConfig& config, const std::string& key,
                        const std::string& value) {
    try {
        if (key == "block_size") config.block_size = std::stoi(value);
        else if (key == "feature_threshold") config.feature_threshold = std::stoi(value);
        else if (key == "roi_area_fraction") config.roi_area_fraction = std::stod(value);
        else if (key == "fixed_threshold")
            config.threshold_policy.fixed_threshold = std::stoi(value);
        else if (key == "large_image_pixel_cutoff")
            config.threshold_policy.large_image_pixel_cutoff = std::stoll(value);
        else if (key == "reference_width") config.reference_size.first = std::stoi(value);
        else if (key == "reference_height") config.reference_size.second = std::stoi(value);
        else if (key == "scale_threshold_with_area")
            config.scale_threshold_with_area = parse_bool(value);
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad value '" + value + "' for key '" + key + "'");
    }
}

DetectorConfig load_config_file(const std::string& path, DetectorConfig base) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                        " is not key=value");
        apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

} // namespace fpdetect::cli
