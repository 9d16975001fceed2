#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Parse failure while reading a binary PGM stream. The kind distinguishes
/// the three contract violations so callers can react to each.
class PgmError : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, MaxvalTooLarge, TruncatedPayload };

    PgmError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Binary PGM ("P5"), maxval <= 255. Header comments ('#' to end of line)
// are accepted on load and never written on save.
GrayImage load_pgm(std::istream& in);
GrayImage load_pgm(const std::vector<std::uint8_t>& bytes);
GrayImage load_pgm_file(const std::string& path);

// Canonical P5 encoding: "P5\n<w> <h>\n255\n" followed by the row-major payload.
std::vector<std::uint8_t> save_pgm(const GrayImage& img);
void save_pgm_file(const GrayImage& img, const std::string& path);

// Headerless row-major frames, one byte per pixel; dimensions out of band.
GrayImage load_raw(const std::vector<std::uint8_t>& bytes, int width, int height);
std::vector<std::uint8_t> save_raw(const GrayImage& img);

/// Centered crop covering approximately `area_fraction` of the source area.
/// Each dimension scales by sqrt(area_fraction) and rounds to the nearest
/// pixel; offsets are floor((dim - dim')/2). area_fraction = 1 returns the
/// image unchanged. Throws std::invalid_argument if the crop falls below 3x3.
GrayImage center_roi(const GrayImage& img, double area_fraction);

/// Crop dimensions center_roi would produce, without touching pixels.
std::pair<int, int> roi_dims(int width, int height, double area_fraction);

} // namespace fpdetect
