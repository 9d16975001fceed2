#pragma once

#include <array>
#include <cstdint>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// The eight binary neighbors of a pixel, ordered P1 = east then
/// counter-clockwise: NE, N, NW, W, SW, S, SE. Any fixed cyclic order gives
/// the same crossing number; this one is frozen for reproducibility.
struct Neighborhood3x3 {
    std::array<std::uint8_t, 8> p{};
    std::uint8_t center = 0;
};

enum class RidgePixelClass {
    NonRidge,    // background pixel
    Ending,      // CN = 1
    Bifurcation, // CN = 3
    Crossing,    // CN = 4
    Other,       // CN = 0 or 2 (isolated interior / ridge continuation)
};

/// CN = (1/2) * sum |P_i - P_{i+1}| over the 8-cycle. Always integral:
/// 0/1 transitions around a cycle come in pairs.
int crossing_number(const Neighborhood3x3& nbh);

/// Class of a pixel given its binary value and crossing number.
/// Throws std::invalid_argument for cn outside [0,4].
RidgePixelClass classify_pixel(std::uint8_t center, int cn);

/// Reads the 8-neighborhood of (x, y); requires 1 <= x < w-1, 1 <= y < h-1.
Neighborhood3x3 neighborhood_at(const BinaryImage& bin, int x, int y);

/// Flags interior pixels whose value is 1 and whose CN is 1, 3 or 4 — the
/// set the detector computes gradients on. Border pixels stay 0.
/// Requires the image to be at least 3x3.
CandidateMask candidate_mask(const BinaryImage& bin);

} // namespace fpdetect
