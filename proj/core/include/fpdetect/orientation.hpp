#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Averaged squared-gradient vector of one w x w block.
/// sum_gx2 / sum_gy2 are the integer sums of (gx^2 - gy^2) and (2*gx*gy);
/// the averages divide by w^2 in real arithmetic. theta is present exactly
/// when the integer sums are not both zero, and then lies in
/// [-pi/2, -pi/4] u [pi/4, pi/2] (the closure of the piecewise formula's
/// range; the +-pi/4 endpoints occur only when sum_gx2 == 0).
struct BlockStats {
    int block_x = 0;
    int block_y = 0;
    std::int64_t sum_gx2 = 0; // sum of gx^2 - gy^2 over the block
    std::int64_t sum_gy2 = 0; // sum of 2*gx*gy over the block
    double avg_gx2 = 0.0;
    double avg_gy2 = 0.0;
    std::optional<double> theta;

    bool has_orientation() const { return sum_gx2 != 0 || sum_gy2 != 0; }
};

/// Sobel responses at every masked pixel; (0,0) elsewhere. x grows right,
/// y grows down. Throws std::invalid_argument on dimension mismatch or
/// images smaller than 3x3.
GradientField sobel_gradients(const GrayImage& img, const CandidateMask& mask);

/// Averages squared-gradient vectors over a non-overlapping grid of
/// w x w blocks (stride w); partial blocks at the right/bottom edges are
/// discarded. Throws std::invalid_argument when the field holds no
/// complete block or w < 2.
std::vector<BlockStats> block_average_gradients(const GradientField& field, int w);

/// Ridge angle from the averaged squared-gradient vector:
///   a = atan(avg_gy2 / avg_gx2) in (-pi/2, pi/2), a = sign(avg_gy2)*pi/2
///   when avg_gx2 == 0; theta = a/2 + pi/2 if a < 0, else a/2 - pi/2.
/// Throws std::invalid_argument when both inputs are zero.
double estimate_theta(double avg_gx2, double avg_gy2);

/// Number of blocks whose squared-gradient sums are not both zero, i.e.
/// blocks carrying a defined orientation.
int count_feature_blocks(const std::vector<BlockStats>& stats);

} // namespace fpdetect
