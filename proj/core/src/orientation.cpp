#include "fpdetect/orientation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpdetect {

GradientField sobel_gradients(const GrayImage& img, const CandidateMask& mask) {
    if (img.width() != mask.width() || img.height() != mask.height())
        throw std::invalid_argument("sobel_gradients: image/mask dimension mismatch");
    if (img.width() < 3 || img.height() < 3)
        throw std::invalid_argument("sobel_gradients: image smaller than 3x3");

    GradientField field(img.width(), img.height());
    for (int y = 1; y < img.height() - 1; ++y) {
        for (int x = 1; x < img.width() - 1; ++x) {
            if (mask(x, y) == 0) continue;
            const int nw = img(x - 1, y - 1), n = img(x, y - 1), ne = img(x + 1, y - 1);
            const int w = img(x - 1, y),                         e = img(x + 1, y);
            const int sw = img(x - 1, y + 1), s = img(x, y + 1), se = img(x + 1, y + 1);
            const int gx = (ne + 2 * e + se) - (nw + 2 * w + sw);
            const int gy = (sw + 2 * s + se) - (nw + 2 * n + ne);
            field.gx[field.index(x, y)] = static_cast<std::int16_t>(gx);
            field.gy[field.index(x, y)] = static_cast<std::int16_t>(gy);
        }
    }
    return field;
}

std::vector<BlockStats> block_average_gradients(const GradientField& field, int w) {
    if (w < 2)
        throw std::invalid_argument("block_average_gradients: block size must be >= 2");
    const int blocks_x = field.width / w;
    const int blocks_y = field.height / w;
    if (blocks_x == 0 || blocks_y == 0)
        throw std::invalid_argument("block_average_gradients: field smaller than one block");

    std::vector<BlockStats> stats;
    stats.reserve(static_cast<std::size_t>(blocks_x) * blocks_y);
    const double denom = static_cast<double>(w) * w;
    for (int by = 0; by < blocks_y; ++by) {
        for (int bx = 0; bx < blocks_x; ++bx) {
            BlockStats b;
            b.block_x = bx;
            b.block_y = by;
            for (int y = by * w; y < (by + 1) * w; ++y) {
                for (int x = bx * w; x < (bx + 1) * w; ++x) {
                    const std::int64_t gx = field.gx[field.index(x, y)];
                    const std::int64_t gy = field.gy[field.index(x, y)];
                    b.sum_gx2 += gx * gx - gy * gy;
                    b.sum_gy2 += 2 * gx * gy;
                }
            }
            b.avg_gx2 = static_cast<double>(b.sum_gx2) / denom;
            b.avg_gy2 = static_cast<double>(b.sum_gy2) / denom;
            if (b.has_orientation())
                b.theta = estimate_theta(b.avg_gx2, b.avg_gy2);
            stats.push_back(b);
        }
    }
    return stats;
}

double estimate_theta(double avg_gx2, double avg_gy2) {
    if (avg_gx2 == 0.0 && avg_gy2 == 0.0)
        throw std::invalid_argument("estimate_theta: no orientation for zero vector");
    constexpr double half_pi = std::numbers::pi / 2.0;
    double a;
    if (avg_gx2 == 0.0)
        a = avg_gy2 > 0.0 ? half_pi : -half_pi; // arctangent limit convention
    else
        a = std::atan(avg_gy2 / avg_gx2);
    return a < 0.0 ? a / 2.0 + half_pi : a / 2.0 - half_pi;
}

int count_feature_blocks(const std::vector<BlockStats>& stats) {
    int count = 0;
    for (const BlockStats& b : stats)
        if (b.has_orientation()) ++count;
    return count;
}

} // namespace fpdetect
