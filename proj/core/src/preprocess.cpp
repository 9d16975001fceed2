#include "fpdetect/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace fpdetect {

GrayImage low_pass_filter(const GrayImage& img) {
    const int w = img.width();
    const int h = img.height();
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int sum = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                const int yy = std::clamp(y + dy, 0, h - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xx = std::clamp(x + dx, 0, w - 1);
                    sum += img(xx, yy);
                }
            }
            // round(sum/9) half up; sum <= 9*255 so this stays in range
            out(x, y) = static_cast<std::uint8_t>((sum + 4) / 9);
        }
    }
    return out;
}

GrayImage histogram_equalize(const GrayImage& img) {
    std::array<std::int64_t, 256> hist{};
    for (std::uint8_t v : img.cells()) ++hist[v];

    const std::int64_t n = static_cast<std::int64_t>(img.size());
    std::int64_t cdf_min = 0;
    for (int v = 0; v < 256; ++v) {
        if (hist[v] > 0) {
            cdf_min = hist[v];
            break;
        }
    }
    if (cdf_min == n) return img; // constant image: degenerate CDF, keep as is

    std::array<std::uint8_t, 256> remap{};
    std::int64_t cdf = 0;
    const std::int64_t den = n - cdf_min;
    for (int v = 0; v < 256; ++v) {
        cdf += hist[v];
        if (hist[v] == 0) continue;
        const std::int64_t num = 255 * (cdf - cdf_min);
        remap[v] = static_cast<std::uint8_t>((2 * num + den) / (2 * den));
    }

    GrayImage out(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i)
        out.cells()[i] = remap[img.cells()[i]];
    return out;
}

GrayImage normalize(const GrayImage& img, double target_mean, double target_variance) {
    if (!(target_variance > 0.0))
        throw std::invalid_argument("normalize: target_variance must be positive");

    const double n = static_cast<double>(img.size());
    double sum = 0.0;
    for (std::uint8_t v : img.cells()) sum += v;
    const double mean = sum / n;

    double sq = 0.0;
    for (std::uint8_t v : img.cells()) {
        const double d = v - mean;
        sq += d * d;
    }
    const double variance = sq / n;
    if (variance == 0.0)
        throw std::invalid_argument("normalize: image has zero variance");

    GrayImage out(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double d = img.cells()[i] - mean;
        const double dev = std::sqrt(target_variance * d * d / variance);
        const double v = d >= 0.0 ? target_mean + dev : target_mean - dev;
        out.cells()[i] = static_cast<std::uint8_t>(
            std::clamp<long>(std::lround(v), 0, 255));
    }
    return out;
}

GrayImage apply_preprocess(const GrayImage& img, const PreprocessMode& mode) {
    return std::visit(
        [&](const auto& m) -> GrayImage {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, LowPass>) return low_pass_filter(img);
            else if constexpr (std::is_same_v<M, HistogramEqualize>) return histogram_equalize(img);
            else return normalize(img, m.target_mean, m.target_variance);
        },
        mode);
}

} // namespace fpdetect
