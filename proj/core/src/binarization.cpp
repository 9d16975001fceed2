#include "fpdetect/binarization.hpp"

#include <stdexcept>

namespace fpdetect {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Between-class variance at split t, as the exact fraction
//   (s0*N - S*n0)^2 / (n0 * (N - n0))
// (a positive rescaling of the usual w0*w1*(mu0-mu1)^2, constant across t).
struct VarianceFraction {
    u128 num = 0;
    u64 den = 1;
};

// Exact comparison of a.num/a.den vs b.num/b.den. Splitting into quotient
// and remainder keeps every product inside 128 bits: remainders are < den,
// so r * other_den < 2^128 for any image under ~2^28 pixels.
int compare(const VarianceFraction& a, const VarianceFraction& b) {
    const u128 qa = a.num / a.den;
    const u128 qb = b.num / b.den;
    if (qa != qb) return qa < qb ? -1 : 1;
    const u128 ra = (a.num % a.den) * b.den;
    const u128 rb = (b.num % b.den) * a.den;
    if (ra != rb) return ra < rb ? -1 : 1;
    return 0;
}

} // namespace

Histogram intensity_histogram(const GrayImage& img) {
    Histogram hist{};
    for (std::uint8_t v : img.cells()) ++hist[v];
    return hist;
}

int otsu_threshold(const Histogram& hist) {
    std::int64_t n_total = 0;
    std::int64_t sum_total = 0;
    int distinct = 0;
    for (int v = 0; v < 256; ++v) {
        if (hist[v] > 0) ++distinct;
        n_total += hist[v];
        sum_total += static_cast<std::int64_t>(v) * hist[v];
    }
    if (distinct < 2)
        throw std::invalid_argument("otsu_threshold: degenerate single-valued histogram");

    VarianceFraction best;
    int best_t = 0;
    bool have_best = false;

    std::int64_t n0 = 0;
    std::int64_t s0 = 0;
    for (int t = 0; t <= 254; ++t) {
        n0 += hist[t];
        s0 += static_cast<std::int64_t>(t) * hist[t];
        const std::int64_t n1 = n_total - n0;
        if (n0 == 0 || n1 == 0) continue;

        const std::int64_t diff = s0 * n_total - sum_total * n0;
        const u128 mag = diff >= 0 ? static_cast<u128>(diff)
                                   : static_cast<u128>(-diff);
        VarianceFraction f{mag * mag, static_cast<u64>(n0) * static_cast<u64>(n1)};
        if (!have_best || compare(f, best) > 0) {
            best = f;
            best_t = t;
            have_best = true;
        }
    }
    return best_t;
}

int otsu_threshold(const GrayImage& img) {
    return otsu_threshold(intensity_histogram(img));
}

OtsuStats otsu_stats(const GrayImage& img) {
    const Histogram hist = intensity_histogram(img);
    const double n = static_cast<double>(img.size());

    double mean = 0.0;
    for (int v = 0; v < 256; ++v) mean += static_cast<double>(v) * hist[v];
    mean /= n;
    double total = 0.0;
    for (int v = 0; v < 256; ++v)
        total += (v - mean) * (v - mean) * static_cast<double>(hist[v]);
    total /= n;

    OtsuStats stats;
    stats.total_variance = total;
    if (total == 0.0) return stats; // constant image: no split to score

    stats.threshold = otsu_threshold(hist);
    double n0 = 0.0, s0 = 0.0;
    for (int v = 0; v <= stats.threshold; ++v) {
        n0 += static_cast<double>(hist[v]);
        s0 += static_cast<double>(v) * hist[v];
    }
    const double n1 = n - n0;
    double s1 = 0.0;
    for (int v = stats.threshold + 1; v < 256; ++v)
        s1 += static_cast<double>(v) * hist[v];
    const double mu0 = s0 / n0;
    const double mu1 = s1 / n1;
    stats.between_class_variance = (n0 / n) * (n1 / n) * (mu0 - mu1) * (mu0 - mu1);
    return stats;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
    BinaryImage out(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i)
        out.cells()[i] = img.cells()[i] <= threshold ? 1 : 0;
    return out;
}

int choose_threshold(const GrayImage& img, const ThresholdPolicy& policy) {
    policy.validate();
    const std::int64_t pixels = static_cast<std::int64_t>(img.size());
    if (pixels > policy.large_image_pixel_cutoff)
        return policy.fixed_threshold;
    try {
        return otsu_threshold(img);
    } catch (const std::invalid_argument&) {
        return policy.fixed_threshold;
    }
}

} // namespace fpdetect
