#include <benchmark/benchmark.h>

#include "fpdetect/baselines.hpp"
#include "fpdetect/binarization.hpp"
#include "fpdetect/corpus.hpp"
#include "fpdetect/detector.hpp"
#include "fpdetect/orientation.hpp"
#include "fpdetect/preprocess.hpp"
#include "fpdetect/ridge_features.hpp"

using namespace fpdetect;

namespace {

const GrayImage& ridge_frame() {
    static const GrayImage img =
        gen_ridge_pattern(256, 360, 8, OrientationStyle::Whorl, 42).image;
    return img;
}

const GrayImage& noise_frame() {
    static const GrayImage img = gen_noise(256, 360, NoiseKind::SaltPepper, 42).image;
    return img;
}

} // namespace

static void BM_DetectRidgeFrame(benchmark::State& state) {
    const DetectorConfig config;
    for (auto _ : state) {
        auto res = detect(ridge_frame(), config);
        benchmark::DoNotOptimize(res.feature_count);
    }
}
BENCHMARK(BM_DetectRidgeFrame)->Unit(benchmark::kMillisecond);

static void BM_DetectNoiseFrame(benchmark::State& state) {
    const DetectorConfig config;
    for (auto _ : state) {
        auto res = detect(noise_frame(), config);
        benchmark::DoNotOptimize(res.feature_count);
    }
}
BENCHMARK(BM_DetectNoiseFrame)->Unit(benchmark::kMillisecond);

static void BM_LowPassFilter(benchmark::State& state) {
    for (auto _ : state) {
        auto out = low_pass_filter(ridge_frame());
        benchmark::DoNotOptimize(out.cells().data());
    }
}
BENCHMARK(BM_LowPassFilter)->Unit(benchmark::kMillisecond);

static void BM_OtsuThreshold(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(otsu_threshold(ridge_frame()));
    }
}
BENCHMARK(BM_OtsuThreshold)->Unit(benchmark::kMicrosecond);

static void BM_CandidateMask(benchmark::State& state) {
    const auto bin = binarize(low_pass_filter(ridge_frame()), 128);
    for (auto _ : state) {
        auto mask = candidate_mask(bin);
        benchmark::DoNotOptimize(mask.cells().data());
    }
}
BENCHMARK(BM_CandidateMask)->Unit(benchmark::kMillisecond);

static void BM_SobelGated(benchmark::State& state) {
    const auto filtered = low_pass_filter(ridge_frame());
    const auto mask = candidate_mask(binarize(filtered, 128));
    for (auto _ : state) {
        auto field = sobel_gradients(filtered, mask);
        benchmark::DoNotOptimize(field.gx.data());
    }
}
BENCHMARK(BM_SobelGated)->Unit(benchmark::kMillisecond);

static void BM_BrightnessBaseline(benchmark::State& state) {
    for (auto _ : state) {
        auto v = detect_brightness_difference(ridge_frame());
        benchmark::DoNotOptimize(v.present);
    }
}
BENCHMARK(BM_BrightnessBaseline)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
