#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpdetect/image.hpp"

namespace fpdetect {

/// Deterministic 64-bit generator (splitmix64). Frozen: corpora regenerate
/// byte-for-byte from (generator descriptor, seed, dims) on any platform
/// this library builds on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., bound-1}; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class FrameLabel { FingerprintPresent, FingerprintAbsent };

const char* to_string(FrameLabel label);
std::optional<FrameLabel> parse_label(const std::string& text);

enum class OrientationStyle { ConstantAngle, Whorl };
enum class NoiseKind { SaltPepper, Uniform, Blobs, DeadLines };

const char* to_string(NoiseKind kind);
std::optional<NoiseKind> parse_noise_kind(const std::string& text);

/// A generated or loaded frame plus its ground truth and provenance.
/// `generator` is a descriptor string sufficient (with seed and dims) to
/// regenerate synthetic frames exactly; loaded frames carry "external".
struct LabeledFrame {
    GrayImage image;
    FrameLabel label = FrameLabel::FingerprintPresent;
    std::string generator;
    std::uint64_t seed = 0;
    std::string name; // filename when loaded from / written to disk
};

/// Sinusoidal ridge pattern: 128 + A(x,y) * cos(2*pi*phi / period), where
/// phi advances along `angle` (ConstantAngle) or radially (Whorl) and
/// A carries mild seeded jitter around 100. Label: FingerprintPresent.
/// `angle` is the direction of intensity variation, so ridges run
/// perpendicular to it; ignored for Whorl.
/// Requires 4 <= period <= min(width, height)/4.
LabeledFrame gen_ridge_pattern(int width, int height, int period,
                               OrientationStyle style, std::uint64_t seed,
                               double angle = 0.0);

/// Structured sensor-noise frames, label FingerprintAbsent:
///   salt_pepper — sparse extreme pixels on mid-gray
///   uniform     — sparse pixels with uniform intensities on mid-gray
///   blobs       — low-frequency smooth random blotches
///   dead_lines  — mid-gray with a few full rows/columns at extremes
LabeledFrame gen_noise(int width, int height, NoiseKind kind, std::uint64_t seed);

/// Rebuilds a synthetic frame from its manifest descriptor. Returns nothing
/// for descriptors this library did not produce.
std::optional<GrayImage> regenerate(const std::string& generator,
                                    std::uint64_t seed, int width, int height);

/// Convenience corpus builders used by the CLI and the benchmark suites.
/// Frame i uses seed base_seed + i; ridge frames alternate constant-angle
/// and whorl styles; noise sets cycle through the four kinds.
std::vector<LabeledFrame> make_ridge_set(int count, int width, int height,
                                         std::uint64_t base_seed);
std::vector<LabeledFrame> make_noise_set(int count, int width, int height,
                                         std::uint64_t base_seed);
std::vector<LabeledFrame> make_noise_kind_set(NoiseKind kind, int count, int width,
                                              int height, std::uint64_t base_seed);
/// First half ridge, second half noise (ridge gets the extra frame when
/// count is odd).
std::vector<LabeledFrame> make_mixed_set(int count, int width, int height,
                                         std::uint64_t base_seed);

/// Writes frames as PGM plus a `manifest.tsv` (filename, label, generator,
/// seed — tab separated, one line per frame). Names frames
/// frame_NNNN_<generator-tag>.pgm when they carry no name yet.
void write_corpus(const std::string& dir, std::vector<LabeledFrame>& frames);

struct CorpusLoad {
    std::vector<LabeledFrame> frames;
    std::vector<std::string> errors; // per-file failures; loading continues
};

/// Loads every .pgm under `dir` in deterministic lexicographic order.
/// With a manifest.tsv present, labels and provenance come from it;
/// otherwise labels derive from a present/ or absent/ subdirectory name,
/// defaulting to present.
CorpusLoad load_corpus_dir(const std::string& dir);

} // namespace fpdetect
