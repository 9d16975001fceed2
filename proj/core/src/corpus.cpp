#include "fpdetect/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fpdetect/imageio.hpp"

namespace fs = std::filesystem;

namespace fpdetect {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// salt_pepper impulse density. Sparse by design: the pattern models isolated
// dead/saturated sensor cells, and it must stay well below the block
// occupancy a real ridge field produces.
constexpr double kSaltPepperDensity = 0.002;

// uniform-speckle density. Same sparse regime as salt_pepper but the stuck
// cells take uniform values over the full range instead of the extremes.
// Density stays low for the same reason: a frame carpeted in independent
// per-pixel noise is indistinguishable from ridge texture to a block
// occupancy detector (every block ends up with candidate pixels).
constexpr double kUniformSpeckleDensity = 0.004;

// blobs lattice spacing in pixels; larger spacing = smoother, lower
// frequency blotches.
constexpr int kBlobSpacing = 48;

std::uint8_t quantize(double v) {
    return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

const char* to_string(FrameLabel label) {
    return label == FrameLabel::FingerprintPresent ? "present" : "absent";
}

std::optional<FrameLabel> parse_label(const std::string& text) {
    if (text == "present") return FrameLabel::FingerprintPresent;
    if (text == "absent") return FrameLabel::FingerprintAbsent;
    return std::nullopt;
}

const char* to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::SaltPepper: return "salt_pepper";
        case NoiseKind::Uniform: return "uniform";
        case NoiseKind::Blobs: return "blobs";
        case NoiseKind::DeadLines: return "dead_lines";
    }
    return "unknown";
}

std::optional<NoiseKind> parse_noise_kind(const std::string& text) {
    if (text == "salt_pepper") return NoiseKind::SaltPepper;
    if (text == "uniform") return NoiseKind::Uniform;
    if (text == "blobs") return NoiseKind::Blobs;
    if (text == "dead_lines") return NoiseKind::DeadLines;
    return std::nullopt;
}

LabeledFrame gen_ridge_pattern(int width, int height, int period,
                               OrientationStyle style, std::uint64_t seed,
                               double angle) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("gen_ridge_pattern: dimensions must be positive");
    if (period < 4 || period > std::min(width, height) / 4)
        throw std::invalid_argument("gen_ridge_pattern: period outside [4, min(w,h)/4]");

    SplitMix64 rng(seed);
    GrayImage img(width, height);

    double cx = 0.0, cy = 0.0;
    if (style == OrientationStyle::Whorl) {
        // whorl core near the frame center, seeded within +/-10% of each dim
        cx = width / 2.0 + (rng.next_unit() - 0.5) * 0.2 * width;
        cy = height / 2.0 + (rng.next_unit() - 0.5) * 0.2 * height;
    }
    const double ca = std::cos(angle);
    const double sa = std::sin(angle);

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double phi = style == OrientationStyle::ConstantAngle
                                   ? x * ca + y * sa
                                   : std::hypot(x - cx, y - cy);
            const double amplitude = 100.0 * (0.9 + 0.2 * rng.next_unit());
            img(x, y) = quantize(128.0 + amplitude * std::cos(kTwoPi * phi / period));
        }
    }

    LabeledFrame frame;
    frame.image = std::move(img);
    frame.label = FrameLabel::FingerprintPresent;
    frame.seed = seed;
    if (style == OrientationStyle::ConstantAngle)
        frame.generator = "ridge(style=constant,period=" + std::to_string(period) +
                          ",angle=" + format_double(angle) + ")";
    else
        frame.generator = "ridge(style=whorl,period=" + std::to_string(period) + ")";
    return frame;
}

namespace {

GrayImage gen_salt_pepper(int width, int height, SplitMix64& rng) {
    GrayImage img(width, height, 128);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double u = rng.next_unit();
            if (u < kSaltPepperDensity / 2) img(x, y) = 0;
            else if (u < kSaltPepperDensity) img(x, y) = 255;
        }
    }
    return img;
}

GrayImage gen_uniform(int width, int height, SplitMix64& rng) {
    GrayImage img(width, height, 128);
    for (auto& v : img.cells())
        if (rng.next_unit() < kUniformSpeckleDensity)
            v = static_cast<std::uint8_t>(rng.next_below(256));
    return img;
}

GrayImage gen_blobs(int width, int height, SplitMix64& rng) {
    const int nx = width / kBlobSpacing + 2;
    const int ny = height / kBlobSpacing + 2;
    std::vector<double> lattice(static_cast<std::size_t>(nx) * ny);
    for (auto& v : lattice) v = rng.next_unit();

    GrayImage img(width, height);
    for (int y = 0; y < height; ++y) {
        const double fy = static_cast<double>(y) / kBlobSpacing;
        const int iy = static_cast<int>(fy);
        const double ty = fy - iy;
        for (int x = 0; x < width; ++x) {
            const double fx = static_cast<double>(x) / kBlobSpacing;
            const int ix = static_cast<int>(fx);
            const double tx = fx - ix;
            const auto at = [&](int gx, int gy) {
                return lattice[static_cast<std::size_t>(gy) * nx + gx];
            };
            const double v = at(ix, iy) * (1 - tx) * (1 - ty) +
                             at(ix + 1, iy) * tx * (1 - ty) +
                             at(ix, iy + 1) * (1 - tx) * ty +
                             at(ix + 1, iy + 1) * tx * ty;
            img(x, y) = quantize(28.0 + 200.0 * v);
        }
    }
    return img;
}

GrayImage gen_dead_lines(int width, int height, SplitMix64& rng) {
    GrayImage img(width, height, 128);
    const int rows = 1 + static_cast<int>(rng.next_below(3));
    const int cols = 1 + static_cast<int>(rng.next_below(3));
    for (int i = 0; i < rows; ++i) {
        const int y = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(height)));
        const std::uint8_t v = rng.next_below(2) ? 255 : 0;
        for (int x = 0; x < width; ++x) img(x, y) = v;
    }
    for (int i = 0; i < cols; ++i) {
        const int x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(width)));
        const std::uint8_t v = rng.next_below(2) ? 255 : 0;
        for (int y = 0; y < height; ++y) img(x, y) = v;
    }
    return img;
}

} // namespace

LabeledFrame gen_noise(int width, int height, NoiseKind kind, std::uint64_t seed) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("gen_noise: dimensions must be positive");
    SplitMix64 rng(seed);
    LabeledFrame frame;
    switch (kind) {
        case NoiseKind::SaltPepper: frame.image = gen_salt_pepper(width, height, rng); break;
        case NoiseKind::Uniform: frame.image = gen_uniform(width, height, rng); break;
        case NoiseKind::Blobs: frame.image = gen_blobs(width, height, rng); break;
        case NoiseKind::DeadLines: frame.image = gen_dead_lines(width, height, rng); break;
    }
    frame.label = FrameLabel::FingerprintAbsent;
    frame.seed = seed;
    frame.generator = std::string("noise(kind=") + to_string(kind) + ")";
    return frame;
}

std::optional<GrayImage> regenerate(const std::string& generator,
                                    std::uint64_t seed, int width, int height) {
    const auto param = [&](const std::string& key) -> std::optional<std::string> {
        const auto pos = generator.find(key + "=");
        if (pos == std::string::npos) return std::nullopt;
        const auto start = pos + key.size() + 1;
        const auto end = generator.find_first_of(",)", start);
        if (end == std::string::npos) return std::nullopt;
        return generator.substr(start, end - start);
    };

    try {
        if (generator.rfind("ridge(", 0) == 0) {
            const auto style = param("style");
            const auto period = param("period");
            if (!style || !period) return std::nullopt;
            if (*style == "constant") {
                const auto angle = param("angle");
                if (!angle) return std::nullopt;
                return gen_ridge_pattern(width, height, std::stoi(*period),
                                         OrientationStyle::ConstantAngle, seed,
                                         std::stod(*angle))
                    .image;
            }
            if (*style == "whorl")
                return gen_ridge_pattern(width, height, std::stoi(*period),
                                         OrientationStyle::Whorl, seed)
                    .image;
            return std::nullopt;
        }
        if (generator.rfind("noise(", 0) == 0) {
            const auto kind_text = param("kind");
            if (!kind_text) return std::nullopt;
            const auto kind = parse_noise_kind(*kind_text);
            if (!kind) return std::nullopt;
            return gen_noise(width, height, *kind, seed).image;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<LabeledFrame> make_ridge_set(int count, int width, int height,
                                         std::uint64_t base_seed) {
    std::vector<LabeledFrame> frames;
    frames.reserve(count);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        if (i % 2 == 0) {
            const double angle = (i / 2 % 12) * (std::numbers::pi / 12.0);
            frames.push_back(gen_ridge_pattern(width, height, 8,
                                               OrientationStyle::ConstantAngle, seed,
                                               angle));
        } else {
            frames.push_back(
                gen_ridge_pattern(width, height, 8, OrientationStyle::Whorl, seed));
        }
    }
    return frames;
}

std::vector<LabeledFrame> make_noise_set(int count, int width, int height,
                                         std::uint64_t base_seed) {
    static constexpr NoiseKind kinds[] = {NoiseKind::SaltPepper, NoiseKind::Uniform,
                                          NoiseKind::Blobs, NoiseKind::DeadLines};
    std::vector<LabeledFrame> frames;
    frames.reserve(count);
    for (int i = 0; i < count; ++i)
        frames.push_back(gen_noise(width, height, kinds[i % 4],
                                   base_seed + static_cast<std::uint64_t>(i)));
    return frames;
}

std::vector<LabeledFrame> make_noise_kind_set(NoiseKind kind, int count, int width,
                                              int height, std::uint64_t base_seed) {
    std::vector<LabeledFrame> frames;
    frames.reserve(count);
    for (int i = 0; i < count; ++i)
        frames.push_back(
            gen_noise(width, height, kind, base_seed + static_cast<std::uint64_t>(i)));
    return frames;
}

std::vector<LabeledFrame> make_mixed_set(int count, int width, int height,
                                         std::uint64_t base_seed) {
    const int ridge_count = count - count / 2;
    std::vector<LabeledFrame> frames = make_ridge_set(ridge_count, width, height, base_seed);
    auto noise = make_noise_set(count / 2, width, height,
                                base_seed + static_cast<std::uint64_t>(ridge_count));
    frames.insert(frames.end(), std::make_move_iterator(noise.begin()),
                  std::make_move_iterator(noise.end()));
    return frames;
}

namespace {

std::string generator_tag(const std::string& generator) {
    if (generator.rfind("ridge(", 0) == 0) return "ridge";
    const auto pos = generator.find("kind=");
    if (pos != std::string::npos) {
        const auto end = generator.find_first_of(",)", pos);
        return generator.substr(pos + 5, end - pos - 5);
    }
    return "frame";
}

} // namespace

void write_corpus(const std::string& dir, std::vector<LabeledFrame>& frames) {
    fs::create_directories(dir);
    int index = 0;
    for (LabeledFrame& frame : frames) {
        if (frame.name.empty()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "frame_%04d", index);
            frame.name = std::string(buf) + "_" + generator_tag(frame.generator) + ".pgm";
        }
        save_pgm_file(frame.image, (fs::path(dir) / frame.name).string());
        ++index;
    }

    std::vector<const LabeledFrame*> ordered;
    ordered.reserve(frames.size());
    for (const auto& f : frames) ordered.push_back(&f);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->name < b->name; });

    std::ofstream manifest(fs::path(dir) / "manifest.tsv", std::ios::trunc);
    if (!manifest)
        throw std::runtime_error("write_corpus: cannot write manifest in '" + dir + "'");
    for (const auto* f : ordered)
        manifest << f->name << '\t' << to_string(f->label) << '\t' << f->generator
                 << '\t' << f->seed << '\n';
}

CorpusLoad load_corpus_dir(const std::string& dir) {
    CorpusLoad out;
    const fs::path root(dir);
    if (!fs::is_directory(root)) {
        out.errors.push_back("not a directory: " + dir);
        return out;
    }

    const fs::path manifest_path = root / "manifest.tsv";
    if (fs::exists(manifest_path)) {
        std::ifstream manifest(manifest_path);
        std::vector<std::array<std::string, 4>> rows;
        std::string line;
        while (std::getline(manifest, line)) {
            if (line.empty()) continue;
            std::array<std::string, 4> row;
            std::istringstream fields(line);
            if (!std::getline(fields, row[0], '\t') || !std::getline(fields, row[1], '\t') ||
                !std::getline(fields, row[2], '\t') || !std::getline(fields, row[3])) {
                out.errors.push_back("manifest: malformed line '" + line + "'");
                continue;
            }
            rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        for (const auto& row : rows) {
            LabeledFrame frame;
            frame.name = row[0];
            const auto label = parse_label(row[1]);
            frame.label = label.value_or(FrameLabel::FingerprintPresent);
            frame.generator = row[2];
            try {
                frame.seed = std::stoull(row[3]);
                frame.image = load_pgm_file((root / row[0]).string());
            } catch (const std::exception& e) {
                out.errors.push_back(row[0] + ": " + e.what());
                continue;
            }
            out.frames.push_back(std::move(frame));
        }
        return out;
    }

    // No manifest: scan for .pgm files; label by present/ or absent/ subdir.
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
        return a.lexically_relative(root).string() < b.lexically_relative(root).string();
    });
    for (const auto& file : files) {
        LabeledFrame frame;
        frame.name = file.lexically_relative(root).string();
        frame.generator = "external";
        frame.label = FrameLabel::FingerprintPresent;
        for (auto part = file.parent_path(); part != root && !part.empty();
             part = part.parent_path()) {
            if (part.filename() == "absent") frame.label = FrameLabel::FingerprintAbsent;
            if (part.filename() == "present") frame.label = FrameLabel::FingerprintPresent;
        }
        try {
            frame.image = load_pgm_file(file.string());
        } catch (const std::exception& e) {
            out.errors.push_back(frame.name + ": " + e.what());
            continue;
        }
        out.frames.push_back(std::move(frame));
    }
    return out;
}

} // namespace fpdetect
