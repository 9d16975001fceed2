#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpdetect {

/// Row-major 2-D grid of cells. Base for the concrete image types below.
template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(int width, int height, T fill = T{})
        : width_(width), height_(height) {
        check_dims(width, height);
        cells_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    Grid(int width, int height, std::vector<T> cells)
        : width_(width), height_(height), cells_(std::move(cells)) {
        check_dims(width, height);
        if (cells_.size() != static_cast<std::size_t>(width) * height)
            throw std::invalid_argument("Grid: cell count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return cells_.size(); }

    T operator()(int x, int y) const { return cells_[index(x, y)]; }
    T& operator()(int x, int y) { return cells_[index(x, y)]; }

    T at(int x, int y) const {
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::out_of_range("Grid: coordinate outside image");
        return cells_[index(x, y)];
    }

    const std::vector<T>& cells() const { return cells_; }
    std::vector<T>& cells() { return cells_; }

    bool same_dims(const Grid& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    static void check_dims(int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("Grid: dimensions must be positive");
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<T> cells_;
};

/// 8-bit grayscale frame, the currency of the whole pipeline.
/// Neighborhood-based stages (Sobel, crossing number) additionally require
/// at least 3x3; they check that themselves.
class GrayImage : public Grid<std::uint8_t> {
public:
    using Grid::Grid;
};

/// Ridge/background mask. 1 = ridge (dark foreground), 0 = background.
class BinaryImage : public Grid<std::uint8_t> {
public:
    BinaryImage() = default;

    BinaryImage(int width, int height, std::uint8_t fill = 0)
        : Grid(width, height, fill) {
        if (fill > 1) throw std::invalid_argument("BinaryImage: fill must be 0 or 1");
    }

    BinaryImage(int width, int height, std::vector<std::uint8_t> cells)
        : Grid(width, height, std::move(cells)) {
        for (std::uint8_t v : this->cells())
            if (v > 1) throw std::invalid_argument("BinaryImage: pixels must be 0 or 1");
    }
};

/// Per-pixel flags marking where gradients will be computed.
/// Border pixels are always 0.
class CandidateMask : public Grid<std::uint8_t> {
public:
    using Grid::Grid;
};

/// Signed Sobel responses. gx/gy are zero wherever the candidate mask was 0.
/// For 8-bit input the responses stay within +/- 4*255, so int16 is enough.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<std::int16_t> gx;
    std::vector<std::int16_t> gy;

    GradientField() = default;
    GradientField(int w, int h)
        : width(w), height(h),
          gx(static_cast<std::size_t>(w) * h, 0),
          gy(static_cast<std::size_t>(w) * h, 0) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("GradientField: dimensions must be positive");
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }
};

} // namespace fpdetect
