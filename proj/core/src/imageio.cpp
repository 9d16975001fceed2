#include "fpdetect/imageio.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace fpdetect {

namespace {

// Reads the next header token, skipping whitespace and '#' comment lines.
bool next_header_token(std::istream& in, std::string& token) {
    token.clear();
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF) return false;
    while (c != EOF && !std::isspace(c) && c != '#') {
        token.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c != EOF) in.unget(); // leave the delimiter for the caller
    return true;
}

int parse_header_int(std::istream& in, const char* field) {
    std::string tok;
    if (!next_header_token(in, tok))
        throw PgmError(PgmError::Kind::MalformedHeader,
                       std::string("pgm: missing ") + field);
    long value = 0;
    std::size_t pos = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || value < 0)
        throw PgmError(PgmError::Kind::MalformedHeader,
                       std::string("pgm: bad ") + field + " '" + tok + "'");
    if (value > std::numeric_limits<int>::max())
        throw PgmError(PgmError::Kind::MalformedHeader,
                       std::string("pgm: ") + field + " out of range");
    return static_cast<int>(value);
}

} // namespace

GrayImage load_pgm(std::istream& in) {
    std::string magic;
    if (!next_header_token(in, magic) || magic != "P5")
        throw PgmError(PgmError::Kind::MalformedHeader, "pgm: not a binary P5 stream");

    const int width = parse_header_int(in, "width");
    const int height = parse_header_int(in, "height");
    const int maxval = parse_header_int(in, "maxval");
    if (width < 1 || height < 1)
        throw PgmError(PgmError::Kind::MalformedHeader, "pgm: non-positive dimensions");
    if (maxval > 255)
        throw PgmError(PgmError::Kind::MaxvalTooLarge,
                       "pgm: maxval " + std::to_string(maxval) + " exceeds 255");
    if (maxval < 1)
        throw PgmError(PgmError::Kind::MalformedHeader, "pgm: maxval must be >= 1");

    // Exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        throw PgmError(PgmError::Kind::MalformedHeader, "pgm: missing payload separator");

    const std::size_t expected = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> pixels(expected);
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(expected));
    if (static_cast<std::size_t>(in.gcount()) != expected)
        throw PgmError(PgmError::Kind::TruncatedPayload,
                       "pgm: payload has " + std::to_string(in.gcount()) +
                           " of " + std::to_string(expected) + " bytes");
    return GrayImage(width, height, std::move(pixels));
}

GrayImage load_pgm(const std::vector<std::uint8_t>& bytes) {
    std::istringstream in(std::string(bytes.begin(), bytes.end()),
                          std::ios::binary);
    return load_pgm(in);
}

GrayImage load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return load_pgm(in);
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width()) + " " +
                         std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.cells().begin(), img.cells().end());
    return out;
}

void save_pgm_file(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    const auto bytes = save_pgm(img);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

GrayImage load_raw(const std::vector<std::uint8_t>& bytes, int width, int height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("load_raw: dimensions must be positive");
    if (bytes.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument(
            "load_raw: got " + std::to_string(bytes.size()) + " bytes, expected " +
            std::to_string(static_cast<std::size_t>(width) * height));
    return GrayImage(width, height, bytes);
}

std::vector<std::uint8_t> save_raw(const GrayImage& img) {
    return img.cells();
}

std::pair<int, int> roi_dims(int width, int height, double area_fraction) {
    if (!(area_fraction > 0.0) || area_fraction > 1.0)
        throw std::invalid_argument("center_roi: area_fraction must be in (0,1]");
    const double scale = std::sqrt(area_fraction);
    const int w = static_cast<int>(std::lround(width * scale));
    const int h = static_cast<int>(std::lround(height * scale));
    return {w, h};
}

GrayImage center_roi(const GrayImage& img, double area_fraction) {
    const auto [w, h] = roi_dims(img.width(), img.height(), area_fraction);
    if (w == img.width() && h == img.height())
        return img;
    if (w < 3 || h < 3)
        throw std::invalid_argument("center_roi: crop " + std::to_string(w) + "x" +
                                    std::to_string(h) + " is smaller than 3x3");
    const int x0 = (img.width() - w) / 2;
    const int y0 = (img.height() - h) / 2;
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            out(x, y) = img(x0 + x, y0 + y);
    return out;
}

} // namespace fpdetect
