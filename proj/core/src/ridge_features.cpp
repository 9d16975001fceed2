#include "fpdetect/ridge_features.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fpdetect {

int crossing_number(const Neighborhood3x3& nbh) {
    int transitions = 0;
    for (int i = 0; i < 8; ++i) {
        const int a = nbh.p[i];
        const int b = nbh.p[(i + 1) % 8];
        transitions += std::abs(a - b);
    }
    return transitions / 2;
}

RidgePixelClass classify_pixel(std::uint8_t center, int cn) {
    if (cn < 0 || cn > 4)
        throw std::invalid_argument("classify_pixel: cn outside [0,4]");
    if (center == 0) return RidgePixelClass::NonRidge;
    switch (cn) {
        case 1: return RidgePixelClass::Ending;
        case 3: return RidgePixelClass::Bifurcation;
        case 4: return RidgePixelClass::Crossing;
        default: return RidgePixelClass::Other;
    }
}

Neighborhood3x3 neighborhood_at(const BinaryImage& bin, int x, int y) {
    if (x < 1 || x >= bin.width() - 1 || y < 1 || y >= bin.height() - 1)
        throw std::out_of_range("neighborhood_at: pixel has no full 3x3 window");
    Neighborhood3x3 nbh;
    nbh.center = bin(x, y);
    // P1 east, then counter-clockwise (y axis points down)
    nbh.p = {bin(x + 1, y),     bin(x + 1, y - 1), bin(x, y - 1),
             bin(x - 1, y - 1), bin(x - 1, y),     bin(x - 1, y + 1),
             bin(x, y + 1),     bin(x + 1, y + 1)};
    return nbh;
}

CandidateMask candidate_mask(const BinaryImage& bin) {
    if (bin.width() < 3 || bin.height() < 3)
        throw std::invalid_argument("candidate_mask: image smaller than 3x3");
    CandidateMask mask(bin.width(), bin.height());
    for (int y = 1; y < bin.height() - 1; ++y) {
        for (int x = 1; x < bin.width() - 1; ++x) {
            if (bin(x, y) == 0) continue;
            const int cn = crossing_number(neighborhood_at(bin, x, y));
            if (cn == 1 || cn == 3 || cn == 4) mask(x, y) = 1;
        }
    }
    return mask;
}

} // namespace fpdetect
