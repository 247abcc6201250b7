#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "usaug/grid.hpp"
#include "usaug/rng.hpp"

namespace testutil {

using usaug::BoneMask;
using usaug::ImageGrid;
using usaug::Sample;

// Speckle-like background in [0.05, 0.45], deterministic per seed.
inline ImageGrid speckle(int h, int w, std::uint64_t seed) {
    usaug::RngStream rng(seed, 0, 0);
    ImageGrid img(h, w);
    for (auto& v : img.data) v = rng.uniform(0.05, 0.45);
    return img;
}

inline BoneMask rect_mask(int h, int w, int top, int bottom, int left, int right) {
    BoneMask mask(h, w, 0);
    for (int r = top; r <= bottom; ++r) {
        for (int c = left; c <= right; ++c) mask(r, c) = 1;
    }
    return mask;
}

inline BoneMask disk_mask(int h, int w, double cy, double cx, double radius) {
    BoneMask mask(h, w, 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            double dy = r - cy, dx = c - cx;
            if (dy * dy + dx * dx <= radius * radius) mask(r, c) = 1;
        }
    }
    return mask;
}

// Speckle background with the mask region brightened, like a bone surface.
inline Sample make_sample(int h, int w, const BoneMask& mask, std::uint64_t seed,
                          const std::string& id = "phantom") {
    Sample s;
    s.image = speckle(h, w, seed);
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        if (mask.data[i]) s.image.data[i] = std::min(1.0, s.image.data[i] + 0.5);
    }
    s.mask = mask;
    s.id = id;
    return s;
}

inline Sample rect_sample(int h, int w, int top, int bottom, int left, int right,
                          std::uint64_t seed = 7) {
    return make_sample(h, w, rect_mask(h, w, top, bottom, left, right), seed);
}

template <typename T>
inline double max_abs_diff(const usaug::Grid<T>& a, const usaug::Grid<T>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        m = std::max(m, std::abs(static_cast<double>(a.data[i]) - static_cast<double>(b.data[i])));
    }
    return m;
}

template <typename T>
inline bool bit_equal(const usaug::Grid<T>& a, const usaug::Grid<T>& b) {
    return a.height == b.height && a.width == b.width && a.data == b.data;
}

}  // namespace testutil
