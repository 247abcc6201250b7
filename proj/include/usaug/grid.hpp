#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace usaug {

// Row-major 2-D grid. Row 0 is the transducer surface, so rows run along
// the axial (depth) direction and columns along the lateral direction.
template <typename T>
struct Grid {
    int height = 0;
    int width = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int h, int w, T fill = T{})
        : height(h), width(w), data(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {}

    T& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
    const T& operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }

    T* row(int r) { return data.data() + static_cast<std::size_t>(r) * width; }
    const T* row(int r) const { return data.data() + static_cast<std::size_t>(r) * width; }

    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
};

template <typename A, typename B>
bool same_shape(const Grid<A>& a, const Grid<B>& b) {
    return a.height == b.height && a.width == b.width;
}

// Real intensities in [0, 1].
using ImageGrid = Grid<double>;
using BModeImage = Grid<double>;

// Binary bone labels, values exactly 0 or 1.
using BoneMask = Grid<std::uint8_t>;

// A validated image/mask pair. Construct through validate_pair().
struct Sample {
    BModeImage image;
    BoneMask mask;
    std::string id;
};

inline std::size_t foreground_count(const BoneMask& m) {
    std::size_t n = 0;
    for (auto v : m.data) n += v;
    return n;
}

}  // namespace usaug
