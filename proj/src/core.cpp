#include "usaug/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace usaug {

Sample validate_pair(const ImageGrid& image, const ImageGrid& mask, std::string id) {
    if (image.height < 1 || image.width < 1) {
        throw DimensionMismatch("image '" + id + "' is empty");
    }
    if (!same_shape(image, mask)) {
        throw DimensionMismatch("image/mask dimensions differ for '" + id + "': " +
                                std::to_string(image.height) + "x" + std::to_string(image.width) +
                                " vs " + std::to_string(mask.height) + "x" +
                                std::to_string(mask.width));
    }
    for (double v : image.data) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw NonFiniteIntensity("image '" + id + "' has intensity " + std::to_string(v) +
                                     " outside [0,1]");
        }
    }
    Sample s;
    s.image = image;
    s.mask = BoneMask(mask.height, mask.width);
    for (std::size_t i = 0; i < mask.data.size(); ++i) {
        double v = mask.data[i];
        if (v == 0.0) {
            s.mask.data[i] = 0;
        } else if (v == 1.0) {
            s.mask.data[i] = 1;
        } else {
            throw NonBinaryMask("mask '" + id + "' has value " + std::to_string(v) +
                                ", expected exactly 0 or 1");
        }
    }
    s.id = std::move(id);
    return s;
}

Centroid bone_centroid(const BoneMask& mask) {
    double sum_r = 0.0, sum_c = 0.0;
    std::size_t n = 0;
    for (int r = 0; r < mask.height; ++r) {
        const std::uint8_t* row = mask.row(r);
        for (int c = 0; c < mask.width; ++c) {
            if (row[c]) {
                sum_r += r;
                sum_c += c;
                ++n;
            }
        }
    }
    if (n == 0) throw EmptyMask("bone_centroid: mask has no foreground pixels");
    return {sum_r / static_cast<double>(n), sum_c / static_cast<double>(n)};
}

std::vector<std::optional<int>> column_tops(const BoneMask& mask) {
    std::vector<std::optional<int>> tops(mask.width);
    for (int c = 0; c < mask.width; ++c) {
        for (int r = 0; r < mask.height; ++r) {
            if (mask(r, c)) {
                tops[c] = r;
                break;
            }
        }
    }
    return tops;
}

std::vector<double> gaussian_kernel(int kernel_size, double sigma) {
    if (kernel_size < 1 || kernel_size % 2 == 0 || !(sigma > 0.0)) {
        throw InvalidKernel("gaussian kernel requires odd size >= 1 and sigma > 0, got size=" +
                            std::to_string(kernel_size) + " sigma=" + std::to_string(sigma));
    }
    int radius = kernel_size / 2;
    std::vector<double> w(kernel_size);
    double sum = 0.0;
    for (int t = -radius; t <= radius; ++t) {
        double v = std::exp(-(static_cast<double>(t) * t) / (2.0 * sigma * sigma));
        w[t + radius] = v;
        sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
}

namespace {

struct Box {
    int r0 = 0, r1 = -1, c0 = 0, c1 = -1;
    bool empty() const { return r1 < r0; }
};

Box nonzero_box(const ImageGrid& g) {
    Box b{g.height, -1, g.width, -1};
    for (int r = 0; r < g.height; ++r) {
        const double* row = g.row(r);
        for (int c = 0; c < g.width; ++c) {
            if (row[c] != 0.0) {
                b.r0 = std::min(b.r0, r);
                b.r1 = std::max(b.r1, r);
                b.c0 = std::min(b.c0, c);
                b.c1 = std::max(b.c1, c);
            }
        }
    }
    return b;
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

ImageGrid gaussian_blur(const ImageGrid& grid, int kernel_size, double sigma) {
    std::vector<double> w = gaussian_kernel(kernel_size, sigma);
    int radius = kernel_size / 2;
    int h = grid.height, wdt = grid.width;

    // The convolution support of a zero-outside-box input is the box grown
    // by the kernel radius, so passes run only over that window. For dense
    // grids the window is the whole grid and this is the plain separable
    // path.
    Box box = nonzero_box(grid);
    ImageGrid out(h, wdt, 0.0);
    if (box.empty()) return out;

    int cw0 = std::max(0, box.c0 - radius);
    int cw1 = std::min(wdt - 1, box.c1 + radius);
    int rw0 = std::max(0, box.r0 - radius);
    int rw1 = std::min(h - 1, box.r1 + radius);

    ImageGrid tmp(h, wdt, 0.0);
#pragma omp parallel for schedule(static)
    for (int r = box.r0; r <= box.r1; ++r) {
        const double* src = grid.row(r);
        double* dst = tmp.row(r);
        for (int c = cw0; c <= cw1; ++c) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t) {
                acc += w[t + radius] * src[clampi(c + t, 0, wdt - 1)];
            }
            dst[c] = acc;
        }
    }

#pragma omp parallel for schedule(static)
    for (int r = rw0; r <= rw1; ++r) {
        double* dst = out.row(r);
        for (int c = cw0; c <= cw1; ++c) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t) {
                acc += w[t + radius] * tmp(clampi(r + t, 0, h - 1), c);
            }
            dst[c] = acc;
        }
    }
    return out;
}

ImageGrid gaussian_blur_lateral(const ImageGrid& grid, double sigma) {
    if (!(sigma > 0.0)) {
        throw InvalidKernel("gaussian_blur_lateral requires sigma > 0");
    }
    int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> w = gaussian_kernel(2 * radius + 1, sigma);
    ImageGrid out(grid.height, grid.width);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < grid.height; ++r) {
        const double* src = grid.row(r);
        double* dst = out.row(r);
        for (int c = 0; c < grid.width; ++c) {
            double acc = 0.0;
            for (int t = -radius; t <= radius; ++t) {
                acc += w[t + radius] * src[clampi(c + t, 0, grid.width - 1)];
            }
            dst[c] = acc;
        }
    }
    return out;
}

Components connected_components(const BoneMask& mask) {
    Components result;
    result.labels = Grid<int>(mask.height, mask.width, 0);
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < mask.height; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            if (!mask(r, c) || result.labels(r, c)) continue;
            int label = ++result.count;
            stack.push_back({r, c});
            result.labels(r, c) = label;
            while (!stack.empty()) {
                auto [cr, cc] = stack.back();
                stack.pop_back();
                for (int dr = -1; dr <= 1; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        int nr = cr + dr, nc = cc + dc;
                        if (nr < 0 || nr >= mask.height || nc < 0 || nc >= mask.width) continue;
                        if (mask(nr, nc) && !result.labels(nr, nc)) {
                            result.labels(nr, nc) = label;
                            stack.push_back({nr, nc});
                        }
                    }
                }
            }
        }
    }
    return result;
}

}  // namespace usaug
