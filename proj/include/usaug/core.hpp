#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usaug/errors.hpp"
#include "usaug/grid.hpp"

namespace usaug {

// Checks the pair invariants (matching dimensions, finite intensities in
// [0, 1], mask values exactly 0 or 1) and builds a Sample. The mask comes
// in as a real grid so loaders can hand over raw normalized pixels.
Sample validate_pair(const ImageGrid& image, const ImageGrid& mask, std::string id);

struct Centroid {
    double row = 0.0;
    double col = 0.0;
};

// Arithmetic mean of the foreground pixel coordinates. Throws EmptyMask.
Centroid bone_centroid(const BoneMask& mask);

// Smallest foreground row per column; nullopt for columns without bone.
std::vector<std::optional<int>> column_tops(const BoneMask& mask);

// Normalized 1-D Gaussian taps, exp(-t^2 / 2 sigma^2) for t in
// [-(size-1)/2, (size-1)/2], summing to 1.
std::vector<double> gaussian_kernel(int kernel_size, double sigma);

// Separable 2-D Gaussian convolution with edge replication. kernel_size
// must be odd and >= 1, sigma > 0 (InvalidKernel otherwise).
ImageGrid gaussian_blur(const ImageGrid& grid, int kernel_size, double sigma);

// 1-D Gaussian smoothing along the lateral axis (across columns within
// each row), kernel truncated at +-3 sigma, edge replication.
ImageGrid gaussian_blur_lateral(const ImageGrid& grid, double sigma);

struct Components {
    Grid<int> labels;  // 0 = background, components numbered 1..count
    int count = 0;
};

// 8-connectivity labeling in raster-scan discovery order.
Components connected_components(const BoneMask& mask);

}  // namespace usaug
