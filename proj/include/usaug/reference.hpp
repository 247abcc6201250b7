#pragma once

#include "usaug/deform.hpp"
#include "usaug/grid.hpp"
#include "usaug/snr.hpp"

namespace usaug::reference {

// Serial, deliberately naive implementations kept as oracles for the
// OpenMP kernels and as baselines for the benchmark target.

// Direct 2-D convolution with the outer-product Gaussian kernel,
// edge replication.
ImageGrid gaussian_blur_direct(const ImageGrid& grid, int kernel_size, double sigma);

// Per-pixel field construction: every pixel rescans its column to decide
// bone / below bone / above bone. No smoothing.
DisplacementField displacement_field_direct(const BoneMask& mask, double d_probe);

// Plain serial backward warp.
BModeImage warp_axial_direct(const BModeImage& image, const DisplacementField& field,
                             Interp interp, double fill);

// Naive O(N^4) DFT-based monogenic signal; small grids only.
MonogenicSignal monogenic_direct(const BModeImage& image, double wavelength, double sigma_onf);

}  // namespace usaug::reference
