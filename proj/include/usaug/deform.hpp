#pragma once

#include "usaug/grid.hpp"

namespace usaug {

struct DeformParams {
    double d_probe = 0.0;        // axial transducer displacement, pixels, >= 0
    double sigma_lateral = 15.0; // lateral smoothing width, pixels; 0 disables
};

// Per-pixel axial displacement in pixels, transducer frame; negative =
// toward the transducer. Values lie in [-d_probe, 0].
using DisplacementField = Grid<double>;

// Transducer-frame displacement field: 0 at the surface, ramping linearly
// to -d_probe at each column's bone top (and -d_probe at and below it);
// columns without bone stay 0. Smoothed along the lateral axis with
// sigma_lateral (skipped when 0). A bone top at row 0 yields the whole
// column at -d_probe.
DisplacementField compute_displacement_field(const BoneMask& mask, const DeformParams& params);

// Sampling field for the backward warp: the exact per-column inverse of
// the forward deformation above. Same ramp shape, with the bone top taken
// at its deformed position (y_bone - d_probe), so content at and below the
// deformed bone samples exactly d_probe rows deeper. Columns whose bone
// would be pushed past the transducer collapse to a pure -d_probe shift.
DisplacementField compute_warp_field(const BoneMask& mask, const DeformParams& params);

enum class Interp { bilinear, nearest };

// Backward mapping along the axial axis: out(r, c) = in(r - field(r, c), c).
// Source coordinates outside the grid take the fill value; output is
// clamped to [0, 1]. A zero field is the bit-exact identity.
BModeImage warp_axial(const BModeImage& image, const DisplacementField& field, Interp interp,
                      double fill);

// Nearest-neighbor variant for binary labels; out-of-range samples become
// background.
BoneMask warp_axial_mask(const BoneMask& mask, const DisplacementField& field);

// Probe-pressure deformation: the warp field is computed from the sample's
// mask, the image is warped bilinearly with fill 0 and the mask with
// nearest-neighbor so it stays binary.
Sample deform_augment(const Sample& sample, const DeformParams& params);

}  // namespace usaug
