#pragma once

#include "usaug/grid.hpp"
#include "usaug/rng.hpp"

namespace usaug {

// Inclusive parameter range for uniform sampling. lo == hi pins the value.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

// Baseline affine + intensity transform parameters. Defaults are the identity.
// Scale and shear use factor semantics: 1 means no change.
struct AffineParams {
    double rotation_deg = 0.0;
    double translate_frac_x = 0.0;
    double translate_frac_y = 0.0;
    double scale_x = 1.0;
    double scale_y = 1.0;
    double shear_x = 1.0;
    double shear_y = 1.0;
    double brightness_delta = 0.0;
    bool flip_horizontal = false;
    bool flip_vertical = false;
};

struct ClassicalRanges {
    Range rotation_deg{-10.0, 10.0};
    Range translate_frac_x{-0.2, 0.2};
    Range translate_frac_y{-0.2, 0.2};
    Range scale_x{1.0, 1.0};
    Range scale_y{1.0, 1.0};
    Range shear_x{1.0, 1.0};
    Range shear_y{1.0, 1.0};
    Range brightness_delta{-0.2, 0.2};
    double flip_horizontal_prob = 0.5;
    double flip_vertical_prob = 0.0;
};

// Applies one composed affine map about the image center (flip first, then
// scale, shear, rotation, translation), bilinear for the image and nearest
// for the mask, both with fill 0, then additive brightness clamped to [0, 1].
Sample affine_augment(const Sample& sample, const AffineParams& p);

// Draws each parameter uniformly from its range, then the flip decisions.
// Draw order is fixed: rotation, translation x/y, scale x/y, shear x/y,
// brightness, horizontal flip, vertical flip (10 draws total).
AffineParams sample_classical(RngStream& rng, const ClassicalRanges& ranges);

}  // namespace usaug
