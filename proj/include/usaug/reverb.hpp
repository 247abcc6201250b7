#pragma once

#include "usaug/grid.hpp"

namespace usaug {

struct ReverbParams {
    double r_i = 0.0;          // reverberation intensity in [0, 1]
    int orders = 1;            // number of artifact repeats, >= 1
    bool per_component = false; // centroid and shift per connected bone
};

// Gaussian feathering of the shifted label, fixed at kernel 45 px,
// sigma 20 px.
inline constexpr int kReverbKernelSize = 45;
inline constexpr double kReverbSigma = 20.0;

struct ShiftedPatch {
    ImageGrid patch;  // masked image content translated down by shift_rows
    ImageGrid mask;   // the mask translated the same way, as reals for blurring
};

// Translates the masked image content down by shift_rows; content pushed
// past the last row is discarded, everything else is zero.
ShiftedPatch shift_patch(const BModeImage& image, const BoneMask& mask, int shift_rows);

// w_r = blur(shifted mask, 45, 20) * r_i, clamped to [0, r_i].
ImageGrid reverb_weights(const ImageGrid& shifted_mask, double r_i);

struct ReverbResult {
    Sample sample;
    bool empty_mask = false;  // warning: nothing to replicate, input returned unchanged
};

// Replicates the bone patch at multiples of the bone centroid depth y_c
// (echo order k lands at depth (k+1) * y_c) and blends it in with
// out = (1 - w_r) * out + w_r * patch, weight scaled by r_i^k per order.
// The mask is returned unchanged: the artifact is not bone.
ReverbResult reverb_augment(const Sample& sample, const ReverbParams& params);

}  // namespace usaug
