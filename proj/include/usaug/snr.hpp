#pragma once

#include "usaug/grid.hpp"

namespace usaug {

// Band-passed even component and the two odd Riesz components of the
// monogenic signal.
struct MonogenicSignal {
    ImageGrid even;         // f_e
    ImageGrid odd_lateral;  // f_o1, Riesz response along columns
    ImageGrid odd_axial;    // f_o2, Riesz response along rows
};

struct SnrParams {
    double i_b = 1.0;            // bone scaling factor
    double i_bg = 1.0;           // background scaling factor
    double wavelength = 20.0;    // log-Gabor center wavelength, pixels
    double sigma_onf = 0.55;     // bandwidth ratio, in (0, 1)
    double epsilon_scale = 1e-3; // normalization floor as a fraction of max LE
    double mask_blur_sigma = 0.0; // optional feathering of the bone mask
};

// Frequency-domain construction: the spectrum is weighted by a radial
// log-Gabor transfer G(w) = exp(-log^2(w/w0) / (2 log^2 sigma_onf)) with
// w0 = 1/wavelength and G(0) = 0; the odd components apply the Riesz
// multipliers (-i u/|u|, -i v/|u|), zero at DC. Real parts of the inverse
// transforms are returned. Throws DegenerateImage when a side is < 4 px.
MonogenicSignal monogenic(const BModeImage& image, double wavelength, double sigma_onf);

// LE = f_e^2 + f_o1^2 + f_o2^2, pointwise.
ImageGrid local_energy(const MonogenicSignal& m);

// Normalizes the image by its local energy, rescales by the regionally
// tuned map S = i_b * M + i_bg * (1 - M) and clamps:
//   out = clamp(image * (LE * S) / (LE + eps), 0, 1)
// with eps = epsilon_scale * max(LE). The mask is returned unchanged.
Sample snr_augment(const Sample& sample, const SnrParams& params);

}  // namespace usaug
