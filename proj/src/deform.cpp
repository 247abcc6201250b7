#include "usaug/deform.hpp"

#include <cmath>

#include "usaug/core.hpp"
#include "usaug/errors.hpp"

namespace usaug {

namespace {

// Fills one column with the ramp of the deformation model: 0 at the
// surface, linear down to -d_probe at bone_top, constant below. bone_top
// may be fractional (warp-field case). bone_top <= 0 collapses the column
// to a constant -d_probe.
void fill_column(DisplacementField& field, int col, double bone_top, double d_probe) {
    for (int r = 0; r < field.height; ++r) {
        double v;
        if (r < bone_top) {
            v = -d_probe * static_cast<double>(r) / bone_top;
        } else {
            v = -d_probe;
        }
        field(r, col) = v;
    }
}

DisplacementField build_field(const BoneMask& mask, const DeformParams& params, bool inverse) {
    DisplacementField field(mask.height, mask.width, 0.0);
    auto tops = column_tops(mask);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < mask.width; ++c) {
        if (!tops[c]) continue;  // lateral tissue, no displacement in the probe frame
        double top = static_cast<double>(*tops[c]);
        if (inverse) top -= params.d_probe;
        fill_column(field, c, top, params.d_probe);
    }
    if (params.sigma_lateral > 0.0) {
        field = gaussian_blur_lateral(field, params.sigma_lateral);
    }
    return field;
}

}  // namespace

DisplacementField compute_displacement_field(const BoneMask& mask, const DeformParams& params) {
    return build_field(mask, params, false);
}

DisplacementField compute_warp_field(const BoneMask& mask, const DeformParams& params) {
    return build_field(mask, params, true);
}

BModeImage warp_axial(const BModeImage& image, const DisplacementField& field, Interp interp,
                      double fill) {
    if (!same_shape(image, field)) {
        throw DimensionMismatch("warp_axial: field dimensions do not match image");
    }
    BModeImage out(image.height, image.width);
    int h = image.height;
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < image.width; ++c) {
            double src = static_cast<double>(r) - field(r, c);
            double v;
            if (interp == Interp::nearest) {
                long rn = std::lround(src);
                v = (rn >= 0 && rn < h) ? image(static_cast<int>(rn), c) : fill;
            } else {
                double fl = std::floor(src);
                int r0 = static_cast<int>(fl);
                double frac = src - fl;
                double v0 = (r0 >= 0 && r0 < h) ? image(r0, c) : fill;
                double v1 = (r0 + 1 >= 0 && r0 + 1 < h) ? image(r0 + 1, c) : fill;
                v = (1.0 - frac) * v0 + frac * v1;
            }
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
            out(r, c) = v;
        }
    }
    return out;
}

BoneMask warp_axial_mask(const BoneMask& mask, const DisplacementField& field) {
    if (!same_shape(mask, field)) {
        throw DimensionMismatch("warp_axial_mask: field dimensions do not match mask");
    }
    BoneMask out(mask.height, mask.width, 0);
    int h = mask.height;
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            long rn = std::lround(static_cast<double>(r) - field(r, c));
            out(r, c) = (rn >= 0 && rn < h) ? mask(static_cast<int>(rn), c) : 0;
        }
    }
    return out;
}

Sample deform_augment(const Sample& sample, const DeformParams& params) {
    DisplacementField field = compute_warp_field(sample.mask, params);
    Sample out;
    out.image = warp_axial(sample.image, field, Interp::bilinear, 0.0);
    out.mask = warp_axial_mask(sample.mask, field);
    out.id = sample.id;
    return out;
}

}  // namespace usaug
