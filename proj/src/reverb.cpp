#include "usaug/reverb.hpp"

#include <cmath>

#include "usaug/core.hpp"

namespace usaug {

ShiftedPatch shift_patch(const BModeImage& image, const BoneMask& mask, int shift_rows) {
    ShiftedPatch out;
    out.patch = ImageGrid(image.height, image.width, 0.0);
    out.mask = ImageGrid(image.height, image.width, 0.0);
    int last_src = image.height - 1 - shift_rows;
#pragma omp parallel for schedule(static)
    for (int r = 0; r <= last_src; ++r) {
        const std::uint8_t* mrow = mask.row(r);
        const double* irow = image.row(r);
        double* prow = out.patch.row(r + shift_rows);
        double* srow = out.mask.row(r + shift_rows);
        for (int c = 0; c < image.width; ++c) {
            if (mrow[c]) {
                prow[c] = irow[c];
                srow[c] = 1.0;
            }
        }
    }
    return out;
}

ImageGrid reverb_weights(const ImageGrid& shifted_mask, double r_i) {
    ImageGrid w = gaussian_blur(shifted_mask, kReverbKernelSize, kReverbSigma);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < w.height; ++r) {
        double* row = w.row(r);
        for (int c = 0; c < w.width; ++c) {
            double v = row[c] * r_i;
            if (v < 0.0) v = 0.0;
            if (v > r_i) v = r_i;
            row[c] = v;
        }
    }
    return w;
}

namespace {

void blend_patch(BModeImage& out, const BModeImage& source, const BoneMask& patch_mask,
                 double centroid_row, int orders, double r_i) {
    double order_intensity = 1.0;
    for (int k = 1; k <= orders; ++k) {
        order_intensity *= r_i;
        int shift = static_cast<int>(std::lround(k * centroid_row));
        if (shift >= out.height) break;  // pushed entirely past the image
        ShiftedPatch shifted = shift_patch(source, patch_mask, shift);
        ImageGrid w = reverb_weights(shifted.mask, order_intensity);
#pragma omp parallel for schedule(static)
        for (int r = 0; r < out.height; ++r) {
            double* orow = out.row(r);
            const double* prow = shifted.patch.row(r);
            const double* wrow = w.row(r);
            for (int c = 0; c < out.width; ++c) {
                double v = (1.0 - wrow[c]) * orow[c] + wrow[c] * prow[c];
                if (v < 0.0) v = 0.0;
                if (v > 1.0) v = 1.0;
                orow[c] = v;
            }
        }
    }
}

}  // namespace

ReverbResult reverb_augment(const Sample& sample, const ReverbParams& params) {
    if (foreground_count(sample.mask) == 0) {
        return {sample, true};
    }
    ReverbResult result;
    result.sample = sample;
    BModeImage& out = result.sample.image;

    if (params.per_component) {
        Components comps = connected_components(sample.mask);
        for (int label = 1; label <= comps.count; ++label) {
            BoneMask part(sample.mask.height, sample.mask.width, 0);
            for (std::size_t i = 0; i < part.data.size(); ++i) {
                part.data[i] = comps.labels.data[i] == label ? 1 : 0;
            }
            Centroid c = bone_centroid(part);
            blend_patch(out, sample.image, part, c.row, params.orders, params.r_i);
        }
    } else {
        Centroid c = bone_centroid(sample.mask);
        blend_patch(out, sample.image, sample.mask, c.row, params.orders, params.r_i);
    }
    return result;
}

}  // namespace usaug
