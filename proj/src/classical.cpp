#include "usaug/classical.hpp"

#include <algorithm>
#include <cmath>

#include "usaug/errors.hpp"

namespace usaug {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Mat2 {
    double a, b, c, d;  // row-major [[a, b], [c, d]]
};

Mat2 mul(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

// Forward map: q = C + M (p - C) + t, with M = R * Sh * Sc * F.
// Returns the inverse matrix so pixels can be pulled from the source.
Mat2 inverse_matrix(const AffineParams& p) {
    const double theta = p.rotation_deg * kPi / 180.0;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const Mat2 rot{ct, -st, st, ct};
    const Mat2 shear{1.0, p.shear_x - 1.0, p.shear_y - 1.0, 1.0};
    const Mat2 scale{p.scale_x, 0.0, 0.0, p.scale_y};
    const Mat2 flip{p.flip_horizontal ? -1.0 : 1.0, 0.0, 0.0,
                    p.flip_vertical ? -1.0 : 1.0};
    const Mat2 m = mul(mul(mul(rot, shear), scale), flip);
    const double det = m.a * m.d - m.b * m.c;
    if (det == 0.0) throw ProcessingError("affine transform is singular");
    const double inv = 1.0 / det;
    return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

double sample_bilinear(const ImageGrid& img, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0;
    const double fy = y - y0;
    auto at = [&](int yy, int xx) -> double {
        if (yy < 0 || yy >= img.height || xx < 0 || xx >= img.width) return 0.0;
        return img(yy, xx);
    };
    const double v = (1.0 - fy) * ((1.0 - fx) * at(y0, x0) + fx * at(y0, x0 + 1)) +
                     fy * ((1.0 - fx) * at(y0 + 1, x0) + fx * at(y0 + 1, x0 + 1));
    return std::clamp(v, 0.0, 1.0);
}

std::uint8_t sample_nearest(const BoneMask& mask, double x, double y) {
    const long xi = std::lround(x);
    const long yi = std::lround(y);
    if (yi < 0 || yi >= mask.height || xi < 0 || xi >= mask.width) return 0;
    return mask(static_cast<int>(yi), static_cast<int>(xi));
}

}  // namespace

Sample affine_augment(const Sample& sample, const AffineParams& p) {
    const int h = sample.image.height;
    const int w = sample.image.width;
    const Mat2 inv = inverse_matrix(p);
    const double cx = (w - 1) / 2.0;
    const double cy = (h - 1) / 2.0;
    const double tx = p.translate_frac_x * w;
    const double ty = p.translate_frac_y * h;

    Sample out;
    out.id = sample.id;
    out.image = ImageGrid(h, w);
    out.mask = BoneMask(h, w);

#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const double dx = c - cx - tx;
            const double dy = r - cy - ty;
            const double sx = cx + inv.a * dx + inv.b * dy;
            const double sy = cy + inv.c * dx + inv.d * dy;
            double v = sample_bilinear(sample.image, sx, sy);
            v = std::clamp(v + p.brightness_delta, 0.0, 1.0);
            out.image(r, c) = v;
            out.mask(r, c) = sample_nearest(sample.mask, sx, sy);
        }
    }
    return out;
}

AffineParams sample_classical(RngStream& rng, const ClassicalRanges& ranges) {
    AffineParams p;
    p.rotation_deg = rng.uniform(ranges.rotation_deg.lo, ranges.rotation_deg.hi);
    p.translate_frac_x = rng.uniform(ranges.translate_frac_x.lo, ranges.translate_frac_x.hi);
    p.translate_frac_y = rng.uniform(ranges.translate_frac_y.lo, ranges.translate_frac_y.hi);
    p.scale_x = rng.uniform(ranges.scale_x.lo, ranges.scale_x.hi);
    p.scale_y = rng.uniform(ranges.scale_y.lo, ranges.scale_y.hi);
    p.shear_x = rng.uniform(ranges.shear_x.lo, ranges.shear_x.hi);
    p.shear_y = rng.uniform(ranges.shear_y.lo, ranges.shear_y.hi);
    p.brightness_delta = rng.uniform(ranges.brightness_delta.lo, ranges.brightness_delta.hi);
    p.flip_horizontal = rng.bernoulli(ranges.flip_horizontal_prob);
    p.flip_vertical = rng.bernoulli(ranges.flip_vertical_prob);
    return p;
}

}  // namespace usaug
