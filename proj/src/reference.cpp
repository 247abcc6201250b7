#include "usaug/reference.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "usaug/core.hpp"
#include "usaug/errors.hpp"

namespace usaug::reference {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

inline int clampi(int v, int lo, int hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

inline double fft_freq(int k, int n) {
    return k < (n + 1) / 2 ? static_cast<double>(k) / n
                           : static_cast<double>(k - n) / n;
}

using Spectrum = std::vector<std::complex<double>>;

Spectrum dft2(const Spectrum& in, int h, int w, double sign) {
    Spectrum out(in.size());
    for (int u = 0; u < h; ++u) {
        for (int v = 0; v < w; ++v) {
            std::complex<double> acc(0.0, 0.0);
            for (int y = 0; y < h; ++y) {
                for (int x = 0; x < w; ++x) {
                    double angle = sign * kTwoPi *
                                   (static_cast<double>(u) * y / h + static_cast<double>(v) * x / w);
                    acc += in[static_cast<std::size_t>(y) * w + x] *
                           std::complex<double>(std::cos(angle), std::sin(angle));
                }
            }
            out[static_cast<std::size_t>(u) * w + v] = acc;
        }
    }
    return out;
}

}  // namespace

ImageGrid gaussian_blur_direct(const ImageGrid& grid, int kernel_size, double sigma) {
    auto k1 = gaussian_kernel(kernel_size, sigma);
    const int rad = kernel_size / 2;
    ImageGrid out(grid.height, grid.width);
    for (int r = 0; r < grid.height; ++r) {
        for (int c = 0; c < grid.width; ++c) {
            double acc = 0.0;
            for (int i = 0; i < kernel_size; ++i) {
                for (int j = 0; j < kernel_size; ++j) {
                    int rr = clampi(r + i - rad, 0, grid.height - 1);
                    int cc = clampi(c + j - rad, 0, grid.width - 1);
                    acc += k1[i] * k1[j] * grid(rr, cc);
                }
            }
            out(r, c) = acc;
        }
    }
    return out;
}

DisplacementField displacement_field_direct(const BoneMask& mask, double d_probe) {
    DisplacementField field(mask.height, mask.width);
    for (int r = 0; r < mask.height; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            int top = -1;
            for (int rr = 0; rr < mask.height; ++rr) {
                if (mask(rr, c)) {
                    top = rr;
                    break;
                }
            }
            double v;
            if (top < 0) {
                v = 0.0;
            } else if (r < top) {
                v = -d_probe * static_cast<double>(r) / static_cast<double>(top);
            } else {
                v = -d_probe;
            }
            field(r, c) = v;
        }
    }
    return field;
}

BModeImage warp_axial_direct(const BModeImage& image, const DisplacementField& field,
                             Interp interp, double fill) {
    if (!same_shape(image, field)) {
        throw DimensionMismatch("warp_axial_direct: field dimensions do not match image");
    }
    BModeImage out(image.height, image.width);
    int h = image.height;
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

MonogenicSignal monogenic_direct(const BModeImage& image, double wavelength, double sigma_onf) {
    const int h = image.height, w = image.width;
    const std::size_t n = static_cast<std::size_t>(h) * w;

    Spectrum in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = {image.data[i], 0.0};
    Spectrum spectrum = dft2(in, h, w, -1.0);

    const double omega0 = 1.0 / wavelength;
    const double denom = 2.0 * std::log(sigma_onf) * std::log(sigma_onf);
    const double norm = 1.0 / static_cast<double>(n);

    MonogenicSignal m;
    m.even = ImageGrid(h, w);
    m.odd_lateral = ImageGrid(h, w);
    m.odd_axial = ImageGrid(h, w);

    enum Component { kEven, kOddLateral, kOddAxial };
    Spectrum work(n);
    for (int comp = kEven; comp <= kOddAxial; ++comp) {
        for (int r = 0; r < h; ++r) {
            double fy = fft_freq(r, h);
            for (int c = 0; c < w; ++c) {
                double fx = fft_freq(c, w);
                double rho = std::sqrt(fx * fx + fy * fy);
                std::size_t i = static_cast<std::size_t>(r) * w + c;
                double gain = rho == 0.0 ? 0.0 : std::exp(-(std::log(rho / omega0) * std::log(rho / omega0)) / denom);
                std::complex<double> g = spectrum[i] * gain;
                if (comp == kEven) {
                    work[i] = g;
                } else {
                    double ratio = rho == 0.0 ? 0.0 : (comp == kOddLateral ? fx : fy) / rho;
                    work[i] = std::complex<double>(g.imag() * ratio, -g.real() * ratio);
                }
            }
        }
        Spectrum inv = dft2(work, h, w, 1.0);
        ImageGrid& dst = comp == kEven ? m.even : (comp == kOddLateral ? m.odd_lateral : m.odd_axial);
        for (std::size_t i = 0; i < n; ++i) dst.data[i] = inv[i].real() * norm;
    }
    return m;
}

}  // namespace usaug::reference
