#include "usaug/snr.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "usaug/core.hpp"
#include "usaug/errors.hpp"

namespace usaug {

namespace {

// fftw planning is not thread-safe and, with FFTW_ESTIMATE, depends only
// on the transform size and buffer alignment. Plans are cached per size,
// created once under a lock on fftw_malloc'd probe buffers, and executed
// with the new-array interface on equally aligned buffers, which keeps
// results identical across threads and runs.
struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

std::shared_mutex g_fftw_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
    static std::map<std::pair<int, int>, PlanPair> cache;
    return cache;
}

void execute_plan(fftw_plan plan, fftw_complex* in, fftw_complex* out) {
    std::shared_lock<std::shared_mutex> lock(g_fftw_mutex);
    fftw_execute_dft(plan, in, out);
}

PlanPair plans_for(int h, int w) {
    std::unique_lock<std::shared_mutex> lock(g_fftw_mutex);
    auto& cache = plan_cache();
    auto it = cache.find({h, w});
    if (it != cache.end()) return it->second;

    fftw_complex* a = fftw_alloc_complex(static_cast<std::size_t>(h) * w);
    fftw_complex* b = fftw_alloc_complex(static_cast<std::size_t>(h) * w);
    PlanPair p;
    p.forward = fftw_plan_dft_2d(h, w, a, b, FFTW_FORWARD, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_2d(h, w, a, b, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_free(a);
    fftw_free(b);
    cache[{h, w}] = p;
    return p;
}

struct FftwDeleter {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuf = std::unique_ptr<fftw_complex[], FftwDeleter>;

FftwBuf alloc_complex(std::size_t n) {
    return FftwBuf(fftw_alloc_complex(n));
}

// numpy-style DFT sample frequency for index k of n, cycles per pixel.
inline double fft_freq(int k, int n) {
    return k < (n + 1) / 2 ? static_cast<double>(k) / n
                           : static_cast<double>(k - n) / n;
}

}  // namespace

MonogenicSignal monogenic(const BModeImage& image, double wavelength, double sigma_onf) {
    if (image.height < 4 || image.width < 4) {
        throw DegenerateImage("monogenic: image must be at least 4x4, got " +
                              std::to_string(image.height) + "x" + std::to_string(image.width));
    }
    if (!(wavelength >= 2.0)) {
        throw ProcessingError("monogenic: wavelength must be >= 2 px");
    }
    if (!(sigma_onf > 0.0 && sigma_onf < 1.0)) {
        throw ProcessingError("monogenic: sigma_onf must lie in (0, 1)");
    }

    const int h = image.height, w = image.width;
    const std::size_t n = static_cast<std::size_t>(h) * w;
    PlanPair plans = plans_for(h, w);

    FftwBuf in = alloc_complex(n), spectrum = alloc_complex(n);
    FftwBuf work = alloc_complex(n), inv = alloc_complex(n);

    for (std::size_t i = 0; i < n; ++i) {
        in[i][0] = image.data[i];
        in[i][1] = 0.0;
    }
    execute_plan(plans.forward, in.get(), spectrum.get());

    const double omega0 = 1.0 / wavelength;
    const double denom = 2.0 * std::log(sigma_onf) * std::log(sigma_onf);
    const double norm = 1.0 / static_cast<double>(n);

    MonogenicSignal m;
    m.even = ImageGrid(h, w);
    m.odd_lateral = ImageGrid(h, w);
    m.odd_axial = ImageGrid(h, w);

    // Three spectra share the per-bin gain; the Riesz multipliers -i u/rho
    // and -i v/rho swap and scale real/imaginary parts in place.
    enum Component { kEven, kOddLateral, kOddAxial };
    for (int comp = kEven; comp <= kOddAxial; ++comp) {
#pragma omp parallel for schedule(static)
        for (int r = 0; r < h; ++r) {
            double fy = fft_freq(r, h);
            for (int c = 0; c < w; ++c) {
                double fx = fft_freq(c, w);
                double rho = std::sqrt(fx * fx + fy * fy);
                std::size_t i = static_cast<std::size_t>(r) * w + c;
                double gain = rho == 0.0 ? 0.0 : std::exp(-(std::log(rho / omega0) * std::log(rho / omega0)) / denom);
                double re = spectrum[i][0] * gain;
                double im = spectrum[i][1] * gain;
                if (comp == kEven) {
                    work[i][0] = re;
                    work[i][1] = im;
                } else {
                    double ratio = rho == 0.0 ? 0.0 : (comp == kOddLateral ? fx : fy) / rho;
                    // multiply by -i * ratio: (re + i im) -> (im - i re) * ratio
                    work[i][0] = im * ratio;
                    work[i][1] = -re * ratio;
                }
            }
        }
        execute_plan(plans.backward, work.get(), inv.get());
        ImageGrid& dst = comp == kEven ? m.even : (comp == kOddLateral ? m.odd_lateral : m.odd_axial);
#pragma omp parallel for schedule(static)
        for (int r = 0; r < h; ++r) {
            double* row = dst.row(r);
            for (int c = 0; c < w; ++c) {
                row[c] = inv[static_cast<std::size_t>(r) * w + c][0] * norm;
            }
        }
    }
    return m;
}

ImageGrid local_energy(const MonogenicSignal& m) {
    ImageGrid le(m.even.height, m.even.width);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < le.height; ++r) {
        const double* e = m.even.row(r);
        const double* o1 = m.odd_lateral.row(r);
        const double* o2 = m.odd_axial.row(r);
        double* dst = le.row(r);
        for (int c = 0; c < le.width; ++c) {
            dst[c] = e[c] * e[c] + o1[c] * o1[c] + o2[c] * o2[c];
        }
    }
    return le;
}

Sample snr_augment(const Sample& sample, const SnrParams& params) {
    MonogenicSignal m = monogenic(sample.image, params.wavelength, params.sigma_onf);
    ImageGrid le = local_energy(m);

    double max_le = 0.0;
    for (double v : le.data) max_le = std::max(max_le, v);
    double eps = params.epsilon_scale * max_le;
    if (eps <= 0.0) eps = params.epsilon_scale;  // flat image, LE is identically 0

    ImageGrid region(sample.mask.height, sample.mask.width);
    for (std::size_t i = 0; i < region.data.size(); ++i) {
        region.data[i] = sample.mask.data[i] ? 1.0 : 0.0;
    }
    if (params.mask_blur_sigma > 0.0) {
        int radius = static_cast<int>(std::ceil(3.0 * params.mask_blur_sigma));
        region = gaussian_blur(region, 2 * radius + 1, params.mask_blur_sigma);
    }

    Sample out;
    out.mask = sample.mask;
    out.id = sample.id;
    out.image = BModeImage(sample.image.height, sample.image.width);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < out.image.height; ++r) {
        const double* img = sample.image.row(r);
        const double* lerow = le.row(r);
        const double* mrow = region.row(r);
        double* dst = out.image.row(r);
        for (int c = 0; c < out.image.width; ++c) {
            double scale = params.i_b * mrow[c] + params.i_bg * (1.0 - mrow[c]);
            double v = img[c] * (lerow[c] * scale) / (lerow[c] + eps);
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
            dst[c] = v;
        }
    }
    return out;
}

}  // namespace usaug
