#include <benchmark/benchmark.h>

#include "usaug/core.hpp"
#include "usaug/deform.hpp"
#include "usaug/pipeline.hpp"
#include "usaug/reference.hpp"
#include "usaug/rng.hpp"
#include "usaug/snr.hpp"

using namespace usaug;

namespace {

ImageGrid speckle(int h, int w) {
    RngStream rng(5, 0, 0);
    ImageGrid img(h, w);
    for (auto& v : img.data) v = rng.uniform(0.05, 0.45);
    return img;
}

BoneMask band_mask(int h, int w) {
    BoneMask mask(h, w, 0);
    int top = h * 3 / 5, bottom = top + h / 16;
    for (int r = top; r <= bottom; ++r) {
        for (int c = w / 8; c < w - w / 8; ++c) mask(r, c) = 1;
    }
    return mask;
}

Sample band_sample(int h, int w) {
    Sample s;
    s.image = speckle(h, w);
    s.mask = band_mask(h, w);
    s.id = "bench";
    for (std::size_t i = 0; i < s.mask.data.size(); ++i) {
        if (s.mask.data[i]) s.image.data[i] = 0.9;
    }
    return s;
}

void bm_gaussian_blur(benchmark::State& state) {
    ImageGrid img = speckle(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_blur(img, 45, 20.0));
    }
}

void bm_gaussian_blur_direct(benchmark::State& state) {
    ImageGrid img = speckle(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::gaussian_blur_direct(img, 45, 20.0));
    }
}

void bm_displacement_field(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BoneMask mask = band_mask(n, n);
    DeformParams p;
    p.d_probe = 65.0;
    p.sigma_lateral = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_displacement_field(mask, p));
    }
}

void bm_displacement_field_direct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BoneMask mask = band_mask(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::displacement_field_direct(mask, 65.0));
    }
}

void bm_warp_axial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ImageGrid img = speckle(n, n);
    DeformParams p;
    p.d_probe = 65.0;
    DisplacementField field = compute_warp_field(band_mask(n, n), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(warp_axial(img, field, Interp::bilinear, 0.0));
    }
}

void bm_warp_axial_direct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ImageGrid img = speckle(n, n);
    DeformParams p;
    p.d_probe = 65.0;
    DisplacementField field = compute_warp_field(band_mask(n, n), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::warp_axial_direct(img, field, Interp::bilinear, 0.0));
    }
}

void bm_monogenic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ImageGrid img = speckle(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(monogenic(img, 20.0, 0.55));
    }
}

void bm_monogenic_direct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ImageGrid img = speckle(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::monogenic_direct(img, 20.0, 0.55));
    }
}

void bm_compose_full(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Sample s = band_sample(n, n);
    RangeConfig ranges;
    RngStream rng(1, 0, 0);
    std::vector<SampledOp> ops = sample_params(rng, ranges, Mode::all);
    apply_ops(s, ops);  // warm FFT plans
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_ops(s, ops));
    }
}

BENCHMARK(bm_gaussian_blur)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gaussian_blur_direct)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_displacement_field)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_displacement_field_direct)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_warp_axial)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_warp_axial_direct)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_monogenic)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_monogenic_direct)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_compose_full)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
