#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "usaug/core.hpp"
#include "usaug/deform.hpp"
#include "usaug/errors.hpp"
#include "usaug/reference.hpp"

using namespace usaug;
using namespace testutil;

namespace {

int mask_top_row(const BoneMask& mask) {
    for (int r = 0; r < mask.height; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            if (mask(r, c)) return r;
        }
    }
    return -1;
}

}  // namespace

TEST_SUITE("deform") {

TEST_CASE("displacement field ramps from surface to bone") {
    auto mask = rect_mask(6, 2, 3, 5, 0, 1);
    DeformParams p;
    p.d_probe = 10.0;
    p.sigma_lateral = 0.0;
    auto field = compute_displacement_field(mask, p);
    for (int c = 0; c < 2; ++c) {
        CHECK(field(0, c) == 0.0);
        CHECK(field(1, c) == doctest::Approx(-10.0 / 3.0).epsilon(1e-15));
        CHECK(field(2, c) == doctest::Approx(-20.0 / 3.0).epsilon(1e-15));
        CHECK(field(3, c) == -10.0);
        CHECK(field(4, c) == -10.0);
        CHECK(field(5, c) == -10.0);
    }
}

TEST_CASE("columns without bone carry zero displacement") {
    BoneMask mask(8, 3, 0);
    mask(4, 1) = 1;
    DeformParams p;
    p.d_probe = 25.0;
    p.sigma_lateral = 0.0;
    auto field = compute_displacement_field(mask, p);
    for (int r = 0; r < 8; ++r) {
        CHECK(field(r, 0) == 0.0);
        CHECK(field(r, 2) == 0.0);
    }
    CHECK(field(0, 1) == 0.0);
    CHECK(field(4, 1) == -25.0);
}

TEST_CASE("bone at the surface displaces the whole column") {
    BoneMask mask(5, 1, 0);
    mask(0, 0) = 1;
    DeformParams p;
    p.d_probe = 7.0;
    p.sigma_lateral = 0.0;
    auto field = compute_displacement_field(mask, p);
    for (int r = 0; r < 5; ++r) CHECK(field(r, 0) == -7.0);
}

TEST_CASE("field matches the naive per-pixel oracle on random masks") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RngStream rng(seed, 2, 0);
        BoneMask mask(40, 37, 0);
        for (auto& v : mask.data) v = rng.bernoulli(0.15) ? 1 : 0;
        double d = rng.uniform(30.0, 100.0);
        DeformParams p;
        p.d_probe = d;
        p.sigma_lateral = 0.0;
        auto fast = compute_displacement_field(mask, p);
        auto naive = reference::displacement_field_direct(mask, d);
        CHECK(max_abs_diff(fast, naive) <= 1e-9);
    }
}

TEST_CASE("lateral smoothing equals blurring the raw field") {
    auto mask = rect_mask(48, 64, 20, 30, 25, 40);
    DeformParams raw{55.0, 0.0};
    DeformParams smooth{55.0, 15.0};
    auto expected = gaussian_blur_lateral(compute_displacement_field(mask, raw), 15.0);
    auto actual = compute_displacement_field(mask, smooth);
    CHECK(bit_equal(expected, actual));
}

TEST_CASE("zero pressure is a bit-exact identity") {
    Sample s = rect_sample(64, 48, 30, 40, 10, 38);
    DeformParams p;
    p.d_probe = 0.0;
    Sample out = deform_augment(s, p);
    CHECK(bit_equal(out.image, s.image));
    CHECK(bit_equal(out.mask, s.mask));
}

TEST_CASE("bone lands d_probe rows closer to the probe") {
    const int top = 140;
    for (double d : {30.0, 65.0, 100.0}) {
        Sample s = rect_sample(256, 96, top, 170, 20, 75);
        DeformParams p;
        p.d_probe = d;
        p.sigma_lateral = 0.0;
        Sample out = deform_augment(s, p);
        const int warped_top = mask_top_row(out.mask);
        CHECK(warped_top >= top - static_cast<int>(d) - 1);
        CHECK(warped_top <= top - static_cast<int>(d) + 1);
    }
}

TEST_CASE("warp matches the serial reference bit for bit") {
    Sample s = rect_sample(50, 41, 22, 30, 5, 35);
    DeformParams p;
    p.d_probe = 37.5;
    p.sigma_lateral = 8.0;
    auto field = compute_warp_field(s.mask, p);
    auto fast = warp_axial(s.image, field, Interp::bilinear, 0.0);
    auto naive = reference::warp_axial_direct(s.image, field, Interp::bilinear, 0.0);
    CHECK(bit_equal(fast, naive));

    auto fast_n = warp_axial(s.image, field, Interp::nearest, 0.0);
    auto naive_n = reference::warp_axial_direct(s.image, field, Interp::nearest, 0.0);
    CHECK(bit_equal(fast_n, naive_n));
}

TEST_CASE("out-of-range sources take the fill value") {
    ImageGrid img(4, 1, 0.5);
    DisplacementField field(4, 1, 0.0);
    field(0, 0) = 10.0;   // source row -10
    field(3, 0) = -10.0;  // source row 13
    auto out = warp_axial(img, field, Interp::bilinear, 0.25);
    CHECK(out(0, 0) == 0.25);
    CHECK(out(3, 0) == 0.25);
    CHECK(out(1, 0) == 0.5);
}

TEST_CASE("integer fields make bilinear and nearest agree") {
    Sample s = rect_sample(32, 9, 12, 18, 2, 6);
    DisplacementField field(32, 9, -3.0);
    auto a = warp_axial(s.image, field, Interp::bilinear, 0.0);
    auto b = warp_axial(s.image, field, Interp::nearest, 0.0);
    CHECK(max_abs_diff(a, b) <= 1e-15);
}

TEST_CASE("mask warp stays binary and tracks the image") {
    Sample s = rect_sample(96, 40, 50, 70, 8, 30);
    DeformParams p;
    p.d_probe = 33.0;
    p.sigma_lateral = 15.0;
    Sample out = deform_augment(s, p);
    for (auto v : out.mask.data) CHECK((v == 0 || v == 1));
    CHECK(same_shape(out.image, out.mask));
    CHECK(foreground_count(out.mask) > 0);
}

TEST_CASE("dimension mismatch is rejected") {
    ImageGrid img(4, 4, 0.1);
    DisplacementField field(4, 5, 0.0);
    CHECK_THROWS_AS(warp_axial(img, field, Interp::bilinear, 0.0), DimensionMismatch);
}

}  // TEST_SUITE
