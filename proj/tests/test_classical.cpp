#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "usaug/classical.hpp"

using namespace usaug;
using namespace testutil;

TEST_SUITE("classical") {

TEST_CASE("identity parameters are a bit-exact identity") {
    Sample s = rect_sample(48, 37, 20, 28, 8, 30);
    Sample out = affine_augment(s, AffineParams{});
    CHECK(bit_equal(out.image, s.image));
    CHECK(bit_equal(out.mask, s.mask));
    CHECK(out.id == s.id);
}

TEST_CASE("horizontal flip reverses columns exactly") {
    Sample s = rect_sample(20, 15, 5, 9, 2, 6);
    AffineParams p;
    p.flip_horizontal = true;
    Sample out = affine_augment(s, p);
    for (int r = 0; r < 20; ++r) {
        for (int c = 0; c < 15; ++c) {
            CHECK(out.image(r, c) == s.image(r, 14 - c));
            CHECK(out.mask(r, c) == s.mask(r, 14 - c));
        }
    }
}

TEST_CASE("horizontal flip is an involution") {
    Sample s = rect_sample(33, 26, 10, 15, 4, 20);
    AffineParams p;
    p.flip_horizontal = true;
    Sample twice = affine_augment(affine_augment(s, p), p);
    CHECK(bit_equal(twice.image, s.image));
    CHECK(bit_equal(twice.mask, s.mask));
}

TEST_CASE("vertical flip reverses rows exactly") {
    Sample s = rect_sample(18, 11, 3, 6, 2, 8);
    AffineParams p;
    p.flip_vertical = true;
    Sample out = affine_augment(s, p);
    for (int r = 0; r < 18; ++r) {
        for (int c = 0; c < 11; ++c) CHECK(out.image(r, c) == s.image(17 - r, c));
    }
}

TEST_CASE("90 degree rotation matches the coordinate-mapping oracle") {
    Sample s;
    s.image = ImageGrid(3, 3);
    s.mask = BoneMask(3, 3, 0);
    double vals[9] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    for (int i = 0; i < 9; ++i) s.image.data[i] = vals[i];
    s.mask(0, 2) = 1;
    s.id = "tiny";

    AffineParams p;
    p.rotation_deg = 90.0;
    Sample out = affine_augment(s, p);

    // Forward map for 90 degrees about the center sends (x, y) to
    // (cx - (y - cy), cy + (x - cx)), so out(r, c) = in(2 - c, r).
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            CHECK(out.image(r, c) == doctest::Approx(s.image(2 - c, r)).epsilon(1e-12));
            CHECK(out.mask(r, c) == s.mask(2 - c, r));
        }
    }
}

TEST_CASE("whole-pixel translation moves content exactly") {
    const int h = 20, w = 25;
    Sample s = rect_sample(h, w, 8, 11, 5, 9);
    AffineParams p;
    p.translate_frac_x = 5.0 / w;
    p.translate_frac_y = -2.0 / h;
    Sample out = affine_augment(s, p);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            int sr = r + 2, sc = c - 5;
            double expect = (sr >= 0 && sr < h && sc >= 0 && sc < w) ? s.image(sr, sc) : 0.0;
            CHECK(out.image(r, c) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("brightness shifts and clamps") {
    Sample s = rect_sample(12, 12, 4, 7, 4, 7);
    s.image(0, 0) = 0.95;
    s.image(0, 1) = 0.02;
    AffineParams up;
    up.brightness_delta = 0.2;
    Sample brighter = affine_augment(s, up);
    CHECK(brighter.image(0, 0) == 1.0);
    CHECK(brighter.image(0, 1) == doctest::Approx(0.22).epsilon(1e-12));

    AffineParams down;
    down.brightness_delta = -0.2;
    Sample darker = affine_augment(s, down);
    CHECK(darker.image(0, 1) == 0.0);
    for (double v : darker.image.data) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("masks stay binary under arbitrary affines") {
    Sample s = rect_sample(40, 40, 15, 24, 10, 29);
    AffineParams p;
    p.rotation_deg = 7.3;
    p.translate_frac_x = 0.08;
    p.translate_frac_y = -0.05;
    p.scale_x = 1.15;
    p.scale_y = 0.9;
    p.shear_x = 1.1;
    p.shear_y = 0.95;
    p.flip_horizontal = true;
    p.brightness_delta = 0.11;
    Sample out = affine_augment(s, p);
    for (auto v : out.mask.data) CHECK((v == 0 || v == 1));
    for (double v : out.image.data) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("scaling by two doubles distances from the center") {
    const int h = 21, w = 21;  // centered so the map hits integers exactly
    Sample s;
    s.image = ImageGrid(h, w, 0.0);
    s.mask = BoneMask(h, w, 0);
    s.image(10, 14) = 1.0;  // 4 columns right of center
    s.id = "scale";
    AffineParams p;
    p.scale_x = 2.0;
    p.scale_y = 2.0;
    Sample out = affine_augment(s, p);
    CHECK(out.image(10, 18) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample_classical respects ranges and draw order") {
    ClassicalRanges ranges;  // defaults
    RngStream rng(123, 0, 0);
    for (int i = 0; i < 2000; ++i) {
        AffineParams p = sample_classical(rng, ranges);
        CHECK(p.rotation_deg >= -10.0);
        CHECK(p.rotation_deg < 10.0);
        CHECK(p.translate_frac_x >= -0.2);
        CHECK(p.translate_frac_x < 0.2);
        CHECK(p.translate_frac_y >= -0.2);
        CHECK(p.translate_frac_y < 0.2);
        CHECK(p.scale_x == 1.0);
        CHECK(p.scale_y == 1.0);
        CHECK(p.shear_x == 1.0);
        CHECK(p.shear_y == 1.0);
        CHECK(p.brightness_delta >= -0.2);
        CHECK(p.brightness_delta < 0.2);
        CHECK_FALSE(p.flip_vertical);  // default probability 0
    }
}

TEST_CASE("sample_classical consumes exactly ten draws") {
    ClassicalRanges ranges;
    RngStream a(77, 4, 2);
    RngStream b(77, 4, 2);
    (void)sample_classical(a, ranges);
    for (int i = 0; i < 10; ++i) (void)b.next_double();
    for (int i = 0; i < 8; ++i) CHECK(a.next_u32() == b.next_u32());
}

TEST_CASE("fixed seed reproduces the parameter sequence") {
    ClassicalRanges ranges;
    RngStream a(5, 1, 0);
    RngStream b(5, 1, 0);
    for (int i = 0; i < 32; ++i) {
        AffineParams pa = sample_classical(a, ranges);
        AffineParams pb = sample_classical(b, ranges);
        CHECK(pa.rotation_deg == pb.rotation_deg);
        CHECK(pa.brightness_delta == pb.brightness_delta);
        CHECK(pa.flip_horizontal == pb.flip_horizontal);
    }
}

TEST_CASE("degenerate ranges pin parameters") {
    ClassicalRanges ranges;
    ranges.rotation_deg = {4.5, 4.5};
    ranges.brightness_delta = {-0.1, -0.1};
    RngStream rng(9, 0, 0);
    for (int i = 0; i < 50; ++i) {
        AffineParams p = sample_classical(rng, ranges);
        CHECK(p.rotation_deg == 4.5);
        CHECK(p.brightness_delta == -0.1);
    }
}

}  // TEST_SUITE
