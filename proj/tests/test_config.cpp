#include <string>

#include "doctest.h"
#include "usaug/config.hpp"
#include "usaug/errors.hpp"

using namespace usaug;

TEST_SUITE("config") {

TEST_CASE("an empty object yields the default run") {
    RunConfig cfg = parse_run_config("{}");
    CHECK(cfg.seed == 0);
    CHECK(cfg.replicas == 1);
    CHECK(cfg.output_bits == 16);
    CHECK(cfg.mode == Mode::all);
    REQUIRE(cfg.order.size() == 4);
    CHECK(cfg.order[0] == OpKind::deform);
    CHECK(cfg.order[3] == OpKind::classical);
    CHECK(cfg.ranges.d_probe.lo == 30.0);
    CHECK(cfg.ranges.d_probe.hi == 100.0);
    CHECK(cfg.ranges.r_i.lo == 0.50);
    CHECK(cfg.ranges.r_i.hi == 0.9);
    CHECK(cfg.ranges.i_b.lo == 0.70);
    CHECK(cfg.ranges.i_b.hi == 1.40);
    CHECK(cfg.ranges.sigma_lateral == 15.0);
    CHECK(cfg.ranges.wavelength == 20.0);
    CHECK(cfg.ranges.sigma_onf == 0.55);
    CHECK(cfg.ranges.classical.rotation_deg.lo == -10.0);
    CHECK(cfg.ranges.classical.rotation_deg.hi == 10.0);
    CHECK(cfg.ranges.classical.scale_x.lo == 1.0);
    CHECK(cfg.ranges.classical.scale_x.hi == 1.0);
    CHECK(cfg.ranges.classical.flip_horizontal_prob == 0.5);
    CHECK(cfg.ranges.classical.flip_vertical_prob == 0.0);
}

TEST_CASE("every field parses") {
    const char* text = R"({
        "seed": 42,
        "replicas": 5,
        "order": ["classical", "snr", "reverb", "deform"],
        "mode": "subset",
        "output_bits": 8,
        "deform": {"enabled": true, "d_probe": [10, 50], "sigma_lateral": 7.5},
        "reverb": {"enabled": false, "r_i": [0.2, 0.4], "orders": 3, "per_component": true},
        "snr": {"i_b": [0.9, 1.1], "i_bg": [0.8, 1.2], "wavelength": 16,
                "sigma_onf": 0.5, "epsilon_scale": 0.01, "mask_blur_sigma": 2.5},
        "classical": {"rotation_deg": [-5, 5], "translate_x": [-0.1, 0.1],
                      "translate_y": [0, 0], "scale_x": [0.9, 1.1], "scale_y": [1, 1],
                      "shear_x": [1, 1.05], "shear_y": [1, 1], "brightness": [-0.1, 0.1],
                      "flip_horizontal_prob": 1.0, "flip_vertical_prob": 0.25}
    })";
    RunConfig cfg = parse_run_config(text);
    CHECK(cfg.seed == 42);
    CHECK(cfg.replicas == 5);
    CHECK(cfg.mode == Mode::subset);
    CHECK(cfg.output_bits == 8);
    CHECK(cfg.order[0] == OpKind::classical);
    CHECK(cfg.order[3] == OpKind::deform);
    CHECK(cfg.ranges.d_probe.hi == 50.0);
    CHECK(cfg.ranges.sigma_lateral == 7.5);
    CHECK_FALSE(cfg.ranges.enable_reverb);
    CHECK(cfg.ranges.orders == 3);
    CHECK(cfg.ranges.per_component);
    CHECK(cfg.ranges.wavelength == 16.0);
    CHECK(cfg.ranges.mask_blur_sigma == 2.5);
    CHECK(cfg.ranges.classical.scale_x.lo == 0.9);
    CHECK(cfg.ranges.classical.shear_x.hi == 1.05);
    CHECK(cfg.ranges.classical.flip_horizontal_prob == 1.0);
    CHECK(cfg.ranges.classical.flip_vertical_prob == 0.25);
}

TEST_CASE("unknown keys are rejected at every level") {
    CHECK_THROWS_AS(parse_run_config(R"({"sepia": true})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"dprobe": [1, 2]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"reverb": {"ri": [0, 1]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"snr": {"ib": [1, 1]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"classical": {"rotation": [0, 1]}})"), ConfigError);
}

TEST_CASE("malformed values are rejected") {
    CHECK_THROWS_AS(parse_run_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("[1, 2]"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"seed": -1})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"seed": "zero"})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"mode": "most"})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"d_probe": [1]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"d_probe": "wide"}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"enabled": 1}})"), ConfigError);
}

TEST_CASE("constraint violations are rejected") {
    CHECK_THROWS_AS(parse_run_config(R"({"replicas": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"output_bits": 12})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"order": ["deform"]})"), ConfigError);
    CHECK_THROWS_AS(
        parse_run_config(R"({"order": ["deform", "deform", "snr", "classical"]})"),
        ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"order": ["deform", "reverb", "snr", "mystery"]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"d_probe": [50, 10]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"d_probe": [-5, 10]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"deform": {"sigma_lateral": -1}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"reverb": {"r_i": [0.5, 1.5]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"reverb": {"orders": 0}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"snr": {"wavelength": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"snr": {"sigma_onf": 1.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"snr": {"epsilon_scale": 0}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"classical": {"scale_x": [0, 1]}})"), ConfigError);
    CHECK_THROWS_AS(parse_run_config(R"({"classical": {"flip_horizontal_prob": 1.5}})"),
                    ConfigError);
}

TEST_CASE("batch settings mirror the run config") {
    RunConfig cfg = parse_run_config(
        R"({"seed": 9, "replicas": 3, "mode": "subset", "output_bits": 8,
            "order": ["snr", "deform", "classical", "reverb"]})");
    BatchSettings s = cfg.batch_settings();
    CHECK(s.seed == 9);
    CHECK(s.replicas == 3);
    CHECK(s.mode == Mode::subset);
    CHECK(s.output_bits == 8);
    REQUIRE(s.order.size() == 4);
    CHECK(s.order[0] == OpKind::snr);
    CHECK(s.order[3] == OpKind::reverb);
}

TEST_CASE("missing config files are a config error") {
    CHECK_THROWS_AS(load_run_config("/nonexistent/usaug.json"), ConfigError);
}

}  // TEST_SUITE
