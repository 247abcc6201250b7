#include "usaug/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"
#include "usaug/errors.hpp"

namespace usaug {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::string& ctx, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
    for (const auto& item : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return item.key() == k; });
        if (!known) throw ConfigError(ctx + ": unknown key '" + item.key() + "'");
    }
}

double get_double(const json& j, const char* key, const std::string& ctx, double fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) throw ConfigError(ctx + "." + key + ": expected a number");
    return v.get<double>();
}

std::uint64_t get_uint(const json& j, const char* key, const std::string& ctx,
                       std::uint64_t fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_unsigned()) {
        throw ConfigError(ctx + "." + key + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

bool get_bool(const json& j, const char* key, const std::string& ctx, bool fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_boolean()) throw ConfigError(ctx + "." + key + ": expected true or false");
    return v.get<bool>();
}

Range get_range(const json& j, const char* key, const std::string& ctx, Range fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(ctx + "." + key + ": expected [min, max]");
    }
    return Range{v[0].get<double>(), v[1].get<double>()};
}

void require_ordered(const Range& r, const std::string& what) {
    if (!(r.lo <= r.hi)) {
        throw ConfigError(what + ": min " + std::to_string(r.lo) + " exceeds max " +
                          std::to_string(r.hi));
    }
}

void require_prob(double p, const std::string& what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError(what + ": probability must lie in [0, 1]");
    }
}

void parse_deform(const json& j, RangeConfig& r) {
    check_keys(j, "deform", {"enabled", "d_probe", "sigma_lateral"});
    r.enable_deform = get_bool(j, "enabled", "deform", r.enable_deform);
    r.d_probe = get_range(j, "d_probe", "deform", r.d_probe);
    r.sigma_lateral = get_double(j, "sigma_lateral", "deform", r.sigma_lateral);
}

void parse_reverb(const json& j, RangeConfig& r) {
    check_keys(j, "reverb", {"enabled", "r_i", "orders", "per_component"});
    r.enable_reverb = get_bool(j, "enabled", "reverb", r.enable_reverb);
    r.r_i = get_range(j, "r_i", "reverb", r.r_i);
    r.orders = static_cast<int>(get_uint(j, "orders", "reverb", r.orders));
    r.per_component = get_bool(j, "per_component", "reverb", r.per_component);
}

void parse_snr(const json& j, RangeConfig& r) {
    check_keys(j, "snr",
               {"enabled", "i_b", "i_bg", "wavelength", "sigma_onf", "epsilon_scale",
                "mask_blur_sigma"});
    r.enable_snr = get_bool(j, "enabled", "snr", r.enable_snr);
    r.i_b = get_range(j, "i_b", "snr", r.i_b);
    r.i_bg = get_range(j, "i_bg", "snr", r.i_bg);
    r.wavelength = get_double(j, "wavelength", "snr", r.wavelength);
    r.sigma_onf = get_double(j, "sigma_onf", "snr", r.sigma_onf);
    r.epsilon_scale = get_double(j, "epsilon_scale", "snr", r.epsilon_scale);
    r.mask_blur_sigma = get_double(j, "mask_blur_sigma", "snr", r.mask_blur_sigma);
}

void parse_classical(const json& j, RangeConfig& r) {
    check_keys(j, "classical",
               {"enabled", "rotation_deg", "translate_x", "translate_y", "scale_x", "scale_y",
                "shear_x", "shear_y", "brightness", "flip_horizontal_prob", "flip_vertical_prob"});
    ClassicalRanges& c = r.classical;
    r.enable_classical = get_bool(j, "enabled", "classical", r.enable_classical);
    c.rotation_deg = get_range(j, "rotation_deg", "classical", c.rotation_deg);
    c.translate_frac_x = get_range(j, "translate_x", "classical", c.translate_frac_x);
    c.translate_frac_y = get_range(j, "translate_y", "classical", c.translate_frac_y);
    c.scale_x = get_range(j, "scale_x", "classical", c.scale_x);
    c.scale_y = get_range(j, "scale_y", "classical", c.scale_y);
    c.shear_x = get_range(j, "shear_x", "classical", c.shear_x);
    c.shear_y = get_range(j, "shear_y", "classical", c.shear_y);
    c.brightness_delta = get_range(j, "brightness", "classical", c.brightness_delta);
    c.flip_horizontal_prob =
        get_double(j, "flip_horizontal_prob", "classical", c.flip_horizontal_prob);
    c.flip_vertical_prob = get_double(j, "flip_vertical_prob", "classical", c.flip_vertical_prob);
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }

    check_keys(j, "config",
               {"seed", "replicas", "order", "mode", "output_bits", "deform", "reverb", "snr",
                "classical"});

    RunConfig cfg;
    cfg.seed = get_uint(j, "seed", "config", cfg.seed);
    cfg.replicas = static_cast<std::uint32_t>(get_uint(j, "replicas", "config", cfg.replicas));
    cfg.output_bits = static_cast<int>(get_uint(j, "output_bits", "config", cfg.output_bits));

    if (j.contains("mode")) {
        const json& m = j.at("mode");
        if (!m.is_string()) throw ConfigError("config.mode: expected \"all\" or \"subset\"");
        std::string s = m.get<std::string>();
        if (s == "all") {
            cfg.mode = Mode::all;
        } else if (s == "subset") {
            cfg.mode = Mode::subset;
        } else {
            throw ConfigError("config.mode: expected \"all\" or \"subset\", got \"" + s + "\"");
        }
    }

    if (j.contains("order")) {
        const json& o = j.at("order");
        if (!o.is_array()) throw ConfigError("config.order: expected an array of op names");
        cfg.order.clear();
        for (const auto& name : o) {
            if (!name.is_string()) throw ConfigError("config.order: expected op names");
            cfg.order.push_back(op_kind_from_string(name.get<std::string>()));
        }
    }

    if (j.contains("deform")) parse_deform(j.at("deform"), cfg.ranges);
    if (j.contains("reverb")) parse_reverb(j.at("reverb"), cfg.ranges);
    if (j.contains("snr")) parse_snr(j.at("snr"), cfg.ranges);
    if (j.contains("classical")) parse_classical(j.at("classical"), cfg.ranges);

    validate_run_config(cfg);
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

void validate_run_config(const RunConfig& config) {
    if (config.replicas < 1) throw ConfigError("config.replicas: must be at least 1");
    if (config.output_bits != 8 && config.output_bits != 16) {
        throw ConfigError("config.output_bits: must be 8 or 16");
    }

    if (config.order.size() != 4) {
        throw ConfigError("config.order: must list all four ops exactly once");
    }
    for (OpKind kind : {OpKind::deform, OpKind::reverb, OpKind::snr, OpKind::classical}) {
        if (std::count(config.order.begin(), config.order.end(), kind) != 1) {
            throw ConfigError(std::string("config.order: op '") + to_string(kind) +
                              "' must appear exactly once");
        }
    }

    const RangeConfig& r = config.ranges;
    require_ordered(r.d_probe, "deform.d_probe");
    if (r.d_probe.lo < 0.0) throw ConfigError("deform.d_probe: must be non-negative");
    if (r.sigma_lateral < 0.0) throw ConfigError("deform.sigma_lateral: must be non-negative");

    require_ordered(r.r_i, "reverb.r_i");
    if (r.r_i.lo < 0.0 || r.r_i.hi > 1.0) throw ConfigError("reverb.r_i: must lie within [0, 1]");
    if (r.orders < 1) throw ConfigError("reverb.orders: must be at least 1");

    require_ordered(r.i_b, "snr.i_b");
    require_ordered(r.i_bg, "snr.i_bg");
    if (r.i_b.lo < 0.0) throw ConfigError("snr.i_b: must be non-negative");
    if (r.i_bg.lo < 0.0) throw ConfigError("snr.i_bg: must be non-negative");
    if (!(r.wavelength >= 2.0)) throw ConfigError("snr.wavelength: must be at least 2 px");
    if (!(r.sigma_onf > 0.0 && r.sigma_onf < 1.0)) {
        throw ConfigError("snr.sigma_onf: must lie in (0, 1)");
    }
    if (!(r.epsilon_scale > 0.0)) throw ConfigError("snr.epsilon_scale: must be positive");
    if (r.mask_blur_sigma < 0.0) throw ConfigError("snr.mask_blur_sigma: must be non-negative");

    const ClassicalRanges& c = r.classical;
    require_ordered(c.rotation_deg, "classical.rotation_deg");
    require_ordered(c.translate_frac_x, "classical.translate_x");
    require_ordered(c.translate_frac_y, "classical.translate_y");
    require_ordered(c.scale_x, "classical.scale_x");
    require_ordered(c.scale_y, "classical.scale_y");
    require_ordered(c.shear_x, "classical.shear_x");
    require_ordered(c.shear_y, "classical.shear_y");
    require_ordered(c.brightness_delta, "classical.brightness");
    if (c.scale_x.lo <= 0.0 || c.scale_y.lo <= 0.0) {
        throw ConfigError("classical.scale: factors must be positive");
    }
    require_prob(c.flip_horizontal_prob, "classical.flip_horizontal_prob");
    require_prob(c.flip_vertical_prob, "classical.flip_vertical_prob");
}

}  // namespace usaug
