#include "usaug/pipeline.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <utility>

#include "json.hpp"
#include "usaug/checksum.hpp"
#include "usaug/errors.hpp"

namespace usaug {

namespace {

constexpr OpKind kCanonicalOrder[] = {OpKind::deform, OpKind::reverb, OpKind::snr,
                                      OpKind::classical};

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
    if (s.size() != 16) throw ConfigError("manifest: checksum must be 16 hex digits, got '" + s + "'");
    char* end = nullptr;
    std::uint64_t v = std::strtoull(s.c_str(), &end, 16);
    if (end != s.c_str() + s.size()) {
        throw ConfigError("manifest: invalid checksum '" + s + "'");
    }
    return v;
}

bool op_enabled(const RangeConfig& config, OpKind kind) {
    switch (kind) {
        case OpKind::deform: return config.enable_deform;
        case OpKind::reverb: return config.enable_reverb;
        case OpKind::snr: return config.enable_snr;
        case OpKind::classical: return config.enable_classical;
    }
    return false;
}

SampledOp draw_op(RngStream& rng, const RangeConfig& config, OpKind kind) {
    SampledOp op;
    op.kind = kind;
    switch (kind) {
        case OpKind::deform: {
            DeformParams p;
            p.d_probe = rng.uniform(config.d_probe.lo, config.d_probe.hi);
            p.sigma_lateral = config.sigma_lateral;
            op.params = p;
            break;
        }
        case OpKind::reverb: {
            ReverbParams p;
            p.r_i = rng.uniform(config.r_i.lo, config.r_i.hi);
            p.orders = config.orders;
            p.per_component = config.per_component;
            op.params = p;
            break;
        }
        case OpKind::snr: {
            SnrParams p;
            p.i_b = rng.uniform(config.i_b.lo, config.i_b.hi);
            p.i_bg = rng.uniform(config.i_bg.lo, config.i_bg.hi);
            p.wavelength = config.wavelength;
            p.sigma_onf = config.sigma_onf;
            p.epsilon_scale = config.epsilon_scale;
            p.mask_blur_sigma = config.mask_blur_sigma;
            op.params = p;
            break;
        }
        case OpKind::classical:
            op.params = sample_classical(rng, config.classical);
            break;
    }
    return op;
}

nlohmann::ordered_json op_to_json(const SampledOp& op) {
    nlohmann::ordered_json j;
    j["op"] = to_string(op.kind);
    switch (op.kind) {
        case OpKind::deform: {
            const auto& p = std::get<DeformParams>(op.params);
            j["d_probe"] = p.d_probe;
            j["sigma_lateral"] = p.sigma_lateral;
            break;
        }
        case OpKind::reverb: {
            const auto& p = std::get<ReverbParams>(op.params);
            j["r_i"] = p.r_i;
            j["orders"] = p.orders;
            j["per_component"] = p.per_component;
            break;
        }
        case OpKind::snr: {
            const auto& p = std::get<SnrParams>(op.params);
            j["i_b"] = p.i_b;
            j["i_bg"] = p.i_bg;
            j["wavelength"] = p.wavelength;
            j["sigma_onf"] = p.sigma_onf;
            j["epsilon_scale"] = p.epsilon_scale;
            j["mask_blur_sigma"] = p.mask_blur_sigma;
            break;
        }
        case OpKind::classical: {
            const auto& p = std::get<AffineParams>(op.params);
            j["rotation_deg"] = p.rotation_deg;
            j["translate_frac_x"] = p.translate_frac_x;
            j["translate_frac_y"] = p.translate_frac_y;
            j["scale_x"] = p.scale_x;
            j["scale_y"] = p.scale_y;
            j["shear_x"] = p.shear_x;
            j["shear_y"] = p.shear_y;
            j["brightness_delta"] = p.brightness_delta;
            j["flip_horizontal"] = p.flip_horizontal;
            j["flip_vertical"] = p.flip_vertical;
            break;
        }
    }
    return j;
}

SampledOp op_from_json(const nlohmann::json& j) {
    SampledOp op;
    op.kind = op_kind_from_string(j.at("op").get<std::string>());
    switch (op.kind) {
        case OpKind::deform: {
            DeformParams p;
            p.d_probe = j.at("d_probe").get<double>();
            p.sigma_lateral = j.at("sigma_lateral").get<double>();
            op.params = p;
            break;
        }
        case OpKind::reverb: {
            ReverbParams p;
            p.r_i = j.at("r_i").get<double>();
            p.orders = j.at("orders").get<int>();
            p.per_component = j.at("per_component").get<bool>();
            op.params = p;
            break;
        }
        case OpKind::snr: {
            SnrParams p;
            p.i_b = j.at("i_b").get<double>();
            p.i_bg = j.at("i_bg").get<double>();
            p.wavelength = j.at("wavelength").get<double>();
            p.sigma_onf = j.at("sigma_onf").get<double>();
            p.epsilon_scale = j.at("epsilon_scale").get<double>();
            p.mask_blur_sigma = j.at("mask_blur_sigma").get<double>();
            op.params = p;
            break;
        }
        case OpKind::classical: {
            AffineParams p;
            p.rotation_deg = j.at("rotation_deg").get<double>();
            p.translate_frac_x = j.at("translate_frac_x").get<double>();
            p.translate_frac_y = j.at("translate_frac_y").get<double>();
            p.scale_x = j.at("scale_x").get<double>();
            p.scale_y = j.at("scale_y").get<double>();
            p.shear_x = j.at("shear_x").get<double>();
            p.shear_y = j.at("shear_y").get<double>();
            p.brightness_delta = j.at("brightness_delta").get<double>();
            p.flip_horizontal = j.at("flip_horizontal").get<bool>();
            p.flip_vertical = j.at("flip_vertical").get<bool>();
            op.params = p;
            break;
        }
    }
    return op;
}

std::string make_output_id(const std::string& input_id, std::uint32_t replica) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "_%03u", replica);
    return input_id + buf;
}

}  // namespace

const char* to_string(OpKind kind) {
    switch (kind) {
        case OpKind::deform: return "deform";
        case OpKind::reverb: return "reverb";
        case OpKind::snr: return "snr";
        case OpKind::classical: return "classical";
    }
    return "?";
}

OpKind op_kind_from_string(const std::string& name) {
    if (name == "deform") return OpKind::deform;
    if (name == "reverb") return OpKind::reverb;
    if (name == "snr") return OpKind::snr;
    if (name == "classical") return OpKind::classical;
    throw ConfigError("unknown op '" + name + "' (expected deform, reverb, snr, or classical)");
}

std::vector<SampledOp> sample_params(RngStream& rng, const RangeConfig& config, Mode mode) {
    bool include[4] = {true, true, true, true};
    if (mode == Mode::subset) {
        for (int i = 0; i < 4; ++i) {
            if (op_enabled(config, kCanonicalOrder[i])) include[i] = rng.bernoulli(0.5);
        }
    }
    std::vector<SampledOp> ops;
    for (int i = 0; i < 4; ++i) {
        OpKind kind = kCanonicalOrder[i];
        if (!op_enabled(config, kind)) continue;
        SampledOp op = draw_op(rng, config, kind);
        if (include[i]) ops.push_back(std::move(op));
    }
    return ops;
}

ApplyResult apply_ops(const Sample& sample, const std::vector<SampledOp>& ops) {
    ApplyResult res{sample, false};
    for (const auto& op : ops) {
        switch (op.kind) {
            case OpKind::deform:
                res.sample = deform_augment(res.sample, std::get<DeformParams>(op.params));
                break;
            case OpKind::reverb: {
                ReverbResult rr = reverb_augment(res.sample, std::get<ReverbParams>(op.params));
                res.sample = std::move(rr.sample);
                res.reverb_empty_mask = res.reverb_empty_mask || rr.empty_mask;
                break;
            }
            case OpKind::snr:
                res.sample = snr_augment(res.sample, std::get<SnrParams>(op.params));
                break;
            case OpKind::classical:
                res.sample = affine_augment(res.sample, std::get<AffineParams>(op.params));
                break;
        }
    }
    return res;
}

ComposeResult compose(const Sample& sample, const std::vector<SampledOp>& ops,
                      const std::vector<OpKind>& order, std::uint64_t seed, std::uint32_t item,
                      std::uint32_t replica, int output_bits) {
    std::vector<SampledOp> ordered;
    ordered.reserve(ops.size());
    for (OpKind kind : order) {
        for (const auto& op : ops) {
            if (op.kind == kind) ordered.push_back(op);
        }
    }
    ApplyResult applied = apply_ops(sample, ordered);

    AugmentationRecord rec;
    rec.input_id = sample.id;
    rec.output_id = make_output_id(sample.id, replica);
    rec.seed = seed;
    rec.item = item;
    rec.replica = replica;
    rec.ops = std::move(ordered);
    rec.image_checksum = checksum_image(applied.sample.image, output_bits);
    rec.mask_checksum = checksum_mask(applied.sample.mask);
    rec.reverb_empty_mask = applied.reverb_empty_mask;

    applied.sample.id = rec.output_id;
    return {std::move(applied.sample), std::move(rec)};
}

std::string record_to_jsonl(const AugmentationRecord& record) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["input_id"] = record.input_id;
    j["output_id"] = record.output_id;
    j["seed"] = record.seed;
    j["item"] = record.item;
    j["replica"] = record.replica;
    j["ops"] = nlohmann::ordered_json::array();
    for (const auto& op : record.ops) j["ops"].push_back(op_to_json(op));
    j["image_checksum"] = hex64(record.image_checksum);
    j["mask_checksum"] = hex64(record.mask_checksum);
    auto warnings = nlohmann::ordered_json::array();
    if (record.reverb_empty_mask) warnings.push_back("reverb_empty_mask");
    j["warnings"] = warnings;
    return j.dump();
}

AugmentationRecord record_from_jsonl(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("manifest: invalid JSON line: ") + e.what());
    }
    try {
        if (j.at("schema").get<int>() != 1) {
            throw ConfigError("manifest: unsupported schema version");
        }
        AugmentationRecord rec;
        rec.input_id = j.at("input_id").get<std::string>();
        rec.output_id = j.at("output_id").get<std::string>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.item = j.at("item").get<std::uint32_t>();
        rec.replica = j.at("replica").get<std::uint32_t>();
        for (const auto& jop : j.at("ops")) rec.ops.push_back(op_from_json(jop));
        rec.image_checksum = parse_hex64(j.at("image_checksum").get<std::string>());
        rec.mask_checksum = parse_hex64(j.at("mask_checksum").get<std::string>());
        for (const auto& warning : j.at("warnings")) {
            if (warning.get<std::string>() == "reverb_empty_mask") rec.reverb_empty_mask = true;
        }
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("manifest: malformed record: ") + e.what());
    }
}

std::vector<AugmentationRecord> run_batch(std::size_t item_count, const BatchSettings& settings,
                                          const BatchLoader& loader, const BatchSink& sink,
                                          int threads) {
    const std::size_t total = item_count * settings.replicas;
    std::vector<AugmentationRecord> records(total);
    std::vector<std::exception_ptr> errors(total);
    std::mutex sink_mutex;

    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    const long long n = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long long p = 0; p < n; ++p) {
        const std::size_t item = static_cast<std::size_t>(p) / settings.replicas;
        const std::uint32_t replica =
            static_cast<std::uint32_t>(static_cast<std::size_t>(p) % settings.replicas);
        try {
            Sample input = loader(item);
            RngStream rng = derive_stream(settings.seed, item, replica);
            auto ops = sample_params(rng, settings.ranges, settings.mode);
            ComposeResult result = compose(input, ops, settings.order, settings.seed,
                                           static_cast<std::uint32_t>(item), replica,
                                           settings.output_bits);
            if (sink) {
                std::lock_guard<std::mutex> lock(sink_mutex);
                sink(result.record, result.sample);
            }
            records[static_cast<std::size_t>(p)] = std::move(result.record);
        } catch (...) {
            const std::string where =
                "item " + std::to_string(item) + " replica " + std::to_string(replica) + ": ";
            try {
                throw;
            } catch (const ConfigError& e) {
                errors[static_cast<std::size_t>(p)] =
                    std::make_exception_ptr(ConfigError(where + e.what()));
            } catch (const DataError& e) {
                errors[static_cast<std::size_t>(p)] =
                    std::make_exception_ptr(DataError(where + e.what()));
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(p)] =
                    std::make_exception_ptr(ProcessingError(where + e.what()));
            } catch (...) {
                errors[static_cast<std::size_t>(p)] = std::current_exception();
            }
        }
    }

    for (std::size_t p = 0; p < total; ++p) {
        if (errors[p]) std::rethrow_exception(errors[p]);
    }
    return records;
}

}  // namespace usaug
