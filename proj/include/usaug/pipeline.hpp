#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "usaug/classical.hpp"
#include "usaug/deform.hpp"
#include "usaug/grid.hpp"
#include "usaug/reverb.hpp"
#include "usaug/rng.hpp"
#include "usaug/snr.hpp"

namespace usaug {

enum class OpKind { deform, reverb, snr, classical };

const char* to_string(OpKind kind);
OpKind op_kind_from_string(const std::string& name);

// One transform with its concrete sampled parameters.
struct SampledOp {
    OpKind kind;
    std::variant<DeformParams, ReverbParams, SnrParams, AffineParams> params;
};

// Enable flags, sampling ranges, and fixed module knobs for one run.
// Range defaults follow the published table; knob defaults match the
// per-module constants.
struct RangeConfig {
    bool enable_deform = true;
    bool enable_reverb = true;
    bool enable_snr = true;
    bool enable_classical = true;

    Range d_probe{30.0, 100.0};
    double sigma_lateral = 15.0;

    Range r_i{0.50, 0.9};
    int orders = 1;
    bool per_component = false;

    Range i_b{0.70, 1.40};
    Range i_bg{0.70, 1.40};
    double wavelength = 20.0;
    double sigma_onf = 0.55;
    double epsilon_scale = 1e-3;
    double mask_blur_sigma = 0.0;

    ClassicalRanges classical;
};

// all: every enabled op is applied to every output.
// subset: per output, each enabled op is included with probability 1/2.
enum class Mode { all, subset };

// Draws parameters for the enabled ops. Draw order is fixed and documented:
// ops are visited in the canonical order deform, reverb, snr, classical
// regardless of the configured apply order. In subset mode one inclusion
// flag per enabled op is drawn first (same canonical order), then the
// parameters of every enabled op, so the stream layout does not depend on
// the inclusion outcomes. Per-op draw counts: deform 1, reverb 1, snr 2,
// classical 10. Disabled ops consume no draws.
std::vector<SampledOp> sample_params(RngStream& rng, const RangeConfig& config, Mode mode);

struct ApplyResult {
    Sample sample;
    bool reverb_empty_mask = false;
};

// Applies the ops in the given order. An empty list is the bit-exact
// identity.
ApplyResult apply_ops(const Sample& sample, const std::vector<SampledOp>& ops);

// Everything needed to reproduce one output bit-exactly: re-running
// apply_ops on the named input with the recorded ops must reproduce the
// recorded checksums.
struct AugmentationRecord {
    std::string input_id;
    std::string output_id;
    std::uint64_t seed = 0;
    std::uint32_t item = 0;
    std::uint32_t replica = 0;
    std::vector<SampledOp> ops;  // in apply order
    std::uint64_t image_checksum = 0;
    std::uint64_t mask_checksum = 0;
    bool reverb_empty_mask = false;
};

struct ComposeResult {
    Sample sample;
    AugmentationRecord record;
};

// Reorders the sampled ops by `order` (ops absent from the sample are
// skipped), applies them, and fills in the provenance record. output_bits
// selects the quantization used for the image checksum (8 or 16).
ComposeResult compose(const Sample& sample, const std::vector<SampledOp>& ops,
                      const std::vector<OpKind>& order, std::uint64_t seed, std::uint32_t item,
                      std::uint32_t replica, int output_bits);

// One manifest line (no trailing newline) and its inverse. Round-tripping
// preserves every parameter bit-exactly.
std::string record_to_jsonl(const AugmentationRecord& record);
AugmentationRecord record_from_jsonl(const std::string& line);

struct BatchSettings {
    std::uint64_t seed = 0;
    std::uint32_t replicas = 1;
    std::vector<OpKind> order{OpKind::deform, OpKind::reverb, OpKind::snr, OpKind::classical};
    Mode mode = Mode::all;
    int output_bits = 16;
    RangeConfig ranges;
};

using BatchLoader = std::function<Sample(std::size_t item)>;
using BatchSink = std::function<void(const AugmentationRecord&, const Sample&)>;

// Runs item_count x replicas augmentations. Work is distributed over
// (item, replica) pairs; results depend only on (seed, item, replica),
// never on thread count or scheduling. The sink is invoked once per output
// under a lock, in no particular order. Returns records sorted by
// (item, replica). The first failing pair (lowest flattened index) has its
// exception rethrown.
std::vector<AugmentationRecord> run_batch(std::size_t item_count, const BatchSettings& settings,
                                          const BatchLoader& loader, const BatchSink& sink,
                                          int threads);

}  // namespace usaug
