#pragma once

#include <string>

#include "usaug/pipeline.hpp"

namespace usaug {

// Whole-run configuration as read from the config JSON. Every field has a
// default, so {} is a valid document. Unknown keys are rejected at every
// nesting level.
struct RunConfig {
    std::uint64_t seed = 0;
    std::uint32_t replicas = 1;
    std::vector<OpKind> order{OpKind::deform, OpKind::reverb, OpKind::snr, OpKind::classical};
    Mode mode = Mode::all;
    int output_bits = 16;
    RangeConfig ranges;

    BatchSettings batch_settings() const {
        return BatchSettings{seed, replicas, order, mode, output_bits, ranges};
    }
};

// Parses and validates a config document. Throws ConfigError with the
// offending key path on any schema or range violation.
RunConfig parse_run_config(const std::string& json_text);

// parse_run_config on the contents of a file.
RunConfig load_run_config(const std::string& path);

void validate_run_config(const RunConfig& config);

}  // namespace usaug
