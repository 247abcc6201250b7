#pragma once

#include <cstdint>
#include <vector>

#include "usaug/config.hpp"
#include "usaug/grid.hpp"

namespace usaug {

struct PreviewMontage {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
};

// Renders one row per sample with five panels: original, deformed,
// reverberation, SNR, composed. Panel parameters are drawn from the
// sample's stream with every op forced on, so the per-op panels always
// show their effect; the composed panel applies the ops that are enabled
// in the config, in the configured order. Mask contours are overlaid in
// yellow. Panels are separated by 4-px gutters.
PreviewMontage render_preview(const std::vector<Sample>& samples, const RunConfig& config);

}  // namespace usaug
