#include "usaug/preview.hpp"

#include <algorithm>
#include <cmath>

#include "usaug/errors.hpp"
#include "usaug/pipeline.hpp"

namespace usaug {

namespace {

constexpr int kGutter = 4;
constexpr std::uint8_t kContour[3] = {255, 215, 0};

// A mask pixel on the boundary of its component (4-neighborhood).
bool is_contour(const BoneMask& mask, int r, int c) {
    if (!mask(r, c)) return false;
    if (r == 0 || r == mask.height - 1 || c == 0 || c == mask.width - 1) return true;
    return !mask(r - 1, c) || !mask(r + 1, c) || !mask(r, c - 1) || !mask(r, c + 1);
}

void paint_panel(PreviewMontage& montage, const Sample& sample, int top, int left) {
    for (int r = 0; r < sample.image.height; ++r) {
        for (int c = 0; c < sample.image.width; ++c) {
            std::size_t o =
                (static_cast<std::size_t>(top + r) * montage.width + (left + c)) * 3;
            if (is_contour(sample.mask, r, c)) {
                montage.rgb[o] = kContour[0];
                montage.rgb[o + 1] = kContour[1];
                montage.rgb[o + 2] = kContour[2];
            } else {
                double v = std::clamp(sample.image(r, c), 0.0, 1.0);
                auto g = static_cast<std::uint8_t>(std::lround(v * 255.0));
                montage.rgb[o] = g;
                montage.rgb[o + 1] = g;
                montage.rgb[o + 2] = g;
            }
        }
    }
}

const SampledOp& find_op(const std::vector<SampledOp>& ops, OpKind kind) {
    for (const auto& op : ops) {
        if (op.kind == kind) return op;
    }
    throw ProcessingError("preview: op missing from forced sample");
}

}  // namespace

PreviewMontage render_preview(const std::vector<Sample>& samples, const RunConfig& config) {
    if (samples.empty()) throw DataError("preview: no samples to render");

    int panel_w = 0;
    int total_h = 0;
    for (const auto& s : samples) {
        panel_w = std::max(panel_w, s.image.width);
        total_h += s.image.height;
    }
    total_h += kGutter * (static_cast<int>(samples.size()) - 1);

    PreviewMontage montage;
    montage.width = 5 * panel_w + 4 * kGutter;
    montage.height = total_h;
    montage.rgb.assign(static_cast<std::size_t>(montage.height) * montage.width * 3, 0);

    RangeConfig forced = config.ranges;
    forced.enable_deform = forced.enable_reverb = forced.enable_snr = forced.enable_classical =
        true;

    int top = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& original = samples[i];
        RngStream rng = derive_stream(config.seed, i, 0);
        std::vector<SampledOp> ops = sample_params(rng, forced, Mode::all);

        Sample deformed = apply_ops(original, {find_op(ops, OpKind::deform)}).sample;
        Sample reverbed = apply_ops(original, {find_op(ops, OpKind::reverb)}).sample;
        Sample tuned = apply_ops(original, {find_op(ops, OpKind::snr)}).sample;

        std::vector<SampledOp> composed_ops;
        for (const auto& op : ops) {
            bool enabled = (op.kind == OpKind::deform && config.ranges.enable_deform) ||
                           (op.kind == OpKind::reverb && config.ranges.enable_reverb) ||
                           (op.kind == OpKind::snr && config.ranges.enable_snr) ||
                           (op.kind == OpKind::classical && config.ranges.enable_classical);
            if (enabled) composed_ops.push_back(op);
        }
        Sample composed =
            compose(original, composed_ops, config.order, config.seed, static_cast<std::uint32_t>(i),
                    0, config.output_bits)
                .sample;

        const Sample* panels[5] = {&original, &deformed, &reverbed, &tuned, &composed};
        for (int col = 0; col < 5; ++col) {
            paint_panel(montage, *panels[col], top, col * (panel_w + kGutter));
        }
        top += original.image.height + kGutter;
    }
    return montage;
}

}  // namespace usaug
