#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "usaug/config.hpp"
#include "usaug/dataset.hpp"
#include "usaug/errors.hpp"
#include "usaug/pipeline.hpp"
#include "usaug/png_io.hpp"
#include "usaug/preview.hpp"

namespace fs = std::filesystem;
using namespace usaug;

namespace {

struct AugmentArgs {
    std::string config_path;
    std::string dataset_root;
    std::string out_dir;
    int threads = 0;
    std::int64_t seed_override = -1;
};

struct PreviewArgs {
    std::string config_path;
    std::string dataset_root;
    std::string out_path = "preview.png";
    int rows = 4;
    std::int64_t seed_override = -1;
};

RunConfig load_config_with_seed(const std::string& path, std::int64_t seed_override) {
    RunConfig config = load_run_config(path);
    if (seed_override >= 0) config.seed = static_cast<std::uint64_t>(seed_override);
    return config;
}

int run_augment(const AugmentArgs& args) {
    RunConfig config = load_config_with_seed(args.config_path, args.seed_override);
    std::vector<DatasetItem> items = scan_dataset(args.dataset_root);

    const fs::path out_root(args.out_dir);
    fs::create_directories(out_root / "images");
    fs::create_directories(out_root / "masks");

    BatchLoader loader = [&items](std::size_t item) { return load_item(items[item]); };
    BatchSink sink = [&](const AugmentationRecord& record, const Sample& sample) {
        write_gray_png((out_root / "images" / (record.output_id + ".png")).string(),
                       from_unit_grid(sample.image, config.output_bits));
        write_gray_png((out_root / "masks" / (record.output_id + ".png")).string(),
                       mask_to_png(sample.mask));
    };

    std::vector<AugmentationRecord> records =
        run_batch(items.size(), config.batch_settings(), loader, sink, args.threads);

    const fs::path manifest_path = out_root / "manifest.jsonl";
    std::ofstream manifest(manifest_path, std::ios::binary | std::ios::trunc);
    if (!manifest) throw DataError(manifest_path.string() + ": cannot open for writing");
    for (const auto& record : records) manifest << record_to_jsonl(record) << '\n';
    manifest.flush();
    if (!manifest) throw DataError(manifest_path.string() + ": write failed");

    std::size_t warned = 0;
    for (const auto& record : records) {
        if (record.reverb_empty_mask) ++warned;
    }
    std::cout << "augmented " << items.size() << " inputs x " << config.replicas
              << " replicas -> " << records.size() << " outputs in " << args.out_dir << "\n";
    if (warned > 0) {
        std::cout << "warning: " << warned
                  << " output(s) had an empty mask when reverberation ran\n";
    }
    return 0;
}

int run_preview(const PreviewArgs& args) {
    RunConfig config = load_config_with_seed(args.config_path, args.seed_override);
    if (args.rows < 1) throw ConfigError("preview: row count must be at least 1");
    std::vector<DatasetItem> items = scan_dataset(args.dataset_root);

    const std::size_t n = std::min<std::size_t>(args.rows, items.size());
    std::vector<Sample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) samples.push_back(load_item(items[i]));

    PreviewMontage montage = render_preview(samples, config);
    write_rgb8_png(args.out_path, montage.height, montage.width, montage.rgb);
    std::cout << "wrote " << montage.width << "x" << montage.height << " preview ("
              << n << " rows) to " << args.out_path << "\n";
    return 0;
}

int run_validate(const std::string& dataset_root, bool as_json) {
    std::vector<Finding> findings = validate_dataset(dataset_root);
    std::size_t errors = 0;
    for (const auto& f : findings) {
        if (f.severity == Finding::Severity::error) ++errors;
    }

    if (as_json) {
        nlohmann::ordered_json report;
        report["dataset"] = dataset_root;
        report["errors"] = errors;
        report["findings"] = nlohmann::ordered_json::array();
        for (const auto& f : findings) {
            nlohmann::ordered_json jf;
            jf["severity"] = f.severity == Finding::Severity::error ? "error" : "info";
            jf["stem"] = f.stem;
            jf["message"] = f.message;
            report["findings"].push_back(jf);
        }
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& f : findings) {
            std::cout << (f.severity == Finding::Severity::error ? "error" : "info") << ": ";
            if (!f.stem.empty()) std::cout << f.stem << ": ";
            std::cout << f.message << "\n";
        }
        std::cout << dataset_root << ": " << findings.size() << " finding(s), " << errors
                  << " error(s)\n";
    }
    return errors > 0 ? 2 : 0;
}

struct ParamStats {
    std::vector<double> values;
    Range range;
};

void print_histogram(const std::string& name, ParamStats& stats) {
    auto& v = stats.values;
    if (v.empty()) {
        std::cout << name << ": no samples\n";
        return;
    }
    std::sort(v.begin(), v.end());
    const double vmin = v.front(), vmax = v.back();
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());

    const bool in_range = vmin >= stats.range.lo && vmax <= stats.range.hi;
    std::printf("%s: n=%zu min=%.4f mean=%.4f max=%.4f range=[%.4f, %.4f] %s\n", name.c_str(),
                v.size(), vmin, mean, vmax, stats.range.lo, stats.range.hi,
                in_range ? "OK" : "OUT OF RANGE");

    constexpr int kBins = 10;
    const double lo = stats.range.lo, hi = stats.range.hi;
    const double span = hi > lo ? hi - lo : 1.0;
    std::size_t counts[kBins] = {};
    for (double x : v) {
        int b = static_cast<int>((x - lo) / span * kBins);
        b = std::clamp(b, 0, kBins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    std::size_t peak = *std::max_element(counts, counts + kBins);
    for (int b = 0; b < kBins; ++b) {
        const double b_lo = lo + span * b / kBins;
        const double b_hi = lo + span * (b + 1) / kBins;
        int bar = peak == 0 ? 0 : static_cast<int>(40.0 * counts[b] / static_cast<double>(peak));
        std::printf("  [%8.3f, %8.3f) %6zu %s\n", b_lo, b_hi, counts[b],
                    std::string(static_cast<std::size_t>(bar), '#').c_str());
    }
}

int run_stats(const std::string& manifest_path, const std::string& config_path) {
    RangeConfig ranges;
    if (!config_path.empty()) ranges = load_run_config(config_path).ranges;

    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) throw DataError(manifest_path + ": cannot open");

    std::map<std::string, ParamStats> stats;
    stats["d_probe"].range = ranges.d_probe;
    stats["r_i"].range = ranges.r_i;
    stats["i_b"].range = ranges.i_b;
    stats["i_bg"].range = ranges.i_bg;
    stats["rotation_deg"].range = ranges.classical.rotation_deg;
    stats["brightness_delta"].range = ranges.classical.brightness_delta;

    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        AugmentationRecord record = record_from_jsonl(line);
        ++lines;
        for (const auto& op : record.ops) {
            switch (op.kind) {
                case OpKind::deform:
                    stats["d_probe"].values.push_back(std::get<DeformParams>(op.params).d_probe);
                    break;
                case OpKind::reverb:
                    stats["r_i"].values.push_back(std::get<ReverbParams>(op.params).r_i);
                    break;
                case OpKind::snr: {
                    const auto& p = std::get<SnrParams>(op.params);
                    stats["i_b"].values.push_back(p.i_b);
                    stats["i_bg"].values.push_back(p.i_bg);
                    break;
                }
                case OpKind::classical: {
                    const auto& p = std::get<AffineParams>(op.params);
                    stats["rotation_deg"].values.push_back(p.rotation_deg);
                    stats["brightness_delta"].values.push_back(p.brightness_delta);
                    break;
                }
            }
        }
    }
    if (lines == 0) throw DataError(manifest_path + ": manifest holds no records");

    std::cout << manifest_path << ": " << lines << " record(s)\n";
    for (auto& [name, s] : stats) print_histogram(name, s);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"physics-inspired ultrasound augmentation"};
    app.require_subcommand(1);

    AugmentArgs aug;
    CLI::App* augment = app.add_subcommand("augment", "augment a dataset and write a manifest");
    augment->add_option("-c,--config", aug.config_path, "config JSON path")->required();
    augment->add_option("-i,--input", aug.dataset_root, "dataset root (images/ + masks/)")
        ->required();
    augment->add_option("-o,--output", aug.out_dir, "output directory")->required();
    augment->add_option("--threads", aug.threads, "worker threads (0 = all cores)");
    augment->add_option("--seed", aug.seed_override, "override the config seed");

    PreviewArgs pre;
    CLI::App* preview = app.add_subcommand("preview", "render an augmentation montage");
    preview->add_option("-c,--config", pre.config_path, "config JSON path")->required();
    preview->add_option("-i,--input", pre.dataset_root, "dataset root")->required();
    preview->add_option("-o,--output", pre.out_path, "output PNG path");
    preview->add_option("-n,--rows", pre.rows, "number of dataset rows to render");
    preview->add_option("--seed", pre.seed_override, "override the config seed");

    std::string validate_root;
    bool validate_json = false;
    CLI::App* validate = app.add_subcommand("validate", "check dataset integrity");
    validate->add_option("dataset", validate_root, "dataset root")->required();
    validate->add_flag("--json", validate_json, "emit a JSON report");

    std::string stats_manifest;
    std::string stats_config;
    CLI::App* stats = app.add_subcommand("stats", "parameter histograms for a manifest");
    stats->add_option("manifest", stats_manifest, "manifest.jsonl path")->required();
    stats->add_option("-c,--config", stats_config, "config whose ranges to check against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (augment->parsed()) return run_augment(aug);
        if (preview->parsed()) return run_preview(pre);
        if (validate->parsed()) return run_validate(validate_root, validate_json);
        if (stats->parsed()) return run_stats(stats_manifest, stats_config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const ProcessingError& e) {
        std::cerr << "processing error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
