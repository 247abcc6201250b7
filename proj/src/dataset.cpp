#include "usaug/dataset.hpp"

#include <algorithm>
#include <map>

#include "usaug/core.hpp"
#include "usaug/errors.hpp"
#include "usaug/png_io.hpp"

namespace usaug {

namespace {

namespace fs = std::filesystem;

std::map<std::string, fs::path> list_pngs(const fs::path& dir) {
    std::map<std::string, fs::path> stems;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() != ".png") continue;
        stems.emplace(p.stem().string(), p);
    }
    return stems;
}

}  // namespace

std::vector<DatasetItem> scan_dataset(const fs::path& root) {
    const fs::path images_dir = root / "images";
    const fs::path masks_dir = root / "masks";
    if (!fs::is_directory(images_dir)) {
        throw DataError(root.string() + ": missing images/ directory");
    }
    if (!fs::is_directory(masks_dir)) {
        throw DataError(root.string() + ": missing masks/ directory");
    }

    auto images = list_pngs(images_dir);
    auto masks = list_pngs(masks_dir);

    for (const auto& [stem, path] : images) {
        if (!masks.count(stem)) {
            throw DataError("image '" + stem + "' has no matching mask");
        }
    }
    for (const auto& [stem, path] : masks) {
        if (!images.count(stem)) {
            throw DataError("mask '" + stem + "' has no matching image");
        }
    }
    if (images.empty()) {
        throw DataError(root.string() + ": dataset contains no images");
    }

    std::vector<DatasetItem> items;
    items.reserve(images.size());
    for (const auto& [stem, path] : images) {
        items.push_back({stem, path, masks.at(stem)});
    }
    return items;  // std::map iteration is already stem-sorted
}

Sample load_item(const DatasetItem& item) {
    PngImage raw_image = read_gray_png(item.image_path.string());
    PngImage raw_mask = read_gray_png(item.mask_path.string());
    return validate_pair(to_unit_grid(raw_image), to_unit_grid(raw_mask), item.stem);
}

std::vector<Finding> validate_dataset(const fs::path& root) {
    std::vector<Finding> findings;
    std::vector<DatasetItem> items;
    try {
        items = scan_dataset(root);
    } catch (const DataError& e) {
        findings.push_back({Finding::Severity::error, "", e.what()});
        return findings;
    }

    for (const auto& item : items) {
        PngImage raw_image, raw_mask;
        try {
            raw_image = read_gray_png(item.image_path.string());
            raw_mask = read_gray_png(item.mask_path.string());
        } catch (const DataError& e) {
            findings.push_back({Finding::Severity::error, item.stem, e.what()});
            continue;
        }
        if (raw_image.bit_depth != raw_mask.bit_depth) {
            findings.push_back({Finding::Severity::info, item.stem,
                                "image is " + std::to_string(raw_image.bit_depth) +
                                    "-bit, mask is " + std::to_string(raw_mask.bit_depth) +
                                    "-bit (both normalized on load)"});
        }
        try {
            validate_pair(to_unit_grid(raw_image), to_unit_grid(raw_mask), item.stem);
        } catch (const DataError& e) {
            findings.push_back({Finding::Severity::error, item.stem, e.what()});
        }
    }
    return findings;
}

}  // namespace usaug
