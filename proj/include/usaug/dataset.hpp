#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "usaug/grid.hpp"

namespace usaug {

struct DatasetItem {
    std::string stem;
    std::filesystem::path image_path;
    std::filesystem::path mask_path;
};

// Scans root/images/*.png and root/masks/*.png, pairing files by stem.
// Items come back sorted by stem, which fixes the item index used for
// stream derivation. Throws DataError on missing directories, unpaired
// files, or an empty dataset.
std::vector<DatasetItem> scan_dataset(const std::filesystem::path& root);

// Decodes, normalizes, and validates one pair. Throws DataError with the
// stem in the message.
Sample load_item(const DatasetItem& item);

struct Finding {
    enum class Severity { info, error };
    Severity severity = Severity::error;
    std::string stem;  // empty for dataset-level findings
    std::string message;
};

// Non-throwing dataset check: layout, decodability, bit depths,
// dimension matches, mask binarity. Mixed image/mask bit depths are
// reported as info.
std::vector<Finding> validate_dataset(const std::filesystem::path& root);

}  // namespace usaug
