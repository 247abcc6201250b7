#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "test_util.hpp"
#include "usaug/dataset.hpp"
#include "usaug/errors.hpp"
#include "usaug/png_io.hpp"

using namespace usaug;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct Fixture {
    fs::path root;

    explicit Fixture(const std::string& name) {
        root = fs::temp_directory_path() / ("usaug_ds_" + name);
        fs::remove_all(root);
        fs::create_directories(root / "images");
        fs::create_directories(root / "masks");
    }
    ~Fixture() { fs::remove_all(root); }

    void add(const std::string& stem, int h = 24, int w = 32, int image_bits = 16,
             std::uint64_t seed = 3) {
        write_gray_png((root / "images" / (stem + ".png")).string(),
                       from_unit_grid(speckle(h, w, seed), image_bits));
        write_gray_png((root / "masks" / (stem + ".png")).string(),
                       mask_to_png(rect_mask(h, w, h / 2, h / 2 + 3, 4, w - 5)));
    }
};

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("items come back sorted by stem") {
    Fixture f("sorted");
    f.add("zebra");
    f.add("alpha");
    f.add("mid");
    auto items = scan_dataset(f.root);
    REQUIRE(items.size() == 3);
    CHECK(items[0].stem == "alpha");
    CHECK(items[1].stem == "mid");
    CHECK(items[2].stem == "zebra");
    CHECK(items[0].image_path.filename() == "alpha.png");
    CHECK(items[0].mask_path.filename() == "alpha.png");
}

TEST_CASE("non-png files are ignored") {
    Fixture f("ignore");
    f.add("a");
    std::ofstream(f.root / "images" / "notes.txt") << "not a frame";
    std::ofstream(f.root / "masks" / "thumbs.db") << "junk";
    auto items = scan_dataset(f.root);
    CHECK(items.size() == 1);
}

TEST_CASE("layout problems are data errors") {
    Fixture f("layout");

    SUBCASE("missing images directory") {
        fs::remove_all(f.root / "images");
        CHECK_THROWS_WITH_AS(scan_dataset(f.root),
                             (f.root.string() + ": missing images/ directory").c_str(), DataError);
    }
    SUBCASE("missing masks directory") {
        fs::remove_all(f.root / "masks");
        CHECK_THROWS_AS(scan_dataset(f.root), DataError);
    }
    SUBCASE("image without mask") {
        f.add("lonely");
        fs::remove(f.root / "masks" / "lonely.png");
        CHECK_THROWS_WITH_AS(scan_dataset(f.root), "image 'lonely' has no matching mask",
                             DataError);
    }
    SUBCASE("mask without image") {
        f.add("orphan");
        fs::remove(f.root / "images" / "orphan.png");
        CHECK_THROWS_WITH_AS(scan_dataset(f.root), "mask 'orphan' has no matching image",
                             DataError);
    }
    SUBCASE("empty dataset") {
        CHECK_THROWS_WITH_AS(scan_dataset(f.root),
                             (f.root.string() + ": dataset contains no images").c_str(),
                             DataError);
    }
}

TEST_CASE("load_item normalizes and validates") {
    Fixture f("load");
    f.add("frame", 20, 28, 16);
    auto items = scan_dataset(f.root);
    Sample s = load_item(items[0]);
    CHECK(s.id == "frame");
    CHECK(s.image.height == 20);
    CHECK(s.image.width == 28);

    PngImage raw = read_gray_png(items[0].image_path.string());
    for (std::size_t i = 0; i < raw.pixels.size(); ++i) {
        CHECK(s.image.data[i] == doctest::Approx(raw.pixels[i] / 65535.0).epsilon(1e-12));
    }
    bool any_bone = false;
    for (auto v : s.mask.data) {
        CHECK((v == 0 || v == 1));
        any_bone = any_bone || v != 0;
    }
    CHECK(any_bone);
}

TEST_CASE("8-bit images normalize by 255") {
    Fixture f("bits8");
    f.add("frame", 12, 16, 8);
    Sample s = load_item(scan_dataset(f.root)[0]);
    PngImage raw = read_gray_png((f.root / "images" / "frame.png").string());
    CHECK(raw.bit_depth == 8);
    for (std::size_t i = 0; i < raw.pixels.size(); ++i) {
        CHECK(s.image.data[i] == doctest::Approx(raw.pixels[i] / 255.0).epsilon(1e-12));
    }
}

TEST_CASE("a gray mask fails to load with the stem in the message") {
    Fixture f("graymask");
    f.add("bad");
    PngImage gray;
    gray.height = 24;
    gray.width = 32;
    gray.bit_depth = 8;
    gray.pixels.assign(24 * 32, 0);
    gray.pixels[10] = 127;
    write_gray_png((f.root / "masks" / "bad.png").string(), gray);

    auto items = scan_dataset(f.root);
    try {
        load_item(items[0]);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
}

TEST_CASE("mismatched dimensions fail to load") {
    Fixture f("dims");
    f.add("frame", 24, 32);
    write_gray_png((f.root / "masks" / "frame.png").string(),
                   mask_to_png(rect_mask(24, 30, 6, 9, 2, 20)));
    CHECK_THROWS_AS(load_item(scan_dataset(f.root)[0]), DataError);
}

TEST_CASE("validate_dataset reports a clean dataset as clean") {
    Fixture f("clean");
    f.add("a");
    f.add("b");
    // Masks are 8-bit while images are 16-bit, which is reported as info.
    auto findings = validate_dataset(f.root);
    for (const auto& finding : findings) {
        CHECK(finding.severity == Finding::Severity::info);
    }
}

TEST_CASE("matching bit depths produce no findings at all") {
    Fixture f("nobits");
    f.add("a", 24, 32, 8);
    CHECK(validate_dataset(f.root).empty());
}

TEST_CASE("validate_dataset pins errors to the offending stem") {
    Fixture f("pin");
    f.add("good", 24, 32, 8);
    f.add("bad", 24, 32, 8);
    PngImage gray;
    gray.height = 24;
    gray.width = 32;
    gray.bit_depth = 8;
    gray.pixels.assign(24 * 32, 60);
    write_gray_png((f.root / "masks" / "bad.png").string(), gray);

    auto findings = validate_dataset(f.root);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].severity == Finding::Severity::error);
    CHECK(findings[0].stem == "bad");

    SUBCASE("layout errors surface as dataset-level findings") {
        fs::remove(f.root / "masks" / "good.png");
        auto layout = validate_dataset(f.root);
        REQUIRE(layout.size() == 1);
        CHECK(layout[0].severity == Finding::Severity::error);
        CHECK(layout[0].stem.empty());
    }
}

TEST_CASE("undecodable files are per-item errors") {
    Fixture f("corrupt");
    f.add("ok", 24, 32, 8);
    f.add("broken", 24, 32, 8);
    std::ofstream(f.root / "images" / "broken.png", std::ios::binary) << "PNG? no.";
    auto findings = validate_dataset(f.root);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].stem == "broken");
    CHECK(findings[0].severity == Finding::Severity::error);
}

}  // TEST_SUITE
