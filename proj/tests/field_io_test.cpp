#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "puviz/errors.hpp"
#include "puviz/field_io.hpp"
#include "puviz/png_io.hpp"

using namespace puviz;

namespace {

const std::string kDataDir = PUVIZ_DATA_DIR;

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "puviz_fieldio_test";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("a 2x2 two-channel file of zeros loads as a zero vector field") {
    TempDir tmp;
    VectorField2D zeros;
    zeros.width = 2;
    zeros.height = 2;
    zeros.data.assign(8, 0.0f);
    save_field(zeros, tmp.file("z.header.json"), tmp.file("z.f32"));

    const auto loaded = load_field(tmp.file("z.header.json"), tmp.file("z.f32"));
    REQUIRE(std::holds_alternative<VectorField2D>(loaded));
    const auto& f = std::get<VectorField2D>(loaded);
    CHECK(f.width == 2);
    CHECK(f.height == 2);
    for (float v : f.data) REQUIRE(v == 0.0f);
}

TEST_CASE("field round trip is bit identical") {
    TempDir tmp;
    VectorField2D field;
    field.width = 3;
    field.height = 2;
    field.data = {1.5f, -2.25f, 0.0f, 3.0f, -0.001f, 7.5f,
                  8.0f, -9.0f, 10.5f, 11.0f, -12.5f, 0.25f};
    save_field(field, tmp.file("v.header.json"), tmp.file("v.f32"));
    const auto back = std::get<VectorField2D>(load_field(tmp.file("v.header.json"),
                                                          tmp.file("v.f32")));
    REQUIRE(back.data.size() == field.data.size());
    for (std::size_t i = 0; i < field.data.size(); ++i) REQUIRE(back.data[i] == field.data[i]);

    CompositionField comp;
    comp.width = 2;
    comp.height = 2;
    comp.channels = {{{1.0f, 2.0f, 3.0f, 4.0f},
                      {0.5f, 0.25f, 0.125f, 0.0f},
                      {9.0f, 8.0f, 7.0f, 6.0f}}};
    save_field(comp, tmp.file("c.header.json"), tmp.file("c.f32"));
    const auto cback = std::get<CompositionField>(load_field(tmp.file("c.header.json"),
                                                             tmp.file("c.f32")));
    for (int ch = 0; ch < 3; ++ch)
        for (std::size_t i = 0; i < 4; ++i)
            REQUIRE(cback.channels[ch][i] == comp.channels[ch][i]);
}

TEST_CASE("header/payload mismatches are load errors") {
    TempDir tmp;
    write_text(tmp.file("h.json"),
               R"({"width":2,"height":2,"channels":2,"dtype":"f32",)"
               R"("byte_order":"LE","layout":"row-major-interleaved"})");
    write_text(tmp.file("short.f32"), "only a few bytes");
    CHECK_THROWS_AS(load_field(tmp.file("h.json"), tmp.file("short.f32")), LoadError);

    // Unsupported dtype.
    write_text(tmp.file("h64.json"),
               R"({"width":2,"height":2,"channels":2,"dtype":"f64",)"
               R"("byte_order":"LE","layout":"row-major-interleaved"})");
    CHECK_THROWS_AS(load_field(tmp.file("h64.json"), tmp.file("short.f32")), LoadError);

    // Missing and extra keys.
    write_text(tmp.file("hmiss.json"), R"({"width":2,"height":2,"channels":2})");
    CHECK_THROWS_AS(load_field_header(tmp.file("hmiss.json")), LoadError);
    write_text(tmp.file("hextra.json"),
               R"({"width":2,"height":2,"channels":2,"dtype":"f32",)"
               R"("byte_order":"LE","layout":"row-major-interleaved","note":"x"})");
    CHECK_THROWS_AS(load_field_header(tmp.file("hextra.json")), LoadError);

    // Wrong channel count for load_field.
    write_text(tmp.file("h4.json"),
               R"({"width":1,"height":1,"channels":4,"dtype":"f32",)"
               R"("byte_order":"LE","layout":"row-major-interleaved"})");
    write_text(tmp.file("d16.f32"), std::string(16, '\0'));
    CHECK_THROWS_AS(load_field(tmp.file("h4.json"), tmp.file("d16.f32")), LoadError);

    CHECK_THROWS_AS(load_field(tmp.file("absent.json"), tmp.file("z.f32")), IoError);
}

TEST_CASE("non-finite samples are reported with their byte offset") {
    TempDir tmp;
    write_text(tmp.file("h.json"),
               R"({"width":2,"height":1,"channels":2,"dtype":"f32",)"
               R"("byte_order":"LE","layout":"row-major-interleaved"})");
    // Four floats; third is +inf (little-endian 0x7f800000).
    std::ofstream out(tmp.file("d.f32"), std::ios::binary);
    const unsigned char bytes[16] = {0, 0, 0x80, 0x3f, 0, 0, 0, 0,
                                     0, 0, 0x80, 0x7f, 0, 0, 0, 0};
    out.write(reinterpret_cast<const char*>(bytes), 16);
    out.close();
    try {
        load_field(tmp.file("h.json"), tmp.file("d.f32"));
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("byte offset 8") != std::string::npos);
    }
}

TEST_CASE("csv channel parsing") {
    TempDir tmp;
    write_text(tmp.file("a.csv"), "0,1\n2,3\n");
    const Grid2D g = load_csv_channel(tmp.file("a.csv"));
    CHECK(g.width == 2);
    CHECK(g.height == 2);
    CHECK(g.values[0] == 0.0f);
    CHECK(g.values[3] == 3.0f);

    write_text(tmp.file("one.csv"), "5\n");
    const Grid2D one = load_csv_channel(tmp.file("one.csv"));
    CHECK(one.width == 1);
    CHECK(one.height == 1);
    CHECK(one.values[0] == 5.0f);

    write_text(tmp.file("empty.csv"), "");
    CHECK_THROWS_AS(load_csv_channel(tmp.file("empty.csv")), LoadError);

    write_text(tmp.file("ragged.csv"), "0,1\n2\n");
    try {
        load_csv_channel(tmp.file("ragged.csv"));
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    write_text(tmp.file("junk.csv"), "0,1\n2,x\n");
    CHECK_THROWS_AS(load_csv_channel(tmp.file("junk.csv")), LoadError);
}

TEST_CASE("combine_channels validates shapes and signs") {
    Grid2D a{2, 1, {1.0f, 2.0f}};
    Grid2D b{2, 1, {3.0f, 4.0f}};
    Grid2D c{2, 1, {5.0f, 6.0f}};
    const CompositionField f = combine_channels(a, b, c, {"x", "y", "z"});
    CHECK(f.width == 2);
    CHECK(f.labels[1] == "y");
    CHECK(f.value(2, 1, 0) == 6.0);

    Grid2D wrong{1, 2, {1.0f, 2.0f}};
    CHECK_THROWS_AS(combine_channels(a, wrong, c, {"x", "y", "z"}), InvalidInputError);

    Grid2D neg{2, 1, {1.0f, -2.0f}};
    CHECK_THROWS_AS(combine_channels(a, neg, c, {"x", "y", "z"}), InvalidInputError);
}

TEST_CASE("load_raw_channel requires a single channel") {
    TempDir tmp;
    save_field_header({3, 1, 1}, tmp.file("g.header.json"));
    {
        std::ofstream out(tmp.file("g.f32"), std::ios::binary);
        const unsigned char bytes[12] = {0, 0, 0,    0x3f, 0, 0, 0xc0, 0x3f,
                                         0, 0, 0x20, 0x40};
        out.write(reinterpret_cast<const char*>(bytes), 12);
    }
    const Grid2D back = load_raw_channel(tmp.file("g.header.json"), tmp.file("g.f32"));
    CHECK(back.width == 3);
    CHECK(back.values[0] == 0.5f);
    CHECK(back.values[1] == 1.5f);
    CHECK(back.values[2] == 2.5f);

    save_field_header({3, 1, 2}, tmp.file("g2.header.json"));
    CHECK_THROWS_AS(load_raw_channel(tmp.file("g2.header.json"), tmp.file("g.f32")), LoadError);
}

TEST_CASE("checked-in fixtures load") {
    const auto vortex = load_field(kDataDir + "/fixtures/vortex.header.json",
                                   kDataDir + "/fixtures/vortex.f32");
    REQUIRE(std::holds_alternative<VectorField2D>(vortex));
    const auto& v = std::get<VectorField2D>(vortex);
    CHECK(v.width == 96);
    CHECK(v.height == 96);

    const auto twophase = load_field(kDataDir + "/fixtures/twophase.header.json",
                                     kDataDir + "/fixtures/twophase.f32");
    REQUIRE(std::holds_alternative<CompositionField>(twophase));
    const auto& t = std::get<CompositionField>(twophase);
    CHECK(t.width == 96);
    CHECK(t.height == 64);
    CHECK(t.value(1, 0, 0) == 600.0);
    CHECK(t.value(0, 95, 0) == 500.0);
}

TEST_CASE("png round trip") {
    TempDir tmp;
    Raster img(3, 2);
    img.at(0, 0) = {1.0, 1.0, 1.0};
    img.at(1, 0) = {0.5, 0.25, 0.125};
    img.at(2, 0) = {0.0, 0.0, 0.0};
    img.at(0, 1) = {0.2, 0.4, 0.6};
    img.at(1, 1) = {1.0, 0.0, 0.0};
    img.at(2, 1) = {0.123, 0.456, 0.789};

    const std::string path = tmp.file("img.png");
    save_png(img, path);
    const Raster back = load_png(path);
    REQUIRE(back.width == 3);
    REQUIRE(back.height == 2);
    CHECK_FALSE(back.has_alpha());

    // 8-bit quantization: round(c*255), so 0.5 -> 128 and the round trip
    // error stays within half a step.
    CHECK(back.at(1, 0).r == 128.0 / 255.0);
    CHECK(back.at(0, 0).r == 1.0);
    CHECK(back.at(2, 0).g == 0.0);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        REQUIRE(std::fabs(back.pixels[i].r - img.pixels[i].r) <= 0.5 / 255.0 + 1e-12);
        REQUIRE(std::fabs(back.pixels[i].g - img.pixels[i].g) <= 0.5 / 255.0 + 1e-12);
        REQUIRE(std::fabs(back.pixels[i].b - img.pixels[i].b) <= 0.5 / 255.0 + 1e-12);
    }

    // Saving the reloaded image reproduces the file byte for byte.
    const std::string path2 = tmp.file("img2.png");
    save_png(back, path2);
    std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
    const std::string b1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    const std::string b2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(b1 == b2);
}

TEST_CASE("png with alpha round trips") {
    TempDir tmp;
    Raster img(2, 1);
    img.at(0, 0) = {0.8, 0.1, 0.3};
    img.at(1, 0) = {0.0, 1.0, 0.5};
    img.alpha = {1.0, 0.0};
    const std::string path = tmp.file("rgba.png");
    save_png(img, path);
    const Raster back = load_png(path);
    REQUIRE(back.has_alpha());
    CHECK(back.alpha[0] == 1.0);
    CHECK(back.alpha[1] == 0.0);
}

TEST_CASE("png i/o failures carry the path") {
    CHECK_THROWS_AS(load_png("/nonexistent/dir/x.png"), IoError);
    Raster img(1, 1);
    CHECK_THROWS_AS(save_png(img, "/nonexistent/dir/x.png"), IoError);
    TempDir tmp;
    write_text(tmp.file("fake.png"), "this is not a png");
    CHECK_THROWS_AS(load_png(tmp.file("fake.png")), LoadError);
}

TEST_CASE("quantize8") {
    CHECK(quantize8(0.0) == 0);
    CHECK(quantize8(1.0) == 255);
    CHECK(quantize8(0.5) == 128);  // round(127.5) away from zero
    CHECK(quantize8(-0.2) == 0);
    CHECK(quantize8(1.7) == 255);
}
