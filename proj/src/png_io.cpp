#include "puviz/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "puviz/errors.hpp"

namespace puviz {

std::uint8_t quantize8(double channel) {
    const double clamped = channel < 0.0 ? 0.0 : (channel > 1.0 ? 1.0 : channel);
    return static_cast<std::uint8_t>(std::lround(clamped * 255.0));
}

namespace {

struct FileCloser {
    std::FILE* fp = nullptr;
    ~FileCloser() {
        if (fp) std::fclose(fp);
    }
};

struct WriteGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~WriteGuard() { png_destroy_write_struct(&png, &info); }
};

struct ReadGuard {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~ReadGuard() { png_destroy_read_struct(&png, &info, nullptr); }
};

} // namespace

void save_png(const Raster& image, const std::string& path) {
    if (image.width < 1 || image.height < 1 ||
        image.pixels.size() != static_cast<std::size_t>(image.width) * image.height)
        throw InvalidInputError("save_png: empty or inconsistent raster");
    if (image.has_alpha() && image.alpha.size() != image.pixels.size())
        throw InvalidInputError("save_png: alpha plane size does not match raster");

    const bool rgba = image.has_alpha();
    const int stride = rgba ? 4 : 3;

    // Interleave and quantize up front; nothing with a destructor may be
    // created after setjmp.
    std::vector<png_byte> bytes(image.pixels.size() * stride);
    std::vector<png_bytep> rows(image.height);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        bytes[stride * i] = quantize8(image.pixels[i].r);
        bytes[stride * i + 1] = quantize8(image.pixels[i].g);
        bytes[stride * i + 2] = quantize8(image.pixels[i].b);
        if (rgba) bytes[stride * i + 3] = quantize8(image.alpha[i]);
    }
    for (int y = 0; y < image.height; ++y)
        rows[y] = bytes.data() + static_cast<std::size_t>(y) * image.width * stride;

    FileCloser file{std::fopen(path.c_str(), "wb")};
    if (!file.fp) throw IoError("cannot open '" + path + "' for writing");

    WriteGuard g;
    g.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!g.png) throw IoError("libpng: failed to allocate write struct");
    g.info = png_create_info_struct(g.png);
    if (!g.info) throw IoError("libpng: failed to allocate info struct");

    if (setjmp(png_jmpbuf(g.png))) throw IoError("libpng: failure writing '" + path + "'");

    png_init_io(g.png, file.fp);
    png_set_IHDR(g.png, g.info, static_cast<png_uint_32>(image.width),
                 static_cast<png_uint_32>(image.height), 8,
                 rgba ? PNG_COLOR_TYPE_RGB_ALPHA : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_sRGB_gAMA_and_cHRM(g.png, g.info, PNG_sRGB_INTENT_PERCEPTUAL);
    png_set_compression_level(g.png, 6);
    png_write_info(g.png, g.info);
    png_write_image(g.png, rows.data());
    png_write_end(g.png, nullptr);
}

Raster load_png(const std::string& path) {
    FileCloser file{std::fopen(path.c_str(), "rb")};
    if (!file.fp) throw IoError("cannot open '" + path + "'");

    png_byte signature[8] = {};
    if (std::fread(signature, 1, 8, file.fp) != 8 || png_sig_cmp(signature, 0, 8) != 0)
        throw LoadError("'" + path + "' is not a PNG file");

    ReadGuard g;
    g.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!g.png) throw IoError("libpng: failed to allocate read struct");
    g.info = png_create_info_struct(g.png);
    if (!g.info) throw IoError("libpng: failed to allocate info struct");

    std::vector<png_byte> bytes;
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(g.png))) throw LoadError("libpng: failure reading '" + path + "'");

    png_init_io(g.png, file.fp);
    png_set_sig_bytes(g.png, 8);
    png_read_info(g.png, g.info);

    // Normalize every input variant to 8-bit RGB(A).
    png_set_palette_to_rgb(g.png);
    png_set_expand_gray_1_2_4_to_8(g.png);
    if (png_get_valid(g.png, g.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(g.png);
    png_set_strip_16(g.png);
    if (png_get_color_type(g.png, g.info) == PNG_COLOR_TYPE_GRAY ||
        png_get_color_type(g.png, g.info) == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(g.png);
    png_read_update_info(g.png, g.info);

    const png_uint_32 width = png_get_image_width(g.png, g.info);
    const png_uint_32 height = png_get_image_height(g.png, g.info);
    const int channels = png_get_channels(g.png, g.info);
    if (channels != 3 && channels != 4)
        throw LoadError("'" + path + "': unsupported channel count after expansion");

    bytes.resize(static_cast<std::size_t>(width) * height * channels);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y)
        rows[y] = bytes.data() + static_cast<std::size_t>(y) * width * channels;
    png_read_image(g.png, rows.data());
    png_read_end(g.png, nullptr);

    Raster image(static_cast<int>(width), static_cast<int>(height));
    if (channels == 4) image.alpha.resize(image.pixels.size());
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        image.pixels[i] = {bytes[channels * i] / 255.0, bytes[channels * i + 1] / 255.0,
                           bytes[channels * i + 2] / 255.0};
        if (channels == 4) image.alpha[i] = bytes[channels * i + 3] / 255.0;
    }
    return image;
}

} // namespace puviz
