#include "qhf/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace qhf {

namespace {

std::string describe(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::uint8_t quantize(double x) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
}

// Reads the next PPM header token, skipping whitespace and '#' comments.
std::string ppm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

ColorImage read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + describe(path));
    if (ppm_token(in) != "P6") throw IoError(describe(path) + " is not a binary PPM (P6)");
    std::size_t width = 0, height = 0;
    int maxval = 0;
    try {
        width = std::stoul(ppm_token(in));
        height = std::stoul(ppm_token(in));
        maxval = std::stoi(ppm_token(in));
    } catch (const std::exception&) {
        throw IoError("malformed PPM header in " + describe(path));
    }
    if (width == 0 || height == 0 || maxval <= 0 || maxval > 255) {
        throw IoError("unsupported PPM geometry or maxval in " + describe(path));
    }
    std::vector<std::uint8_t> raw(width * height * 3);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        throw IoError("truncated PPM data in " + describe(path));
    }
    ColorImage img(width, height);
    const double scale = 1.0 / maxval;
    auto px = img.values();
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = {raw[3 * i] * scale, raw[3 * i + 1] * scale, raw[3 * i + 2] * scale};
    }
    return img;
}

struct PngImage {
    png_image image;
    PngImage() {
        std::memset(&image, 0, sizeof image);
        image.version = PNG_IMAGE_VERSION;
    }
    ~PngImage() { png_image_free(&image); }
    PngImage(const PngImage&) = delete;
    PngImage& operator=(const PngImage&) = delete;
};

std::vector<std::uint8_t> read_png(const std::filesystem::path& path, png_uint_32 format,
                                   std::size_t& width, std::size_t& height) {
    PngImage png;
    if (!png_image_begin_read_from_file(&png.image, path.c_str())) {
        throw IoError("cannot decode PNG " + describe(path) + ": " + png.image.message);
    }
    png.image.format = format;
    std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png.image));
    if (!png_image_finish_read(&png.image, nullptr, buf.data(), 0, nullptr)) {
        throw IoError("cannot decode PNG " + describe(path) + ": " + png.image.message);
    }
    width = png.image.width;
    height = png.image.height;
    return buf;
}

void write_png(const std::filesystem::path& path, png_uint_32 format, std::size_t width,
               std::size_t height, const std::vector<std::uint8_t>& data) {
    PngImage png;
    png.image.width = static_cast<png_uint_32>(width);
    png.image.height = static_cast<png_uint_32>(height);
    png.image.format = format;
    if (!png_image_write_to_file(&png.image, path.c_str(), 0, data.data(), 0, nullptr)) {
        throw IoError("cannot write PNG " + describe(path) + ": " + png.image.message);
    }
}

}  // namespace

RasterFormat sniff_format(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + describe(path));
    std::array<unsigned char, 8> magic{};
    in.read(reinterpret_cast<char*>(magic.data()), magic.size());
    const auto got = in.gcount();
    if (got >= 8 && png_sig_cmp(magic.data(), 0, 8) == 0) return RasterFormat::Png;
    if (got >= 2 && magic[0] == 'P' && magic[1] == '6') return RasterFormat::Ppm;
    throw IoError("unsupported raster format in " + describe(path) + " (expected PNG or P6 PPM)");
}

RasterFormat format_for_output(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".png") return RasterFormat::Png;
    if (ext == ".ppm") return RasterFormat::Ppm;
    throw InvalidParameter("output " + describe(path) + " must end in .png or .ppm");
}

ColorImage read_color_image(const std::filesystem::path& path) {
    if (sniff_format(path) == RasterFormat::Ppm) return read_ppm(path);

    std::size_t width = 0, height = 0;
    const auto buf = read_png(path, PNG_FORMAT_RGB, width, height);
    ColorImage img(width, height);
    auto px = img.values();
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = {buf[3 * i] / 255.0, buf[3 * i + 1] / 255.0, buf[3 * i + 2] / 255.0};
    }
    return img;
}

void write_color_image(const std::filesystem::path& path, const ColorImage& img) {
    const auto format = format_for_output(path);
    std::vector<std::uint8_t> raw(img.size() * 3);
    auto px = img.values();
    for (std::size_t i = 0; i < px.size(); ++i) {
        raw[3 * i] = quantize(px[i].r);
        raw[3 * i + 1] = quantize(px[i].g);
        raw[3 * i + 2] = quantize(px[i].b);
    }
    if (format == RasterFormat::Png) {
        write_png(path, PNG_FORMAT_RGB, img.width(), img.height(), raw);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + describe(path));
    out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) throw IoError("cannot write " + describe(path));
}

void write_edge_map(const std::filesystem::path& path, const EdgeMap& map) {
    std::vector<std::uint8_t> raw(map.size());
    auto src = map.values();
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = src[i] ? 255 : 0;
    write_png(path, PNG_FORMAT_GRAY, map.width(), map.height(), raw);
}

EdgeMap read_edge_map(const std::filesystem::path& path) {
    std::size_t width = 0, height = 0;
    const auto buf = read_png(path, PNG_FORMAT_GRAY, width, height);
    EdgeMap map(width, height, 0);
    auto dst = map.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = buf[i] ? 1 : 0;
    return map;
}

}  // namespace qhf
