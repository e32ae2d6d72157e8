#pragma once

/**
 * @file raster_io.hpp
 * @brief 8-bit raster input/output: PNG (RGB/RGBA/gray, alpha ignored) and
 *        binary PPM (P6, maxval <= 255).
 */

#include "qhf/grid.hpp"

#include <filesystem>

namespace qhf {

enum class RasterFormat { Png, Ppm };

/// Format from the file's magic bytes; throws IoError when unrecognized.
RasterFormat sniff_format(const std::filesystem::path& path);

/// Format from the extension (.png / .ppm); throws InvalidParameter otherwise.
RasterFormat format_for_output(const std::filesystem::path& path);

/// Decodes an 8-bit raster and scales channels to [0, 1].
ColorImage read_color_image(const std::filesystem::path& path);

/// Quantizes channels to 8 bits (round to nearest) and encodes by extension.
void write_color_image(const std::filesystem::path& path, const ColorImage& img);

/// Writes an 8-bit grayscale PNG with edges as 255 and background as 0.
void write_edge_map(const std::filesystem::path& path, const EdgeMap& map);

/// Reads a grayscale PNG edge map back (nonzero = edge).
EdgeMap read_edge_map(const std::filesystem::path& path);

}  // namespace qhf
