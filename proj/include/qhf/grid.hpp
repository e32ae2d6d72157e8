#pragma once

/**
 * @file grid.hpp
 * @brief Row-major 2-D grids and the pixel containers built on them.
 *
 * Coordinates follow the (x1, x2) convention used throughout the library:
 * m is the column index along axis 1 (width M), n is the row index along
 * axis 2 (height N). Storage index is n * M + m.
 */

#include "qhf/error.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qhf {

template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(std::size_t width, std::size_t height, const T& fill = T{})
        : width_{width}, height_{height}, data_(width * height, fill) {}

    Grid(std::size_t width, std::size_t height, std::vector<T> data)
        : width_{width}, height_{height}, data_(std::move(data)) {
        if (data_.size() != width_ * height_) {
            throw InvalidInput("grid data size " + std::to_string(data_.size()) +
                               " does not match shape " + std::to_string(width_) + "x" +
                               std::to_string(height_));
        }
    }

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t m, std::size_t n) { return data_[n * width_ + m]; }
    const T& operator()(std::size_t m, std::size_t n) const { return data_[n * width_ + m]; }

    std::span<T> values() { return data_; }
    std::span<const T> values() const { return data_; }

    bool same_shape(const Grid& o) const { return width_ == o.width_ && height_ == o.height_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t width_{0};
    std::size_t height_{0};
    std::vector<T> data_;
};

template <typename A, typename B>
void require_same_shape(const Grid<A>& a, const Grid<B>& b, const char* what) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw InvalidInput(std::string(what) + ": shape mismatch (" + std::to_string(a.width()) +
                           "x" + std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                           "x" + std::to_string(b.height()) + ")");
    }
}

struct Rgb {
    double r{0.0};
    double g{0.0};
    double b{0.0};
    bool operator==(const Rgb&) const = default;
};

/// Color image with channels in [0, 1].
using ColorImage = Grid<Rgb>;

/// Single-channel intensity field in [0, 1].
using GrayField = Grid<double>;

/// Real grid on the [0, 255] scale used by the quality metrics.
using GrayImage = Grid<double>;

/// Binary edge map; 1 marks an edge pixel.
using EdgeMap = Grid<std::uint8_t>;

/// Three real channels per pixel (h1, h2, h3).
using ChannelField = Grid<std::array<double, 3>>;

std::size_t count_edges(const EdgeMap& map);

/// Renders an edge map on the {0, 255} scale.
GrayImage to_gray_image(const EdgeMap& map);

/// Clamps all channels into [0, 1].
void clamp_unit(ColorImage& img);

}  // namespace qhf
