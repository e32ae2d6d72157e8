#pragma once

/**
 * @file pipeline.hpp
 * @brief Color edge detection with the quaternion Hardy filter.
 *
 *   color image -> pure quaternion f = r i + g j + b k
 *               -> DQFT -> multiply by H(s1, s2) -> inverse DQFT = f_H
 *               -> Vec(f_H) = (h1, h2, h3)
 *               -> IDZ gradient -> non-maximum suppression + threshold
 */

#include "qhf/grid.hpp"
#include "qhf/hardy_filter.hpp"
#include "qhf/idz_gradient.hpp"
#include "qhf/qft.hpp"

namespace qhf {

/// Pixels with f_max at or below this value are never edges. Sits far above
/// FFT round-off on [0, 1] images and far below any visible 8-bit step.
inline constexpr double kDefaultMinStrength = 1e-12;

struct PipelineConfig {
    FilterParams filter{2.0, 2.0};
    double threshold{0.1};  // fraction of the global maximum f_max
    IdzFormula formula{IdzFormula::Derived};
    double min_strength{kDefaultMinStrength};

    void validate() const;
    bool operator==(const PipelineConfig&) const = default;
};

/// (0, r, g, b) per pixel.
QImage encode(const ColorImage& img);

/// (q1, q2, q3) per pixel; the scalar part is dropped.
ChannelField vector_part(const QImage& f);

/// RGB channels as a ChannelField, no filtering.
ChannelField to_channels(const ColorImage& img);

/**
 * Keeps pixels whose f_max is >= both neighbours along theta_max quantized to
 * {0, 45, 90, 135} degrees and >= t * max(f_max). Pixels with undefined
 * direction or f_max <= min_strength are suppressed. Out-of-bounds neighbours
 * are skipped.
 */
EdgeMap nms(const GradientField& g, double t, double min_strength = kDefaultMinStrength);

struct Detection {
    QImage filtered;  // f_H
    GradientField gradient;
    EdgeMap edges;
};

Detection detect_detailed(const ColorImage& img, const PipelineConfig& cfg);
EdgeMap detect(const ColorImage& img, const PipelineConfig& cfg);

/// Reusable detector; caches transfer grids across calls. Safe to share
/// between threads.
class Detector {
public:
    explicit Detector(PipelineConfig cfg);

    const PipelineConfig& config() const { return cfg_; }
    Detection run(const ColorImage& img) const;

private:
    PipelineConfig cfg_;
    mutable TransferGridCache cache_;
};

}  // namespace qhf
