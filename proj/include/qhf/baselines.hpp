#pragma once

/**
 * @file baselines.hpp
 * @brief Comparison detectors: grayscale Sobel / Prewitt / Canny and IDZ on
 *        raw RGB without the Hardy filter.
 */

#include "qhf/grid.hpp"
#include "qhf/idz_gradient.hpp"
#include "qhf/pipeline.hpp"

namespace qhf {

/// Rec.601 luma 0.299 r + 0.587 g + 0.114 b.
GrayField to_gray(const ColorImage& img);

/**
 * Magnitude thresholding with the 3x3 kernels normalized to unit gain
 * (Sobel / 8, Prewitt / 6), replicate borders. A pixel is an edge when
 * sqrt(gx^2 + gy^2) > t, with t in intensity units of the [0, 1] field, so a
 * unit step yields magnitude 0.5 on the two columns beside it.
 */
EdgeMap sobel(const GrayField& g, double t);
EdgeMap prewitt(const GrayField& g, double t);

struct CannyParams {
    double sigma{1.4};
    double low{0.08};   // fraction of the maximum gradient magnitude
    double high{0.2};

    void validate() const;
    bool operator==(const CannyParams&) const = default;
};

/// Gaussian smoothing, Sobel gradients, NMS, 8-connected hysteresis.
EdgeMap canny(const GrayField& g, const CannyParams& p = {});

/// IDZ + NMS on the unfiltered RGB channels.
EdgeMap idz_direct(const ColorImage& img, double t, IdzFormula formula = IdzFormula::Derived,
                   double min_strength = kDefaultMinStrength);

}  // namespace qhf
