#pragma once

/**
 * @file metrics.hpp
 * @brief Full-reference similarity between two [0, 255] images (edge maps).
 */

#include "qhf/grid.hpp"

namespace qhf {

double mse(const GrayImage& x, const GrayImage& y);

/// 20 log10(255 / sqrt(MSE)); +inf when MSE = 0.
double psnr(const GrayImage& x, const GrayImage& y);

struct SsimConstants {
    double k1{0.01};
    double k2{0.03};
    double dynamic_range{255.0};
};

/**
 * Whole-image SSIM:
 *
 *   (2 mu_x mu_y + c1)(2 s_xy + c2) / ((mu_x^2 + mu_y^2 + c1)(s_x^2 + s_y^2 + c2))
 *
 * with c1 = (k1 L)^2, c2 = (k2 L)^2 and unbiased (N - 1) second moments.
 * Needs at least two pixels.
 */
double ssim(const GrayImage& x, const GrayImage& y, const SsimConstants& k = {});

/// Conventional windowed SSIM: 11x11 Gaussian window (sigma 1.5), mean over
/// all fully contained window positions. Falls back to ssim() when either
/// dimension is smaller than the window.
double ssim_windowed(const GrayImage& x, const GrayImage& y, const SsimConstants& k = {});

}  // namespace qhf
