#include "qhf/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace qhf {

double mse(const GrayImage& x, const GrayImage& y) {
    require_same_shape(x, y, "mse");
    if (x.empty()) throw InvalidInput("mse: empty images");
    double sum = 0.0;
    auto a = x.values();
    auto b = y.values();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.size());
}

double psnr(const GrayImage& x, const GrayImage& y) {
    const double e = mse(x, y);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(255.0 / std::sqrt(e));
}

double ssim(const GrayImage& x, const GrayImage& y, const SsimConstants& k) {
    require_same_shape(x, y, "ssim");
    const std::size_t count = x.size();
    if (count < 2) throw InvalidInput("ssim: at least two pixels are required");

    auto a = x.values();
    auto b = y.values();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mx += a[i];
        my += b[i];
    }
    mx /= static_cast<double>(count);
    my /= static_cast<double>(count);

    double vx = 0.0, vy = 0.0, cxy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dx = a[i] - mx;
        const double dy = b[i] - my;
        vx += dx * dx;
        vy += dy * dy;
        cxy += dx * dy;
    }
    const double denom = static_cast<double>(count - 1);
    vx /= denom;
    vy /= denom;
    cxy /= denom;

    const double c1 = (k.k1 * k.dynamic_range) * (k.k1 * k.dynamic_range);
    const double c2 = (k.k2 * k.dynamic_range) * (k.k2 * k.dynamic_range);
    return ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
}

double ssim_windowed(const GrayImage& x, const GrayImage& y, const SsimConstants& k) {
    require_same_shape(x, y, "ssim_windowed");
    constexpr int kSize = 11;
    constexpr double kSigma = 1.5;
    if (x.width() < kSize || x.height() < kSize) return ssim(x, y, k);

    std::array<double, kSize> w1{};
    double total = 0.0;
    for (int i = 0; i < kSize; ++i) {
        const double d = i - kSize / 2;
        w1[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
        total += w1[i];
    }
    for (auto& w : w1) w /= total;

    const double c1 = (k.k1 * k.dynamic_range) * (k.k1 * k.dynamic_range);
    const double c2 = (k.k2 * k.dynamic_range) * (k.k2 * k.dynamic_range);
    const std::size_t out_w = x.width() - kSize + 1;
    const std::size_t out_h = x.height() - kSize + 1;

    double sum = 0.0;
    for (std::size_t n = 0; n < out_h; ++n) {
        for (std::size_t m = 0; m < out_w; ++m) {
            double mx = 0, my = 0, sxx = 0, syy = 0, sxy = 0;
            for (int j = 0; j < kSize; ++j) {
                for (int i = 0; i < kSize; ++i) {
                    const double w = w1[i] * w1[j];
                    const double a = x(m + i, n + j);
                    const double b = y(m + i, n + j);
                    mx += w * a;
                    my += w * b;
                    sxx += w * a * a;
                    syy += w * b * b;
                    sxy += w * a * b;
                }
            }
            const double vx = sxx - mx * mx;
            const double vy = syy - my * my;
            const double cov = sxy - mx * my;
            sum += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
                   ((mx * mx + my * my + c1) * (vx + vy + c2));
        }
    }
    return sum / static_cast<double>(out_w * out_h);
}

}  // namespace qhf
