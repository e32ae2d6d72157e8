#include "qhf/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qhf {

namespace {

struct Gradient {
    Grid<double> gx;
    Grid<double> gy;
};

// 3x3 derivative with side weight `edge` and center weight `mid`, normalized
// by 2 * (2 * edge + mid).
Gradient kernel_gradient(const GrayField& g, double edge, double mid) {
    const std::size_t M = g.width();
    const std::size_t N = g.height();
    const double norm = 1.0 / (2.0 * (2.0 * edge + mid));
    Gradient out{Grid<double>(M, N), Grid<double>(M, N)};
    auto at = [&](long m, long n) {
        m = std::clamp<long>(m, 0, static_cast<long>(M) - 1);
        n = std::clamp<long>(n, 0, static_cast<long>(N) - 1);
        return g(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    };
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            const long x = static_cast<long>(m);
            const long y = static_cast<long>(n);
            const double gx = edge * (at(x + 1, y - 1) - at(x - 1, y - 1)) +
                              mid * (at(x + 1, y) - at(x - 1, y)) +
                              edge * (at(x + 1, y + 1) - at(x - 1, y + 1));
            const double gy = edge * (at(x - 1, y + 1) - at(x - 1, y - 1)) +
                              mid * (at(x, y + 1) - at(x, y - 1)) +
                              edge * (at(x + 1, y + 1) - at(x + 1, y - 1));
            out.gx(m, n) = gx * norm;
            out.gy(m, n) = gy * norm;
        }
    }
    return out;
}

EdgeMap magnitude_threshold(const GrayField& g, double t, double edge, double mid) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidParameter("gradient threshold must lie in [0, 1] (got " + std::to_string(t) + ")");
    }
    const Gradient d = kernel_gradient(g, edge, mid);
    EdgeMap out(g.width(), g.height(), 0);
    auto gx = d.gx.values();
    auto gy = d.gy.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = std::hypot(gx[i], gy[i]) > t ? 1 : 0;
    }
    return out;
}

GrayField gaussian_blur(const GrayField& g, double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> w(2 * radius + 1);
    double total = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        w[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
        total += w[i + radius];
    }
    for (auto& v : w) v /= total;

    const long M = static_cast<long>(g.width());
    const long N = static_cast<long>(g.height());
    GrayField tmp(g.width(), g.height());
    GrayField out(g.width(), g.height());
    for (long n = 0; n < N; ++n) {
        for (long m = 0; m < M; ++m) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                acc += w[i + radius] * g(std::clamp(m + i, 0L, M - 1), n);
            }
            tmp(m, n) = acc;
        }
    }
    for (long n = 0; n < N; ++n) {
        for (long m = 0; m < M; ++m) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                acc += w[i + radius] * tmp(m, std::clamp(n + i, 0L, N - 1));
            }
            out(m, n) = acc;
        }
    }
    return out;
}

}  // namespace

GrayField to_gray(const ColorImage& img) {
    GrayField out(img.width(), img.height());
    auto src = img.values();
    auto dst = out.values();
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] = 0.299 * src[i].r + 0.587 * src[i].g + 0.114 * src[i].b;
    }
    return out;
}

EdgeMap sobel(const GrayField& g, double t) { return magnitude_threshold(g, t, 1.0, 2.0); }

EdgeMap prewitt(const GrayField& g, double t) { return magnitude_threshold(g, t, 1.0, 1.0); }

void CannyParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidParameter("canny sigma must be > 0");
    if (!(low >= 0.0 && low <= high && high <= 1.0)) {
        throw InvalidParameter("canny thresholds must satisfy 0 <= low <= high <= 1");
    }
}

EdgeMap canny(const GrayField& g, const CannyParams& p) {
    p.validate();
    const std::size_t M = g.width();
    const std::size_t N = g.height();
    EdgeMap out(M, N, 0);
    if (g.empty()) return out;

    const Gradient d = kernel_gradient(gaussian_blur(g, p.sigma), 1.0, 2.0);
    Grid<double> mag(M, N);
    double peak = 0.0;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        mag.values()[i] = std::hypot(d.gx.values()[i], d.gy.values()[i]);
        peak = std::max(peak, mag.values()[i]);
    }
    if (peak <= 0.0) return out;

    constexpr int step[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    constexpr double quarter = std::numbers::pi / 4.0;
    const double hi = p.high * peak;
    const double lo = p.low * peak;

    // 0 = none, 1 = weak, 2 = strong
    Grid<std::uint8_t> cls(M, N, 0);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            const double v = mag(m, n);
            if (v <= 0.0 || v < lo) continue;
            double theta = std::atan2(d.gy(m, n), d.gx(m, n));
            if (theta < 0.0) theta += std::numbers::pi;
            const int bin = static_cast<int>(std::lround(theta / quarter)) % 4;
            bool keep = true;
            for (int sign : {1, -1}) {
                const long mm = static_cast<long>(m) + sign * step[bin][0];
                const long nn = static_cast<long>(n) + sign * step[bin][1];
                if (mm < 0 || nn < 0 || mm >= static_cast<long>(M) || nn >= static_cast<long>(N)) continue;
                if (mag(static_cast<std::size_t>(mm), static_cast<std::size_t>(nn)) > v) keep = false;
            }
            if (keep) cls(m, n) = v >= hi ? 2 : 1;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            if (cls(m, n) == 2) {
                out(m, n) = 1;
                stack.emplace_back(m, n);
            }
        }
    }
    while (!stack.empty()) {
        const auto [m, n] = stack.back();
        stack.pop_back();
        for (long dn = -1; dn <= 1; ++dn) {
            for (long dm = -1; dm <= 1; ++dm) {
                const long mm = static_cast<long>(m) + dm;
                const long nn = static_cast<long>(n) + dn;
                if (mm < 0 || nn < 0 || mm >= static_cast<long>(M) || nn >= static_cast<long>(N)) continue;
                const auto um = static_cast<std::size_t>(mm);
                const auto un = static_cast<std::size_t>(nn);
                if (cls(um, un) == 1 && !out(um, un)) {
                    out(um, un) = 1;
                    stack.emplace_back(um, un);
                }
            }
        }
    }
    return out;
}

EdgeMap idz_direct(const ColorImage& img, double t, IdzFormula formula, double min_strength) {
    return nms(structure(to_channels(img), formula), t, min_strength);
}

}  // namespace qhf
