#include "qhf/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qhf {

void PipelineConfig::validate() const {
    filter.validate();
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw InvalidParameter("threshold must lie in [0, 1] (got " + std::to_string(threshold) + ")");
    }
    if (!(min_strength >= 0.0) || !std::isfinite(min_strength)) {
        throw InvalidParameter("min_strength must be finite and >= 0");
    }
}

QImage encode(const ColorImage& img) {
    QImage f(img.width(), img.height());
    auto src = img.values();
    auto dst = f.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = {0.0, src[i].r, src[i].g, src[i].b};
    return f;
}

ChannelField vector_part(const QImage& f) {
    ChannelField h(f.width(), f.height());
    auto src = f.values();
    auto dst = h.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = {src[i].q1, src[i].q2, src[i].q3};
    return h;
}

ChannelField to_channels(const ColorImage& img) {
    ChannelField h(img.width(), img.height());
    auto src = img.values();
    auto dst = h.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = {src[i].r, src[i].g, src[i].b};
    return h;
}

EdgeMap nms(const GradientField& g, double t, double min_strength) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidParameter("nms threshold must lie in [0, 1] (got " + std::to_string(t) + ")");
    }
    const std::size_t M = g.width();
    const std::size_t N = g.height();
    EdgeMap out(M, N, 0);
    if (g.empty()) return out;

    double peak = 0.0;
    for (const auto& s : g.values()) peak = std::max(peak, s.f_max);
    const double floor = std::max(t * peak, 0.0);

    // (dm, dn) per quantized direction: 0, 45, 90, 135 degrees
    constexpr int step[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    constexpr double quarter = std::numbers::pi / 4.0;

    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            const GradientSample& s = g(m, n);
            if (!s.theta_max || s.f_max <= min_strength || s.f_max < floor) continue;

            const int bin = static_cast<int>(std::lround(*s.theta_max / quarter)) % 4;
            bool keep = true;
            for (int sign : {1, -1}) {
                const long mm = static_cast<long>(m) + sign * step[bin][0];
                const long nn = static_cast<long>(n) + sign * step[bin][1];
                if (mm < 0 || nn < 0 || mm >= static_cast<long>(M) || nn >= static_cast<long>(N)) continue;
                if (g(static_cast<std::size_t>(mm), static_cast<std::size_t>(nn)).f_max > s.f_max) {
                    keep = false;
                    break;
                }
            }
            if (keep) out(m, n) = 1;
        }
    }
    return out;
}

Detector::Detector(PipelineConfig cfg) : cfg_{cfg} { cfg_.validate(); }

Detection Detector::run(const ColorImage& img) const {
    if (img.width() < 3 || img.height() < 3) {
        throw InvalidInput("detect: image must be at least 3x3 (got " + std::to_string(img.width()) +
                           "x" + std::to_string(img.height()) + ")");
    }
    const auto h = cache_.get(img.width(), img.height(), cfg_.filter);
    Detection d;
    d.filtered = apply_qhf(encode(img), *h);
    d.gradient = structure(vector_part(d.filtered), cfg_.formula);
    d.edges = nms(d.gradient, cfg_.threshold, cfg_.min_strength);
    return d;
}

Detection detect_detailed(const ColorImage& img, const PipelineConfig& cfg) {
    return Detector(cfg).run(img);
}

EdgeMap detect(const ColorImage& img, const PipelineConfig& cfg) {
    return detect_detailed(img, cfg).edges;
}

}  // namespace qhf
