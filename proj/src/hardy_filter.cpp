#include "qhf/hardy_filter.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

namespace qhf {

void FilterParams::validate() const {
    if (!std::isfinite(s1) || !std::isfinite(s2) || s1 < 0.0 || s2 < 0.0) {
        throw InvalidParameter("filter scales must be finite and >= 0 (got s1=" +
                               std::to_string(s1) + ", s2=" + std::to_string(s2) + ")");
    }
}

TransferGrid transfer_grid(std::size_t width, std::size_t height, const FilterParams& p) {
    p.validate();
    if (width == 0 || height == 0) throw InvalidInput("transfer_grid: empty shape");

    // separable: H(u,v) = a(u) * b(v)
    std::vector<double> along1(width), along2(height);
    for (std::size_t u = 0; u < width; ++u) {
        along1[u] = (1.0 + frequency_sign(u, width)) *
                    std::exp(-std::abs(angular_frequency(u, width)) * p.s1);
    }
    for (std::size_t v = 0; v < height; ++v) {
        along2[v] = (1.0 + frequency_sign(v, height)) *
                    std::exp(-std::abs(angular_frequency(v, height)) * p.s2);
    }

    TransferGrid h(width, height);
    for (std::size_t v = 0; v < height; ++v) {
        for (std::size_t u = 0; u < width; ++u) h(u, v) = along1[u] * along2[v];
    }
    return h;
}

QSpectrum filter_spectrum(const QSpectrum& spectrum, const TransferGrid& h) {
    require_same_shape(spectrum, h, "filter_spectrum");
    QSpectrum out = spectrum;
    auto dst = out.values();
    auto gain = h.values();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] *= gain[i];
    return out;
}

QImage apply_qhf(const QImage& f, const TransferGrid& h) {
    return idqft(filter_spectrum(dqft(f), h));
}

QImage apply_qhf(const QImage& f, const FilterParams& p) {
    p.validate();
    if (f.empty()) throw InvalidInput("apply_qhf: empty image");
    return apply_qhf(f, transfer_grid(f.width(), f.height(), p));
}

QImage analytic_signal(const QImage& f) { return apply_qhf(f, FilterParams{0.0, 0.0}); }

std::shared_ptr<const TransferGrid> TransferGridCache::get(std::size_t width, std::size_t height,
                                                           const FilterParams& p) {
    const Key key{width, height, p.s1, p.s2};
    {
        std::shared_lock lock(mutex_);
        if (auto it = grids_.find(key); it != grids_.end()) return it->second;
    }
    auto grid = std::make_shared<const TransferGrid>(transfer_grid(width, height, p));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = grids_.emplace(key, std::move(grid));
    return it->second;
}

std::size_t TransferGridCache::size() const {
    std::shared_lock lock(mutex_);
    return grids_.size();
}

}  // namespace qhf
