#pragma once

/**
 * @file hardy_filter.hpp
 * @brief Quaternion Hardy filter (QHF).
 *
 * System function, sampled on the signed-frequency grid of the DQFT:
 *
 *   H(w1, w2, s1, s2) = [1 + sgn(w1)] [1 + sgn(w2)] e^{-|w1| s1} e^{-|w2| s2}
 *
 * The sign factor keeps the positive quadrant (the quaternion analytic signal);
 * the exponentials are a separable low-pass whose strength grows with s.
 * sgn(0) = 0, so the DC bin passes with gain 1 and on-axis bins with gain
 * 2 e^{-...}. H is real, hence central, so the product with a quaternion
 * spectrum does not depend on the side it is applied from.
 */

#include "qhf/grid.hpp"
#include "qhf/qft.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>

namespace qhf {

/// Decay scales in pixels; both must be finite and nonnegative.
struct FilterParams {
    double s1{0.0};
    double s2{0.0};

    void validate() const;
    bool operator==(const FilterParams&) const = default;
};

/// Real gains in [0, 4], one per spectral bin.
using TransferGrid = Grid<double>;

TransferGrid transfer_grid(std::size_t width, std::size_t height, const FilterParams& p);

/// f_H = idqft(dqft(f) * H).
QImage apply_qhf(const QImage& f, const FilterParams& p);
QImage apply_qhf(const QImage& f, const TransferGrid& h);

/// Pointwise product of a spectrum with a real gain grid.
QSpectrum filter_spectrum(const QSpectrum& spectrum, const TransferGrid& h);

/// The quaternion analytic signal: apply_qhf with s1 = s2 = 0.
QImage analytic_signal(const QImage& f);

/// Shared read-mostly cache of transfer grids keyed by (shape, s1, s2).
class TransferGridCache {
public:
    std::shared_ptr<const TransferGrid> get(std::size_t width, std::size_t height,
                                            const FilterParams& p);
    std::size_t size() const;

private:
    using Key = std::tuple<std::size_t, std::size_t, double, double>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const TransferGrid>> grids_;
};

}  // namespace qhf
