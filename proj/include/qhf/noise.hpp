#pragma once

/**
 * @file noise.hpp
 * @brief Seeded noise models for robustness experiments.
 *
 * Every channel sample i of an image draws from its own SplitMix64 stream,
 * seeded with splitmix64(seed ^ splitmix64(i)). Output therefore depends only
 * on (image, spec), never on thread count or call order, and is identical on
 * every platform (no std:: distributions are involved).
 *
 *   gaussian     x + N(0, v)
 *   poisson      Poisson(255 x) / 255
 *   salt-pepper  with probability d: 0 or 1 (equal odds), per channel
 *   speckle      x + x u,  u ~ U[-sqrt(3v), sqrt(3v)]
 *
 * Results are clamped to [0, 1].
 */

#include "qhf/grid.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace qhf {

enum class NoiseKind { Gaussian, Poisson, SaltPepper, Speckle };

NoiseKind parse_noise_kind(std::string_view name);
std::string_view to_string(NoiseKind kind);

struct NoiseSpec {
    NoiseKind kind{NoiseKind::Gaussian};
    double variance{0.01};  // gaussian, speckle
    double density{0.05};   // salt-pepper
    std::uint64_t seed{0};

    /// Defaults: gaussian v = 0.01, salt-pepper d = 0.05, speckle v = 0.05.
    static NoiseSpec defaults(NoiseKind kind, std::uint64_t seed = 0);

    void validate() const;
    bool operator==(const NoiseSpec&) const = default;
};

ColorImage corrupt(const ColorImage& img, const NoiseSpec& spec);

/// 10 log10(sum clean^2 / sum (clean - noisy)^2) over all channels; +inf when
/// the images are identical.
double snr(const ColorImage& clean, const ColorImage& noisy);

namespace rng {

/// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_{state} {}
    std::uint64_t next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

private:
    std::uint64_t state_;
};

std::uint64_t mix(std::uint64_t x);

/// Stream for sample `index` under `seed`.
SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

double standard_normal(SplitMix64& g);
std::uint64_t poisson(SplitMix64& g, double lambda);

}  // namespace rng

}  // namespace qhf
