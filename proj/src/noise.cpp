#include "qhf/noise.hpp"

#include "qhf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qhf {

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "gaussian") return NoiseKind::Gaussian;
    if (name == "poisson") return NoiseKind::Poisson;
    if (name == "salt-pepper") return NoiseKind::SaltPepper;
    if (name == "speckle") return NoiseKind::Speckle;
    throw InvalidParameter("unknown noise kind '" + std::string(name) +
                           "' (expected gaussian|poisson|salt-pepper|speckle)");
}

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Gaussian: return "gaussian";
        case NoiseKind::Poisson: return "poisson";
        case NoiseKind::SaltPepper: return "salt-pepper";
        case NoiseKind::Speckle: return "speckle";
    }
    return "?";
}

NoiseSpec NoiseSpec::defaults(NoiseKind kind, std::uint64_t seed) {
    NoiseSpec s;
    s.kind = kind;
    s.variance = kind == NoiseKind::Speckle ? 0.05 : 0.01;
    s.density = 0.05;
    s.seed = seed;
    return s;
}

void NoiseSpec::validate() const {
    if (!std::isfinite(variance) || variance < 0.0) {
        throw InvalidParameter("noise variance must be finite and >= 0");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InvalidParameter("noise density must lie in [0, 1]");
    }
}

namespace rng {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index)));
}

double standard_normal(SplitMix64& g) {
    // Box-Muller; 1 - U keeps the log argument in (0, 1]
    const double u1 = 1.0 - g.uniform();
    const double u2 = g.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t poisson(SplitMix64& g, double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
        // Knuth: multiply uniforms until the product drops below e^-lambda
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double prod = g.uniform();
        while (prod > limit) {
            ++k;
            prod *= g.uniform();
        }
        return k;
    }

    // PTRS transformed rejection (Hormann 1993)
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        const double u = g.uniform() - 0.5;
        const double v = g.uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -lambda + k * loglam - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

}  // namespace rng

namespace {

double corrupt_sample(double x, const NoiseSpec& spec, rng::SplitMix64& g) {
    switch (spec.kind) {
        case NoiseKind::Gaussian:
            return x + std::sqrt(spec.variance) * rng::standard_normal(g);
        case NoiseKind::Poisson:
            return static_cast<double>(rng::poisson(g, std::max(0.0, x) * 255.0)) / 255.0;
        case NoiseKind::SaltPepper: {
            const double hit = g.uniform();
            const double coin = g.uniform();
            if (hit < spec.density) return coin < 0.5 ? 0.0 : 1.0;
            return x;
        }
        case NoiseKind::Speckle: {
            const double half_width = std::sqrt(3.0 * spec.variance);
            return x + x * (2.0 * g.uniform() - 1.0) * half_width;
        }
    }
    return x;
}

}  // namespace

ColorImage corrupt(const ColorImage& img, const NoiseSpec& spec) {
    spec.validate();
    ColorImage out = img;
    auto px = out.values();
    parallel_for(px.size(), [&](std::size_t i) {
        const std::uint64_t base = 3 * static_cast<std::uint64_t>(i);
        double* ch[3] = {&px[i].r, &px[i].g, &px[i].b};
        for (std::uint64_t c = 0; c < 3; ++c) {
            auto g = rng::stream(spec.seed, base + c);
            *ch[c] = std::clamp(corrupt_sample(*ch[c], spec, g), 0.0, 1.0);
        }
    }, 1024);
    return out;
}

double snr(const ColorImage& clean, const ColorImage& noisy) {
    require_same_shape(clean, noisy, "snr");
    double signal = 0.0;
    double noise = 0.0;
    auto a = clean.values();
    auto b = noisy.values();
    for (std::size_t i = 0; i < a.size(); ++i) {
        signal += a[i].r * a[i].r + a[i].g * a[i].g + a[i].b * a[i].b;
        const double dr = a[i].r - b[i].r;
        const double dg = a[i].g - b[i].g;
        const double db = a[i].b - b[i].b;
        noise += dr * dr + dg * dg + db * db;
    }
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal / noise);
}

}  // namespace qhf
