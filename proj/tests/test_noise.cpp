#include "oracles.hpp"

#include "qhf/error.hpp"
#include "qhf/noise.hpp"

#include <doctest.h>

using namespace qhf;

namespace {

ColorImage gray(std::size_t n, double v) { return ColorImage(n, n, Rgb{v, v, v}); }

struct Moments {
    double mean;
    double variance;
};

Moments diff_moments(const ColorImage& a, const ColorImage& b) {
    double s = 0.0, s2 = 0.0;
    const std::size_t count = 3 * a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (double d : {b.values()[i].r - a.values()[i].r, b.values()[i].g - a.values()[i].g,
                         b.values()[i].b - a.values()[i].b}) {
            s += d;
            s2 += d * d;
        }
    }
    const double mean = s / count;
    return {mean, (s2 - count * mean * mean) / (count - 1)};
}

}  // namespace

TEST_CASE("names round-trip") {
    for (auto k : {NoiseKind::Gaussian, NoiseKind::Poisson, NoiseKind::SaltPepper, NoiseKind::Speckle}) {
        CHECK(parse_noise_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_noise_kind("pink"), InvalidParameter);
    CHECK(NoiseSpec::defaults(NoiseKind::Speckle).variance == 0.05);
    CHECK(NoiseSpec::defaults(NoiseKind::Gaussian).variance == 0.01);
    CHECK(NoiseSpec::defaults(NoiseKind::SaltPepper).density == 0.05);
}

TEST_CASE("parameter validation") {
    const ColorImage img = gray(4, 0.5);
    CHECK_THROWS_AS(corrupt(img, {NoiseKind::Gaussian, -0.1}), InvalidParameter);
    CHECK_THROWS_AS(corrupt(img, {NoiseKind::SaltPepper, 0.01, 1.5}), InvalidParameter);
    CHECK_THROWS_AS(corrupt(img, {NoiseKind::Speckle, std::nan("")}), InvalidParameter);
}

TEST_CASE("zero-variance gaussian is the identity") {
    std::mt19937_64 rng(1);
    const ColorImage img = oracle::random_color(rng, 16, 9);
    CHECK(corrupt(img, {NoiseKind::Gaussian, 0.0}) == img);
    CHECK(std::isinf(snr(img, img)));
}

TEST_CASE("full-density salt and pepper is binary") {
    std::mt19937_64 rng(2);
    const ColorImage img = oracle::random_color(rng, 32, 32);
    const ColorImage out = corrupt(img, {NoiseKind::SaltPepper, 0.0, 1.0, 9});
    std::size_t ones = 0;
    for (const auto& p : out.values()) {
        for (double v : {p.r, p.g, p.b}) {
            CHECK((v == 0.0 || v == 1.0));
            ones += v == 1.0;
        }
    }
    CHECK(std::abs(double(ones) / (3.0 * out.size()) - 0.5) < 0.05);
}

TEST_CASE("gaussian variance and mean on mid-gray") {
    const ColorImage img = gray(256, 0.5);
    const double v = 0.01;
    const ColorImage out = corrupt(img, {NoiseKind::Gaussian, v, 0.0, 42});
    const Moments m = diff_moments(img, out);
    CHECK(std::abs(m.variance - v) < 0.1 * v);
    CHECK(std::abs(m.mean) < 3.0 * std::sqrt(v / (3.0 * img.size())));
}

TEST_CASE("speckle variance on mid-gray") {
    const ColorImage img = gray(256, 0.5);
    const ColorImage out = corrupt(img, NoiseSpec::defaults(NoiseKind::Speckle, 3));
    // x*u with u uniform of variance v: var = x^2 v
    CHECK(std::abs(diff_moments(img, out).variance - 0.25 * 0.05) < 0.1 * 0.25 * 0.05);
}

TEST_CASE("poisson keeps black black and has the right spread") {
    CHECK(corrupt(gray(16, 0.0), NoiseSpec::defaults(NoiseKind::Poisson, 5)) == gray(16, 0.0));
    for (double level : {10 / 255.0, 100 / 255.0}) {
        const ColorImage img = gray(256, level);
        const Moments m = diff_moments(img, corrupt(img, NoiseSpec::defaults(NoiseKind::Poisson, 6)));
        const double expect = level / 255.0;  // lambda / 255^2
        CHECK(std::abs(m.variance - expect) < 0.1 * expect);
        CHECK(std::abs(m.mean) < 4.0 * std::sqrt(expect / (3.0 * img.size())));
    }
}

TEST_CASE("seeded determinism and seed sensitivity") {
    std::mt19937_64 rng(3);
    const ColorImage img = oracle::random_color(rng, 40, 30);
    for (auto k : {NoiseKind::Gaussian, NoiseKind::Poisson, NoiseKind::SaltPepper, NoiseKind::Speckle}) {
        const ColorImage a = corrupt(img, NoiseSpec::defaults(k, 77));
        CHECK(a == corrupt(img, NoiseSpec::defaults(k, 77)));
        CHECK_FALSE(a == corrupt(img, NoiseSpec::defaults(k, 78)));
        for (const auto& p : a.values()) {
            for (double v : {p.r, p.g, p.b}) CHECK((v >= 0.0 && v <= 1.0));
        }
    }
}

TEST_CASE("snr closed form") {
    const ColorImage clean = gray(4, 0.5);
    const ColorImage noisy = gray(4, 0.6);
    // sum clean^2 / sum diff^2 = 0.25 / 0.01
    CHECK(snr(clean, noisy) == doctest::Approx(10 * std::log10(25.0)));
    CHECK_THROWS_AS(snr(gray(4, 0.5), gray(5, 0.5)), InvalidInput);
}

TEST_CASE("rng building blocks") {
    rng::SplitMix64 g(0);
    // published first output of SplitMix64 seeded with 0
    CHECK(g.next() == 0xe220a8397b1dcdafULL);
    rng::SplitMix64 a = rng::stream(5, 10), b = rng::stream(5, 10), c = rng::stream(5, 11);
    CHECK(a.next() == b.next());
    CHECK(a.next() != c.next());
    rng::SplitMix64 u(9);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        CHECK((x >= 0.0 && x < 1.0));
    }
    rng::SplitMix64 p(4);
    double sum = 0.0;
    for (int i = 0; i < 20000; ++i) sum += double(rng::poisson(p, 50.0));
    CHECK(sum / 20000 == doctest::Approx(50.0).epsilon(0.01));
    CHECK(rng::poisson(p, 0.0) == 0);
}
