#include "qhf/error.hpp"
#include "qhf/metrics.hpp"

#include <doctest.h>

#include <random>

using namespace qhf;

TEST_CASE("mse worked examples") {
    CHECK(mse(GrayImage(3, 3, 0.0), GrayImage(3, 3, 255.0)) == 65025.0);
    GrayImage y(2, 2, 0.0);
    y(0, 0) = 255.0;
    CHECK(mse(GrayImage(2, 2, 0.0), y) == 16256.25);
    CHECK(mse(y, y) == 0.0);
    CHECK_THROWS_AS(mse(GrayImage(2, 2), GrayImage(3, 2)), InvalidInput);
    CHECK_THROWS_AS(mse(GrayImage{}, GrayImage{}), InvalidInput);
}

TEST_CASE("psnr anchors") {
    CHECK(psnr(GrayImage(4, 4, 0.0), GrayImage(4, 4, 255.0)) == 0.0);
    GrayImage a(1, 1, 0.0), b(1, 1, 1.0);
    CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-6));
    CHECK(std::isinf(psnr(a, a)));
    CHECK(psnr(a, b) == psnr(b, a));
    GrayImage c(1, 1, 2.0);
    CHECK(psnr(a, c) < psnr(a, b));
}

TEST_CASE("ssim identities") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 255.0);
    GrayImage x(16, 16), y(16, 16);
    for (auto& v : x.values()) v = u(rng);
    for (auto& v : y.values()) v = u(rng);
    CHECK(std::abs(ssim(x, x) - 1.0) < 1e-12);
    CHECK(std::abs(ssim_windowed(x, x) - 1.0) < 1e-12);
    CHECK(ssim(x, y) == doctest::Approx(ssim(y, x)).epsilon(1e-14));
    CHECK(std::abs(ssim(x, y)) <= 1.0 + 1e-12);
    CHECK(ssim_windowed(x, y) < 0.5);
}

TEST_CASE("ssim of an inverted balanced map is negative") {
    GrayImage x(4, 4), y(4, 4);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 0; m < 4; ++m) x(m, n) = (m + n) % 2 ? 255.0 : 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) y.values()[i] = 255.0 - x.values()[i];
    CHECK(ssim(x, y) < 0.0);
}

TEST_CASE("ssim hand-computed value") {
    GrayImage x(2, 1), y(2, 1);
    x(0, 0) = 0;
    x(1, 0) = 255;
    y(0, 0) = 0;
    y(1, 0) = 0;
    // muX = 127.5, muY = 0, varX = 32512.5 (n-1), varY = 0, cov = 0
    const double c1 = 6.5025, c2 = 58.5225;
    const double expect = (c1 * c2) / ((127.5 * 127.5 + c1) * (32512.5 + c2));
    CHECK(ssim(x, y) == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(ssim(GrayImage(1, 1), GrayImage(1, 1)), InvalidInput);
}
