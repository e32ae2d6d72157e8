#include "oracles.hpp"

#include "qhf/baselines.hpp"
#include "qhf/error.hpp"
#include "qhf/metrics.hpp"
#include "qhf/noise.hpp"
#include "qhf/pipeline.hpp"

#include <doctest.h>

#include <random>

using namespace qhf;

TEST_CASE("encode examples") {
    ColorImage img(2, 1);
    img(0, 0) = {1.0, 0.0, 0.0};
    img(1, 0) = {2 / 255.0, 170 / 255.0, 2 / 255.0};
    const QImage q = encode(img);
    CHECK(q(0, 0) == Quaternion{0, 1, 0, 0});
    CHECK(q(1, 0) == Quaternion{0, 2 / 255.0, 170 / 255.0, 2 / 255.0});
    CHECK(encode(ColorImage(1, 1))(0, 0) == Quaternion{});
    const ChannelField v = vector_part(q);
    CHECK(v(1, 0) == std::array<double, 3>{2 / 255.0, 170 / 255.0, 2 / 255.0});
}

TEST_CASE("constant image gives an empty map") {
    for (FilterParams p : {FilterParams{0, 0}, FilterParams{2, 2}, FilterParams{7, 3}}) {
        const ColorImage img(17, 12, Rgb{0.2, 0.6, 0.4});
        CHECK(count_edges(detect(img, {p, 0.0})) == 0);
    }
}

TEST_CASE("green/pink boundary is found") {
    const ColorImage img = oracle::green_pink(128, 64);
    const EdgeMap e = detect(img, {});
    std::size_t hits = 0;
    for (std::size_t n = 0; n < 64; ++n) hits += e(63, n) || e(64, n);
    CHECK(hits == 64);
}

TEST_CASE("s = 0 equals direct IDZ on a low-frequency red cosine") {
    // the vector part of the analytic signal is then the raw image
    const std::size_t M = 32, N = 8;
    ColorImage img(M, N);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t m = 0; m < M; ++m) {
            img(m, n) = {0.5 + 0.4 * std::cos(2 * std::numbers::pi * m / M), 0.3, 0.7};
        }
    }
    const Detection d = detect_detailed(img, {{0, 0}, 0.1});
    const ChannelField v = vector_part(d.filtered);
    const ChannelField raw = to_channels(img);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (int k = 0; k < 3; ++k) CHECK(std::abs(v.values()[i][k] - raw.values()[i][k]) < 1e-12);
    }
    CHECK(d.edges == idz_direct(img, 0.1));
}

TEST_CASE("smoothing helps under salt and pepper") {
    const ColorImage img = oracle::green_pink(128, 64);
    const ColorImage noisy = corrupt(img, NoiseSpec::defaults(NoiseKind::SaltPepper, 7));
    auto score = [&](double s) {
        const PipelineConfig cfg{{s, s}, 0.1};
        return psnr(to_gray_image(detect(img, cfg)), to_gray_image(detect(noisy, cfg)));
    };
    CHECK(score(6.0) > score(0.0));
}

TEST_CASE("detect is deterministic and thins monotonically") {
    std::mt19937_64 rng(12);
    const ColorImage img = oracle::random_color(rng, 40, 30);
    const EdgeMap a = detect(img, {});
    CHECK(a == detect(img, {}));
    std::size_t prev = img.size();
    EdgeMap last(40, 30, 1);
    for (double t : {0.0, 0.05, 0.1, 0.2, 0.4, 0.8, 1.0}) {
        const EdgeMap e = detect(img, {{2, 2}, t});
        CHECK(count_edges(e) <= prev);
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(e.values()[i] <= last.values()[i]);
        prev = count_edges(e);
        last = e;
    }
}

TEST_CASE("Detector reuses its transfer grid") {
    std::mt19937_64 rng(5);
    const ColorImage img = oracle::random_color(rng, 20, 16);
    const Detector det({{3, 3}, 0.1});
    CHECK(det.run(img).edges == detect(img, det.config()));
    CHECK(det.run(img).edges == detect(img, det.config()));
}

TEST_CASE("pipeline validation") {
    CHECK_THROWS_AS(detect(ColorImage(2, 8), {}), InvalidInput);
    CHECK_THROWS_AS(detect(ColorImage(8, 8), {{-1, 0}, 0.1}), InvalidParameter);
    CHECK_THROWS_AS(detect(ColorImage(8, 8), {{1, 1}, 1.5}), InvalidParameter);
    CHECK_THROWS_AS(detect(ColorImage(8, 8), {{1, 1}, -0.1}), InvalidParameter);
}
