#include "oracles.hpp"

#include "qhf/error.hpp"
#include "qhf/qft.hpp"

#include <doctest.h>

#include <random>

using namespace qhf;

TEST_CASE("frequency axis convention") {
    const auto w8 = frequency_axis(8);
    CHECK(w8[0] == 0.0);
    CHECK(w8[1] == doctest::Approx(2 * std::numbers::pi / 8));
    CHECK(w8[3] == doctest::Approx(3 * 2 * std::numbers::pi / 8));
    CHECK(w8[4] == doctest::Approx(-std::numbers::pi));  // Nyquist on the negative branch
    CHECK(w8[7] == doctest::Approx(-2 * std::numbers::pi / 8));
    CHECK(frequency_sign(0, 8) == 0);
    CHECK(frequency_sign(3, 8) == 1);
    CHECK(frequency_sign(4, 8) == -1);
    CHECK(frequency_sign(2, 5) == 1);
    CHECK(frequency_sign(3, 5) == -1);
    CHECK(frequency_sign(0, 1) == 0);
}

TEST_CASE("delta maps to a flat spectrum") {
    QImage f(4, 4);
    f(0, 0) = Quaternion::i();
    const QSpectrum F = dqft(f);
    for (const auto& q : F.values()) {
        CHECK(q.q1 == doctest::Approx(0.25));
        CHECK(std::abs(q.q0) < 1e-15);
        CHECK(std::abs(q.q2) < 1e-15);
        CHECK(std::abs(q.q3) < 1e-15);
    }
}

TEST_CASE("constant image concentrates at DC") {
    QImage f(6, 5, Quaternion{0, 0.2, 0.4, 0.6});
    const QSpectrum F = dqft(f);
    const double s = std::sqrt(30.0);
    CHECK(F(0, 0).q1 == doctest::Approx(0.2 * s));
    CHECK(F(0, 0).q2 == doctest::Approx(0.4 * s));
    CHECK(F(0, 0).q3 == doctest::Approx(0.6 * s));
    double rest = 0.0;
    for (std::size_t i = 1; i < F.size(); ++i) rest += norm_squared(F.values()[i]);
    CHECK(rest < 1e-24);
}

TEST_CASE("matches the direct separable sum") {
    std::mt19937_64 rng(3);
    for (auto [w, h] : {std::pair{4, 4}, {5, 7}, {8, 8}, {1, 9}, {9, 1}, {6, 3}}) {
        const QImage f = oracle::random_qimage(rng, w, h);
        CHECK(oracle::max_abs_diff(dqft(f), oracle::dft(f)) < 1e-12);
        CHECK(oracle::max_abs_diff(brute_dqft(f), oracle::dft(f)) < 1e-12);
        const QSpectrum F = oracle::dft(f);
        CHECK(oracle::max_abs_diff(idqft(F), oracle::idft(F)) < 1e-12);
    }
}

TEST_CASE("round trip and Parseval") {
    std::mt19937_64 rng(5);
    for (auto [w, h] : {std::pair{7, 5}, {1, 16}, {16, 1}, {33, 20}, {64, 64}}) {
        const QImage f = oracle::random_qimage(rng, w, h);
        const QSpectrum F = dqft(f);
        CHECK(oracle::max_abs_diff(idqft(F), f) < 1e-12);
        CHECK(energy(F) / energy(f) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pure-vector image keeps its energy against the direct sum") {
    std::mt19937_64 rng(8);
    const QImage f = oracle::random_qimage(rng, 8, 8, true);
    const double e = energy(f);
    CHECK(std::abs(energy(brute_dqft(f)) - e) <= 1e-9 * e);
}

TEST_CASE("real-scalar linearity") {
    std::mt19937_64 rng(11);
    const QImage f = oracle::random_qimage(rng, 6, 4);
    const QImage g = oracle::random_qimage(rng, 6, 4);
    QImage mix(6, 4);
    for (std::size_t i = 0; i < mix.size(); ++i) mix.values()[i] = 2.5 * f.values()[i] - 0.75 * g.values()[i];
    const QSpectrum F = dqft(f), G = dqft(g), X = dqft(mix);
    QSpectrum expect(6, 4);
    for (std::size_t i = 0; i < expect.size(); ++i) expect.values()[i] = 2.5 * F.values()[i] - 0.75 * G.values()[i];
    CHECK(oracle::max_abs_diff(X, expect) < 1e-12);
}

TEST_CASE("error cases") {
    CHECK_THROWS_AS(dqft(QImage{}), InvalidInput);
    CHECK_THROWS_AS(idqft(QSpectrum{}), InvalidInput);
    CHECK_THROWS_AS(brute_dqft(QImage(65, 64)), Refused);
    CHECK_NOTHROW(brute_dqft(QImage(64, 64)));
}
