#pragma once

/**
 * @file fft.hpp
 * @brief Unnormalized 1-D complex DFT of arbitrary length.
 *
 * Backed by FFTW3. Plans are created once per (length, direction) with
 * FFTW_ESTIMATE | FFTW_UNALIGNED, so the chosen algorithm and the result do not
 * depend on buffer alignment or on which thread runs the transform.
 */

#include <complex>
#include <cstddef>
#include <span>

namespace qhf::fft {

enum class Direction {
    Forward,   // X[k] = sum x[n] e^{-2 pi i kn/L}
    Backward,  // X[k] = sum x[n] e^{+2 pi i kn/L}
};

/// In-place transform of data; no normalization is applied.
void transform(std::span<std::complex<double>> data, Direction dir);

}  // namespace qhf::fft
