#pragma once

/**
 * @file qft.hpp
 * @brief Two-sided discrete quaternion Fourier transform.
 *
 *   F(u,v) = 1/sqrt(MN) * sum_{m,n} e^{-i 2 pi u m / M} f(m,n) e^{-j 2 pi v n / N}
 *
 * The i-kernel acts from the left along axis 1 (columns m), the j-kernel from
 * the right along axis 2 (rows n). Forward and inverse share the unitary
 * 1/sqrt(MN) factor, so Parseval holds with constant 1.
 *
 * The fast path splits each quaternion into two complex numbers per pass and
 * runs ordinary complex FFTs:
 *
 *   axis 1:  f = P + Q j,  P = q0 + q1 i,  Q = q2 + q3 i
 *            e^{-i t} (P + Q j) = (e^{-i t} P) + (e^{-i t} Q) j
 *
 *   axis 2:  g = C + D i,  C = g0 + g2 j,  D = g1 - g3 j
 *            (C + D i) e^{-j p} = C e^{-j p} + (D e^{+j p}) i
 *
 * so D is transformed with the sign-reversed kernel.
 */

#include "qhf/grid.hpp"
#include "qhf/quaternion.hpp"

#include <cstddef>
#include <vector>

namespace qhf {

struct SpatialDomain {};
struct FrequencyDomain {};

/// Quaternion-valued grid carrying its domain in the type.
template <typename Domain>
class QuaternionGrid : public Grid<Quaternion> {
public:
    using Grid<Quaternion>::Grid;
    QuaternionGrid() = default;
    explicit QuaternionGrid(Grid<Quaternion> g) : Grid<Quaternion>(std::move(g)) {}
};

using QImage = QuaternionGrid<SpatialDomain>;
using QSpectrum = QuaternionGrid<FrequencyDomain>;

/// Sum of squared moduli over the grid.
double energy(const Grid<Quaternion>& g);

/**
 * Signed angular frequency (radians/pixel) of DFT bin k on an axis of length L.
 * w_0 = 0, w_k = 2 pi k / L for 1 <= k <= ceil(L/2) - 1, and 2 pi (k - L) / L
 * above; the even-length Nyquist bin lands on -pi.
 */
double angular_frequency(std::size_t k, std::size_t length);

/// sgn(w_k) in {-1, 0, 1}; the DC bin is 0.
int frequency_sign(std::size_t k, std::size_t length);

/// All bin frequencies of an axis, in bin order.
std::vector<double> frequency_axis(std::size_t length);

QSpectrum dqft(const QImage& f);
QImage idqft(const QSpectrum& spectrum);

/// Largest M*N accepted by brute_dqft.
inline constexpr std::size_t kBruteForceLimit = 4096;

/// Direct evaluation of the defining double sum with quaternion products.
/// O((MN)^2); throws Refused above kBruteForceLimit pixels.
QSpectrum brute_dqft(const QImage& f);

}  // namespace qhf
