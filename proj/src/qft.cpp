#include "qhf/qft.hpp"

#include "qhf/fft.hpp"
#include "qhf/parallel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace qhf {

namespace {

using cplx = std::complex<double>;

void require_nonempty(const Grid<Quaternion>& g, const char* what) {
    if (g.width() == 0 || g.height() == 0) {
        throw InvalidInput(std::string(what) + ": empty grid");
    }
}

// Both directions share the decomposition; only the kernel signs flip.
Grid<Quaternion> two_sided(const Grid<Quaternion>& in, bool inverse) {
    const std::size_t M = in.width();
    const std::size_t N = in.height();
    Grid<Quaternion> work(M, N);

    const auto left_dir = inverse ? fft::Direction::Backward : fft::Direction::Forward;
    const auto right_dir = left_dir;
    const auto right_conj_dir = inverse ? fft::Direction::Forward : fft::Direction::Backward;

    // axis 1 (left, imaginary unit i)
    parallel_for(N, [&](std::size_t n) {
        std::vector<cplx> p(M), q(M);
        for (std::size_t m = 0; m < M; ++m) {
            const Quaternion& x = in(m, n);
            p[m] = {x.q0, x.q1};
            q[m] = {x.q2, x.q3};
        }
        fft::transform(p, left_dir);
        fft::transform(q, left_dir);
        for (std::size_t m = 0; m < M; ++m) {
            work(m, n) = {p[m].real(), p[m].imag(), q[m].real(), q[m].imag()};
        }
    });

    // axis 2 (right, imaginary unit j)
    const double scale = 1.0 / std::sqrt(static_cast<double>(M) * static_cast<double>(N));
    Grid<Quaternion> out(M, N);
    parallel_for(M, [&](std::size_t m) {
        std::vector<cplx> c(N), d(N);
        for (std::size_t n = 0; n < N; ++n) {
            const Quaternion& g = work(m, n);
            c[n] = {g.q0, g.q2};
            d[n] = {g.q1, -g.q3};
        }
        fft::transform(c, right_dir);
        fft::transform(d, right_conj_dir);
        for (std::size_t n = 0; n < N; ++n) {
            out(m, n) = Quaternion{c[n].real(), d[n].real(), c[n].imag(), -d[n].imag()} * scale;
        }
    });
    return out;
}

}  // namespace

double energy(const Grid<Quaternion>& g) {
    double sum = 0.0;
    for (const auto& q : g.values()) sum += norm_squared(q);
    return sum;
}

double angular_frequency(std::size_t k, std::size_t length) {
    const double two_pi = 2.0 * std::numbers::pi;
    const std::size_t first_negative = (length + 1) / 2;  // ceil(L/2)
    if (k < first_negative) return two_pi * static_cast<double>(k) / static_cast<double>(length);
    return -two_pi * static_cast<double>(length - k) / static_cast<double>(length);
}

int frequency_sign(std::size_t k, std::size_t length) {
    if (k == 0) return 0;
    return k < (length + 1) / 2 ? 1 : -1;
}

std::vector<double> frequency_axis(std::size_t length) {
    std::vector<double> w(length);
    for (std::size_t k = 0; k < length; ++k) w[k] = angular_frequency(k, length);
    return w;
}

QSpectrum dqft(const QImage& f) {
    require_nonempty(f, "dqft");
    return QSpectrum(two_sided(f, false));
}

QImage idqft(const QSpectrum& spectrum) {
    require_nonempty(spectrum, "idqft");
    return QImage(two_sided(spectrum, true));
}

QSpectrum brute_dqft(const QImage& f) {
    require_nonempty(f, "brute_dqft");
    const std::size_t M = f.width();
    const std::size_t N = f.height();
    if (M * N > kBruteForceLimit) {
        throw Refused("brute_dqft: " + std::to_string(M) + "x" + std::to_string(N) +
                      " exceeds the " + std::to_string(kBruteForceLimit) + "-pixel guard");
    }

    const double two_pi = 2.0 * std::numbers::pi;
    // e^{-i 2 pi r / M} and e^{-j 2 pi r / N} for every residue r
    std::vector<Quaternion> left(M), right(N);
    for (std::size_t r = 0; r < M; ++r) {
        const double a = two_pi * static_cast<double>(r) / static_cast<double>(M);
        left[r] = {std::cos(a), -std::sin(a), 0.0, 0.0};
    }
    for (std::size_t r = 0; r < N; ++r) {
        const double a = two_pi * static_cast<double>(r) / static_cast<double>(N);
        right[r] = {std::cos(a), 0.0, -std::sin(a), 0.0};
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(M * N));
    QSpectrum out(M, N);
    for (std::size_t v = 0; v < N; ++v) {
        for (std::size_t u = 0; u < M; ++u) {
            Quaternion acc;
            for (std::size_t n = 0; n < N; ++n) {
                const Quaternion& kr = right[(v * n) % N];
                for (std::size_t m = 0; m < M; ++m) {
                    acc += left[(u * m) % M] * f(m, n) * kr;
                }
            }
            out(u, v) = acc * scale;
        }
    }
    return out;
}

}  // namespace qhf
