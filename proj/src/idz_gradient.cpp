#include "qhf/idz_gradient.hpp"

#include "qhf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qhf {

namespace {

double fold_half_turn(double theta) {
    constexpr double pi = std::numbers::pi;
    double t = std::fmod(theta, pi);
    if (t < 0.0) t += pi;
    if (t >= pi) t = 0.0;
    return t;
}

}  // namespace

IdzFormula parse_idz_formula(std::string_view name) {
    if (name == "derived") return IdzFormula::Derived;
    if (name == "verbatim") return IdzFormula::Verbatim;
    throw InvalidParameter("unknown idz-formula '" + std::string(name) +
                           "' (expected derived|verbatim)");
}

std::string_view to_string(IdzFormula f) {
    return f == IdzFormula::Derived ? "derived" : "verbatim";
}

Partials partials(const ChannelField& h) {
    const std::size_t M = h.width();
    const std::size_t N = h.height();
    if (M < 2 || N < 2) {
        throw InvalidInput("partials: field must be at least 2x2 (got " + std::to_string(M) + "x" +
                           std::to_string(N) + ")");
    }

    Partials d{ChannelField(M, N), ChannelField(M, N)};
    for (std::size_t n = 0; n < N; ++n) {
        const std::size_t up = n == 0 ? 0 : n - 1;
        const std::size_t down = n + 1 == N ? n : n + 1;
        for (std::size_t m = 0; m < M; ++m) {
            const std::size_t left = m == 0 ? 0 : m - 1;
            const std::size_t right = m + 1 == M ? m : m + 1;
            for (int k = 0; k < 3; ++k) {
                d.dx1(m, n)[k] = 0.5 * (h(right, n)[k] - h(left, n)[k]);
                d.dx2(m, n)[k] = 0.5 * (h(m, down)[k] - h(m, up)[k]);
            }
        }
    }
    return d;
}

GradientSample idz_sample(double a, double b, double c, IdzFormula formula) {
    GradientSample s{a, b, c, 0.0, std::nullopt};
    if (formula == IdzFormula::Derived) {
        const double diff = a - b;
        s.f_max = 0.5 * (a + b + std::sqrt(diff * diff + 4.0 * c * c));
        if (diff * diff + c * c > 0.0) s.theta_max = fold_half_turn(0.5 * std::atan2(2.0 * c, diff));
        return s;
    }

    // printed form: roles of B and C exchanged relative to f(theta)
    const double diff = a - c;
    const double root = std::sqrt(diff * diff + 4.0 * b * b);
    s.f_max = 0.5 * (a + c + root);
    if (diff * diff + b * b > 0.0) {
        const double ratio = std::clamp((s.f_max - a) / (2.0 * s.f_max - a - c), -1.0, 1.0);
        const double sign = b >= 0.0 ? 1.0 : -1.0;
        s.theta_max = fold_half_turn(sign * std::asin(ratio));
    }
    return s;
}

double directional_variation(const GradientSample& s, double theta) {
    const double co = std::cos(theta);
    const double si = std::sin(theta);
    return s.a * co * co + s.b * si * si + 2.0 * s.c * si * co;
}

GradientField structure(const ChannelField& h, IdzFormula formula) {
    const Partials d = partials(h);
    GradientField g(h.width(), h.height());
    parallel_for(h.height(), [&](std::size_t n) {
        for (std::size_t m = 0; m < h.width(); ++m) {
            const auto& x = d.dx1(m, n);
            const auto& y = d.dx2(m, n);
            double a = 0.0, b = 0.0, c = 0.0;
            for (int k = 0; k < 3; ++k) {
                a += x[k] * x[k];
                b += y[k] * y[k];
                c += x[k] * y[k];
            }
            g(m, n) = idz_sample(a, b, c, formula);
        }
    });
    return g;
}

}  // namespace qhf
