#pragma once

/**
 * @file idz_gradient.hpp
 * @brief Improved Di Zenzo multi-channel gradient.
 *
 * For a three-channel field the squared directional variation along theta is
 *
 *   f(theta) = A cos^2 theta + B sin^2 theta + 2 C sin theta cos theta
 *
 * with A = sum (dh_k/dx1)^2, B = sum (dh_k/dx2)^2, C = sum dh_k/dx1 dh_k/dx2.
 * Its maximum over theta is
 *
 *   f_max     = (A + B + sqrt((A - B)^2 + (2C)^2)) / 2
 *   theta_max = atan2(2C, A - B) / 2   (folded into [0, pi))
 *
 * theta_max is undefined when (A - B)^2 + C^2 = 0.
 *
 * IdzFormula::Verbatim switches to the alternative printed closed form
 * f_max = (A + C + sqrt((A - C)^2 + (2B)^2)) / 2 with the arcsin direction
 * rule; it does not maximize f(theta) and is kept for comparison runs only.
 */

#include "qhf/grid.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qhf {

enum class IdzFormula { Derived, Verbatim };

IdzFormula parse_idz_formula(std::string_view name);
std::string_view to_string(IdzFormula f);

struct GradientSample {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double f_max{0.0};
    std::optional<double> theta_max;  // radians in [0, pi); empty when degenerate

    bool operator==(const GradientSample&) const = default;
};

using GradientField = Grid<GradientSample>;

struct Partials {
    ChannelField dx1;  // along m (columns)
    ChannelField dx2;  // along n (rows)
};

/// Central differences with replicate padding; both dimensions must be >= 2.
Partials partials(const ChannelField& h);

/// Closed-form maximum of f(theta) for one pixel.
GradientSample idz_sample(double a, double b, double c, IdzFormula formula = IdzFormula::Derived);

/// f(theta) for the pixel's A, B, C.
double directional_variation(const GradientSample& s, double theta);

GradientField structure(const ChannelField& h, IdzFormula formula = IdzFormula::Derived);

}  // namespace qhf
