#pragma once

#include <vector>

#include "mobius/types.hpp"

namespace mobius {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the rule by Newton iteration on the Legendre polynomial.
/// Exact (to roundoff) for polynomials of degree <= 2*order - 1.
GaussLegendreRule gauss_legendre(int order);

/// Panel layout for composite quadrature on [0, 1].
struct QuadratureSpec {
    int order = 16;
    int panels = 64;
};

/// Composite Gauss-Legendre integral of f over [a, b].
template <typename F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec = {})
    -> decltype(f(0.0)) {
    const GaussLegendreRule rule = gauss_legendre(spec.order);
    const double panel_width = (b - a) / spec.panels;
    decltype(f(0.0)) total{};
    for (int p = 0; p < spec.panels; ++p) {
        const double mid = a + (p + 0.5) * panel_width;
        decltype(f(0.0)) acc{};
        for (int i = 0; i < rule.order; ++i) {
            acc += rule.weights[i] * f(mid + 0.5 * panel_width * rule.nodes[i]);
        }
        total += 0.5 * panel_width * acc;
    }
    return total;
}

/// J_m(c) = integral over [0,1] of x^m * exp(c*(x-1)) dx, c >= 0.
/// The exp(c) factor common to the integrands this feeds is cancelled by the
/// caller, which keeps everything representable for large c.
double shifted_moment_integral(int m, double c, const QuadratureSpec& spec = {});

}  // namespace mobius
