#include "mobius/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace mobius {

namespace {

GaussLegendreRule compute_rule(int order) {
    GaussLegendreRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    // roots are symmetric; solve for the upper half
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // evaluate P_order and its derivative by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

GaussLegendreRule gauss_legendre(int order) {
    require(order >= 1, "gauss_legendre: order must be >= 1");
    // recomputed per call: negligible next to the integrand evaluations,
    // and it keeps concurrent callers free of shared state
    return compute_rule(order);
}

double shifted_moment_integral(int m, double c, const QuadratureSpec& spec) {
    require(m >= 0, "shifted_moment_integral: m must be >= 0");
    require(c >= 0.0, "shifted_moment_integral: c must be >= 0");
    return integrate(
        [m, c](double x) { return std::pow(x, m) * std::exp(c * (x - 1.0)); },
        0.0, 1.0, spec);
}

}  // namespace mobius
