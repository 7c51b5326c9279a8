#include "mobius/curves.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mobius/geometry.hpp"

namespace mobius {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (1 - cos t)/t^2 and (t - sin t)/t^2 with series takeover near t = 0
double cos_part(double t) {
    if (std::abs(t) < 1e-3) {
        const double t2 = t * t;
        // 1/2 - t^2/24 + t^4/720 - t^6/40320 + t^8/3628800 - t^10/479001600
        return 0.5 +
               t2 * (-1.0 / 24 +
                     t2 * (1.0 / 720 +
                           t2 * (-1.0 / 40320 +
                                 t2 * (1.0 / 3628800 + t2 * (-1.0 / 479001600)))));
    }
    return (1.0 - std::cos(t)) / (t * t);
}

double sin_part(double t) {
    if (std::abs(t) < 1e-3) {
        const double t2 = t * t;
        // t/6 - t^3/120 + t^5/5040 - t^7/362880 + t^9/39916800 - ...
        return t * (1.0 / 6 +
                    t2 * (-1.0 / 120 +
                          t2 * (1.0 / 5040 +
                                t2 * (-1.0 / 362880 +
                                      t2 * (1.0 / 39916800 + t2 * (-1.0 / 6227020800))))));
    }
    return (t - std::sin(t)) / (t * t);
}

}  // namespace

Complex wv_boundary_point(double t, int branch) {
    require(t >= 0.0 && t <= kTwoPi, "wv_boundary_point: t must lie in [0, 2*pi]");
    require(branch == 1 || branch == -1, "wv_boundary_point: branch must be +1 or -1");
    return {cos_part(t), branch * sin_part(t)};
}

ReferenceBoundary make_reference_boundary(int arc_samples) {
    require(arc_samples >= 16, "make_reference_boundary: need at least 16 arc samples");

    ReferenceBoundary ref;
    ref.param_grid.reserve(arc_samples);
    // Chebyshev-extreme spacing on [0, 2*pi]: dense where curvature is high
    for (int j = 0; j < arc_samples; ++j)
        ref.param_grid.push_back(kPi * (1.0 - std::cos(kPi * j / (arc_samples - 1))));

    for (double t : ref.param_grid) ref.samples.push_back(wv_boundary_point(t, +1));
    // vertical segment from i/(2*pi) down to -i/(2*pi)
    const int seg_samples = 65;
    const double top = 1.0 / kTwoPi;
    for (int j = 0; j <= seg_samples; ++j)
        ref.samples.push_back(Complex(0.0, top - 2.0 * top * j / seg_samples));
    for (auto it = ref.param_grid.rbegin(); it != ref.param_grid.rend(); ++it)
        ref.samples.push_back(wv_boundary_point(*it, -1));
    return ref;
}

double reference_support(const ReferenceBoundary& ref, double theta) {
    require(!ref.samples.empty(), "reference_support: empty boundary");
    const Complex rot = std::polar(1.0, -theta);
    double best = -std::numeric_limits<double>::infinity();
    for (const Complex& w : ref.samples) best = std::max(best, (w * rot).real());
    return best;
}

WvComparison compare_wv(const DiscretizedOperator& op, int num_angles,
                        const SpectralConfig& cfg) {
    require(op.kind == OperatorKind::VolterraPower && op.power == 1,
            "compare_wv: first-power Volterra operator required");
    require(num_angles >= 8, "compare_wv: need at least 8 angles");

    const ReferenceBoundary ref = make_reference_boundary();
    WvComparison cmp;
    cmp.per_angle.reserve(num_angles);
    for (int k = 0; k < num_angles; ++k) {
        const double theta = kTwoPi * k / num_angles;
        WvAngleDeviation d;
        d.theta = theta;
        d.computed = support_function(op.matrix, std::polar(1.0, theta), cfg);
        d.reference = reference_support(ref, theta);
        cmp.per_angle.push_back(d);
        cmp.max_deviation = std::max(cmp.max_deviation, std::abs(d.computed - d.reference));
    }
    return cmp;
}

double vertical_edge_extent(const DiscretizedOperator& op, const SpectralConfig& cfg) {
    require(op.kind == OperatorKind::VolterraPower && op.power == 1,
            "vertical_edge_extent: first-power Volterra operator required");
    const auto n = op.matrix.rows();
    const Complex i_unit(0.0, 1.0);
    const ComplexMatrix skew = (op.matrix - op.matrix.adjoint()) / (2.0 * i_unit);
    const ComplexMatrix proj =
        ComplexMatrix::Identity(n, n) - ComplexMatrix::Ones(n, n) / static_cast<double>(n);
    ComplexMatrix compressed = proj * skew * proj;
    compressed = 0.5 * (compressed + compressed.adjoint()).eval();
    return hermitian_max_eig(compressed, cfg).value;
}

}  // namespace mobius
