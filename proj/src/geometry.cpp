#include "mobius/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mobius {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BoundarySample sample_at(const ComplexMatrix& a, double theta, const SpectralConfig& cfg) {
    const Complex rot = std::polar(1.0, -theta);
    const ComplexMatrix b = rot * a;
    const ComplexMatrix herm = 0.5 * (b + b.adjoint());
    ExtremalEigenpair pair = hermitian_max_eig(herm, cfg);
    const Complex point = pair.vector.dot(a * pair.vector);  // <Av, v>
    return {theta, pair.value, point};
}

}  // namespace

NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& a, int num_angles,
                                                const SpectralConfig& cfg) {
    require(a.rows() == a.cols() && a.rows() >= 1,
            "numerical_range_boundary: square matrix required");
    require(num_angles >= 8, "numerical_range_boundary: need at least 8 angles");

    NumericalRangeBoundary boundary;
    boundary.source_dim = static_cast<int>(a.rows());
    boundary.samples.reserve(static_cast<std::size_t>(num_angles));
    for (int k = 0; k < num_angles; ++k)
        boundary.samples.push_back(sample_at(a, kTwoPi * k / num_angles, cfg));

    // bounded bisection refinement where adjacent boundary points are far
    // apart relative to the median gap (flat stretches stop subdividing once
    // the sample budget is hit)
    const std::size_t max_samples = static_cast<std::size_t>(num_angles) * 4;
    for (int pass = 0; pass < 3 && boundary.samples.size() < max_samples; ++pass) {
        auto& s = boundary.samples;
        std::vector<double> gaps(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto& next = s[(i + 1) % s.size()];
            gaps[i] = std::abs(next.point - s[i].point);
        }
        std::vector<double> sorted = gaps;
        std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
        const double median = sorted[sorted.size() / 2];
        if (median == 0.0) break;  // point set degenerate (normal matrix edge)

        std::vector<BoundarySample> extra;
        for (std::size_t i = 0; i < s.size() && s.size() + extra.size() < max_samples; ++i) {
            if (gaps[i] <= 10.0 * median) continue;
            const double t0 = s[i].theta;
            double t1 = s[(i + 1) % s.size()].theta;
            if (t1 <= t0) t1 += kTwoPi;
            const double mid = std::fmod(0.5 * (t0 + t1), kTwoPi);
            extra.push_back(sample_at(a, mid, cfg));
        }
        if (extra.empty()) break;
        s.insert(s.end(), extra.begin(), extra.end());
        std::sort(s.begin(), s.end(),
                  [](const BoundarySample& x, const BoundarySample& y) {
                      return x.theta < y.theta;
                  });
        s.erase(std::unique(s.begin(), s.end(),
                            [](const BoundarySample& x, const BoundarySample& y) {
                                return x.theta == y.theta;
                            }),
                s.end());
    }
    return boundary;
}

double support_function(const ComplexMatrix& a, Complex z, const SpectralConfig& cfg) {
    require(a.rows() == a.cols() && a.rows() >= 1, "support_function: square matrix required");
    require(z != Complex(0.0, 0.0), "support_function: direction must be nonzero");
    const double theta = std::arg(z);
    return std::abs(z) * sample_at(a, theta, cfg).support;
}

double halfplane_support(Complex z) {
    require(z != Complex(0.0, 0.0), "halfplane_support: direction must be nonzero");
    const double scale = std::max(std::abs(z), 1.0);
    if (std::abs(z.imag()) <= 1e-12 * scale && z.real() < 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
}

bool hull_contains(const NumericalRangeBoundary& boundary, Complex w, double slack) {
    for (const auto& s : boundary.samples) {
        const double extent = (w * std::polar(1.0, -s.theta)).real();
        if (extent > s.support + slack) return false;
    }
    return true;
}

void validate_boundary(const NumericalRangeBoundary& boundary) {
    const auto& s = boundary.samples;
    if (s.empty()) throw std::logic_error("boundary: empty sample set");
    double scale = 1.0;
    for (const auto& q : s) scale = std::max(scale, std::abs(q.support));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && !(s[i].theta > s[i - 1].theta))
            throw std::logic_error("boundary: angles not strictly increasing");
        if (s[i].theta < 0.0 || s[i].theta >= kTwoPi)
            throw std::logic_error("boundary: angle out of [0, 2*pi)");
        const double on_line =
            (s[i].point * std::polar(1.0, -s[i].theta)).real() - s[i].support;
        if (std::abs(on_line) > 1e-9 * scale)
            throw std::logic_error("boundary: point off its supporting line by " +
                                   std::to_string(on_line));
        if (!hull_contains(boundary, s[i].point, 1e-9 * scale))
            throw std::logic_error("boundary: point outside the supporting hull");
    }
}

}  // namespace mobius
