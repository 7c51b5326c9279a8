#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mobius/curves.hpp"
#include "mobius/geometry.hpp"
#include "mobius/operators.hpp"

using namespace mobius;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("reference arc point evaluations") {
    CHECK(wv_boundary_point(0.0, +1) == Complex(0.5, 0.0));
    // just past zero the arc sits at 0.5 + i t/6 + O(t^2)
    const Complex near_zero = wv_boundary_point(1e-9, +1);
    CHECK(std::abs(near_zero.real() - 0.5) < 1e-15);
    CHECK(std::abs(near_zero.imag() - 1e-9 / 6.0) < 1e-18);

    const Complex at_two_pi = wv_boundary_point(kTwoPi, +1);
    CHECK(std::abs(at_two_pi - Complex(0.0, 1.0 / kTwoPi)) < 1e-15);

    const Complex at_pi = wv_boundary_point(kPi, +1);
    CHECK(at_pi.real() == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(at_pi.imag() == doctest::Approx(1.0 / kPi).epsilon(1e-14));

    CHECK(wv_boundary_point(kPi, -1).imag() == doctest::Approx(-1.0 / kPi).epsilon(1e-14));

    CHECK_THROWS_AS(wv_boundary_point(-0.1, +1), std::invalid_argument);
    CHECK_THROWS_AS(wv_boundary_point(7.0, +1), std::invalid_argument);
    CHECK_THROWS_AS(wv_boundary_point(1.0, 2), std::invalid_argument);
}

TEST_CASE("series takeover is seamless at the switch point") {
    // the direct formula itself carries ~eps/t^2 cancellation noise there,
    // which is exactly why the series takes over
    for (double t : {0.999e-3, 1.001e-3}) {
        const Complex direct((1.0 - std::cos(t)) / (t * t), (t - std::sin(t)) / (t * t));
        CHECK(std::abs(wv_boundary_point(t, +1) - direct) < 1e-9);
    }
}

TEST_CASE("reference boundary shape invariants") {
    const ReferenceBoundary ref = make_reference_boundary();
    CHECK(ref.samples.size() > 1000);

    double min_re = 1e9, max_re = -1e9, max_im = -1e9;
    for (const Complex& w : ref.samples) {
        min_re = std::min(min_re, w.real());
        max_re = std::max(max_re, w.real());
        max_im = std::max(max_im, w.imag());
    }
    CHECK(min_re >= -1e-15);
    CHECK(max_re <= 0.5 + 1e-15);
    CHECK(max_im == doctest::Approx(1.0 / kPi).epsilon(1e-6));  // curve top at t = pi

    // conjugation symmetry: the mirrored sample set coincides with itself
    for (std::size_t i = 0; i < ref.samples.size(); i += 37) {
        const Complex conj_w = std::conj(ref.samples[i]);
        double best = 1e9;
        for (const Complex& w : ref.samples) best = std::min(best, std::abs(w - conj_w));
        CHECK(best < 1e-12);
    }

    CHECK(reference_support(ref, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(reference_support(ref, kPi) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("computed volterra support deviates little from the reference") {
    const WvComparison at_200 = compare_wv(build_volterra(200), 128);
    CHECK(at_200.max_deviation < 2e-2);

    const WvComparison at_400 = compare_wv(build_volterra(400), 128);
    CHECK(at_400.max_deviation < at_200.max_deviation + 1e-12);  // refinement shrinks
    CHECK(at_400.max_deviation < 1e-2);

    CHECK_THROWS_AS(compare_wv(operator_power(build_volterra(50), 2), 16),
                    std::invalid_argument);
}

TEST_CASE("computed support is conjugation symmetric") {
    const DiscretizedOperator v = build_volterra(100);
    for (double theta : {0.3, 1.1, 2.7}) {
        const double plus = support_function(v.matrix, std::polar(1.0, theta));
        const double minus = support_function(v.matrix, std::polar(1.0, -theta));
        CHECK(plus == doctest::Approx(minus).epsilon(1e-10));
    }
}

TEST_CASE("mutual containment of computed and reference hulls") {
    const int angles = 64;
    const DiscretizedOperator v = build_volterra(200);
    const WvComparison cmp = compare_wv(v, angles);
    const double slack = cmp.max_deviation + 1e-9;

    const ReferenceBoundary ref = make_reference_boundary();
    const NumericalRangeBoundary computed = numerical_range_boundary(v.matrix, angles);
    for (const auto& s : computed.samples) {
        // computed boundary points inside the inflated reference hull
        bool inside = true;
        for (int k = 0; k < angles; ++k) {
            const double theta = kTwoPi * k / angles;
            if ((s.point * std::polar(1.0, -theta)).real() >
                reference_support(ref, theta) + slack) {
                inside = false;
                break;
            }
        }
        CHECK(inside);
    }
    for (std::size_t i = 0; i < ref.samples.size(); i += 101)
        CHECK(hull_contains(computed, ref.samples[i], slack));
}

TEST_CASE("eigenvalues of the discretized operator sit inside the computed hull") {
    const DiscretizedOperator v = build_volterra(100);
    const NumericalRangeBoundary boundary = numerical_range_boundary(v.matrix, 64);
    for (Complex ev : eigenvalues(v.matrix)) CHECK(hull_contains(boundary, ev, 1e-8));
}

TEST_CASE("vertical edge extent approaches 1/(2 pi)") {
    const double extent_400 = vertical_edge_extent(build_volterra(400));
    CHECK(std::abs(extent_400 - 1.0 / kTwoPi) < 2e-3);

    const double extent_100 = vertical_edge_extent(build_volterra(100));
    CHECK(std::abs(extent_400 - 1.0 / kTwoPi) <=
          std::abs(extent_100 - 1.0 / kTwoPi) + 1e-12);
}

TEST_SUITE_END();
