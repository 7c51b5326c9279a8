#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mobius/contraction.hpp"
#include "mobius/operators.hpp"
#include "oracles.hpp"

using namespace mobius;

TEST_SUITE_BEGIN("contraction");

TEST_CASE("direct norm on closed-form cases") {
    const ComplexMatrix ident = ComplexMatrix::Identity(3, 3);
    CHECK(direct_norm_test(ident, {Complex(0.3, 0), Complex(0.5, 0)}) ==
          doctest::Approx(13.0 / 15.0).epsilon(1e-10));

    const ComplexMatrix t = oracles::random_matrix(5, 7);
    CHECK(direct_norm_test(t, {Complex(0.9, 0.1), Complex(0.9, 0.1)}) == 1.0);
}

TEST_CASE("direct norm at the volterra reference point approaches one") {
    const double norm = direct_norm_test(build_volterra(800).matrix,
                                         {Complex(0, 0), Complex(1, 0)});
    CHECK(std::abs(norm - 1.0) < 1e-2);
    CHECK(norm <= 1.0 + 1e-12);  // the gap matrix is exactly negative semidefinite here
}

TEST_CASE("quadratic gap on closed-form cases") {
    const ComplexMatrix t = oracles::random_matrix(4, 11);
    CHECK(quadratic_gap_test(t, {Complex(0.2, 0.7), Complex(0.2, 0.7)}) == 0.0);

    const ComplexMatrix ident = ComplexMatrix::Identity(2, 2);
    CHECK(quadratic_gap_test(ident, {Complex(0.3, 0), Complex(0.5, 0)}) ==
          doctest::Approx(1.3 * 1.3 - 1.5 * 1.5).epsilon(1e-12));
}

TEST_CASE("quadratic gap sign tracks the direct norm") {
    int judged = 0;
    for (unsigned seed = 100; seed < 160; ++seed) {
        const ComplexMatrix t = random_invertible_matrix(6, seed, 1e6);
        std::mt19937 gen(seed * 31 + 1);
        std::normal_distribution<double> dist;
        const MoebiusParams p{Complex(dist(gen), dist(gen)), Complex(dist(gen), dist(gen))};

        const double norm = direct_norm_test(t, p);
        if (std::abs(norm - 1.0) <= 1e-8) continue;
        ++judged;
        const double gap = quadratic_gap_test(t, p);
        CHECK((norm <= 1.0) == (gap <= 0.0));
    }
    CHECK(judged >= 50);
}

TEST_CASE("support inequality on closed-form cases") {
    const ComplexMatrix ident = ComplexMatrix::Identity(3, 3);

    const SupportTestResult ok =
        support_inequality_test(ident, {Complex(0.3, 0), Complex(0.5, 0)});
    CHECK(ok.lhs == doctest::Approx(-0.4).epsilon(1e-10));
    CHECK(ok.rhs == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(ok.holds);

    const SupportTestResult bad =
        support_inequality_test(ident, {Complex(2, 0), Complex(1, 0)});
    CHECK(bad.lhs == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(bad.rhs == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK_FALSE(bad.holds);

    CHECK_THROWS_AS(
        support_inequality_test(ident, {Complex(1, 0), Complex(1, 0)}),
        DegenerateParamsError);
    CHECK_THROWS_AS(
        support_inequality_test(ComplexMatrix::Zero(3, 3), {Complex(1, 0), Complex(2, 0)}),
        std::invalid_argument);
}

TEST_CASE("support inequality matches the direct norm off the borderline") {
    int judged = 0;
    for (unsigned seed = 300; seed < 400; ++seed) {
        const ComplexMatrix t = random_invertible_matrix(5, seed, 1e6);
        std::mt19937 gen(seed * 17 + 5);
        std::normal_distribution<double> dist;
        const MoebiusParams p{Complex(dist(gen), dist(gen)), Complex(dist(gen), dist(gen))};

        const SupportTestResult s = support_inequality_test(t, p);
        const double norm = direct_norm_test(t, p);
        if (std::abs(s.lhs - s.rhs) <= 1e-6 || std::abs(norm - 1.0) <= 1e-8) continue;
        ++judged;
        CHECK(s.holds == (norm <= 1.0));
    }
    CHECK(judged >= 80);
}

TEST_CASE("volterra oracle on the quoted parameter pairs") {
    CHECK(volterra_contraction_oracle({Complex(0.5, 0), Complex(1, 0)}));
    CHECK(volterra_contraction_oracle({Complex(-1, 1), Complex(1, 1)}));  // left endpoint
    CHECK_FALSE(volterra_contraction_oracle({Complex(0, 1), Complex(1, 0)}));
    CHECK_FALSE(volterra_contraction_oracle({Complex(-1.1, 0), Complex(-1, 0)}));
    CHECK_THROWS_AS(volterra_contraction_oracle({Complex(1, 1), Complex(1, 1)}),
                    DegenerateParamsError);
}

TEST_CASE("volterra oracle accepts dyadic on-segment points and rejects nudges") {
    const Complex mu(1.0, 0.5);
    for (double t : {0.0, 0.25, 0.5, 0.75, 0.984375}) {
        const Complex lambda(-(1.0 - t) * mu.real() + t * mu.real(), mu.imag());
        CHECK(volterra_contraction_oracle({lambda, mu}));
    }
    CHECK_FALSE(volterra_contraction_oracle({Complex(0.5, 0.5 + 1e-12), mu}));
    CHECK_FALSE(volterra_contraction_oracle({Complex(-1.0 - 1e-12, 0.5), mu}));
    CHECK_FALSE(volterra_contraction_oracle({Complex(0.5, 0.5), Complex(-1.0, 0.5)}));
}

TEST_CASE("volterra oracle routes agree on random pairs") {
    std::mt19937 gen(2718);
    std::normal_distribution<double> dist;
    for (int i = 0; i < 100000; ++i) {
        const MoebiusParams p{Complex(dist(gen), dist(gen)), Complex(dist(gen), dist(gen))};
        if (p.degenerate()) continue;
        CHECK_NOTHROW(volterra_contraction_oracle(p));  // logic_error on route mismatch
    }
}

TEST_CASE("moebius norm is invariant under joint phase rotation") {
    const ComplexMatrix t = oracles::random_matrix(5, 313);
    const MoebiusParams p{Complex(0.6, -0.2), Complex(-0.4, 0.9)};
    const double base = direct_norm_test(t, p);
    for (double phi : {0.5, 2.0}) {
        const Complex rot = std::polar(1.0, phi);
        const double rotated = direct_norm_test(
            ComplexMatrix(rot * t), {p.lambda / rot, p.mu / rot});
        CHECK(rotated == doctest::Approx(base).epsilon(1e-10));
    }
}

TEST_CASE("contraction report ties classification to the band") {
    const ComplexMatrix ident = ComplexMatrix::Identity(2, 2);
    const ContractionReport contr =
        contraction_report(ident, {Complex(0.3, 0), Complex(0.5, 0)}, {}, 1e-2);
    CHECK(contr.classification == Classification::Contraction);
    CHECK(contr.agree_direct_quad.value());
    CHECK(contr.agree_direct_support.value());
    CHECK(contr.agree_quad_support.value());

    const ContractionReport noncontr =
        contraction_report(ident, {Complex(2, 0), Complex(1, 0)}, {}, 1e-2);
    CHECK(noncontr.classification == Classification::NonContraction);

    const ContractionReport boundary =
        contraction_report(ident, {Complex(1, 0), Complex(1, 0)}, {}, 1e-2);
    CHECK(boundary.classification == Classification::Boundary);
    CHECK(boundary.direct_norm == 1.0);
    CHECK_FALSE(boundary.support_lhs.has_value());
}

TEST_CASE("region scan of the volterra family shows the boundary segment") {
    const DiscretizedOperator v = build_volterra(100);
    const RegionScan scan =
        region_scan(v.matrix, Complex(1, 0), {-1.5, 1.5, -1.5, 1.5}, 13, 13, {}, 1e-2);
    REQUIRE(scan.cells.size() == 169);

    int boundary_cells = 0;
    for (const auto& cell : scan.cells) {
        REQUIRE(cell.status == CellStatus::Ok);
        if (cell.lambda == scan.mu) CHECK(cell.norm == 1.0);
        // on the predicted segment the discrete norm never exceeds 1
        const bool on_segment = cell.lambda.imag() == 0.0 &&
                                cell.lambda.real() >= -1.0 && cell.lambda.real() < 1.0;
        if (on_segment) {
            CHECK(cell.norm <= 1.0 + 1e-12);
            CHECK(cell.classification == Classification::Boundary);
        }
        if (cell.classification == Classification::Boundary) ++boundary_cells;
        // far off the segment the norm is clearly above one
        if (std::abs(cell.lambda.imag()) > 0.5)
            CHECK(cell.classification == Classification::NonContraction);
    }
    CHECK(boundary_cells >= 9);
}

TEST_CASE("region scan with complex mu tracks the tilted segment") {
    // for mu = 1 + i the unit-norm locus runs from -conj(mu) = -1 + i to mu
    const DiscretizedOperator v = build_volterra(50);
    const Complex mu(1.0, 1.0);
    const RegionScan scan =
        region_scan(v.matrix, mu, {-1.5, 1.5, -0.5, 1.5}, 13, 9, {}, 1e-2);
    for (const auto& cell : scan.cells) {
        REQUIRE(cell.status == CellStatus::Ok);
        const bool on_segment = cell.lambda.imag() == 1.0 &&
                                cell.lambda.real() >= -1.0 && cell.lambda.real() < 1.0;
        if (on_segment) {
            CHECK(cell.norm <= 1.0 + 1e-12);
            CHECK(cell.classification == Classification::Boundary);
        }
        if (std::abs(cell.lambda.imag() - 1.0) >= 0.75)
            CHECK(cell.classification == Classification::NonContraction);
    }
}

TEST_CASE("region scan of the squared operator finds no strict contraction") {
    const DiscretizedOperator v2 = operator_power(build_volterra(100), 2);
    const RegionScan scan =
        region_scan(v2.matrix, Complex(1, 0), {-1.5, 1.5, -1.5, 1.5}, 13, 13, {}, 1e-2);
    for (const auto& cell : scan.cells) {
        REQUIRE(cell.status == CellStatus::Ok);
        CHECK(cell.classification != Classification::Contraction);
        if (cell.lambda == scan.mu) CHECK(cell.norm == 1.0);
        if (cell.lambda != scan.mu) CHECK(cell.norm > 1.0 - 1e-3);
    }
}

TEST_CASE("region scan validates resolution") {
    const ComplexMatrix t = ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(region_scan(t, Complex(1, 0), {-1, 1, -1, 1}, 1, 5),
                    std::invalid_argument);
}

TEST_CASE("scalar region matches the closed-form quotient") {
    // dim 1: the norm is |1 + lambda| / |1 + mu|
    ComplexMatrix one = ComplexMatrix::Identity(1, 1);
    const RegionScan scan = region_scan(one, Complex(1, 0), {-2, 2, -2, 2}, 5, 5, {}, 1e-2);
    for (const auto& cell : scan.cells) {
        if (cell.status != CellStatus::Ok || cell.lambda == scan.mu) continue;
        const double expect = std::abs(1.0 + cell.lambda) / 2.0;
        CHECK(cell.norm == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("lumer-phillips agreement for the volterra matrix and scaled identities") {
    const DiscretizedOperator v = build_volterra(50);
    const LumerPhillipsResult lp = lumer_phillips_check(v.matrix, {0.1, 1.0, 10.0});
    CHECK(lp.semigroup_contractive);
    CHECK(lp.halfplane);
    CHECK(lp.agree);

    const ComplexMatrix neg_ident = -ComplexMatrix::Identity(3, 3);
    const LumerPhillipsResult bad = lumer_phillips_check(neg_ident, {0.5, 2.0});
    CHECK_FALSE(bad.semigroup_contractive);
    CHECK_FALSE(bad.halfplane);
    CHECK(bad.agree);

    CHECK_THROWS_AS(lumer_phillips_check(v.matrix, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("lumer-phillips agreement for hull-shifted random matrices") {
    for (unsigned seed : {401u, 402u, 403u}) {
        ComplexMatrix a = oracles::random_matrix(6, seed);
        const ComplexMatrix herm = 0.5 * (a + a.adjoint());
        const double left_edge = oracles::dense_hermitian_min_eig(herm);
        a += (1.0 - std::min(left_edge, 0.0)) * ComplexMatrix::Identity(6, 6);

        const LumerPhillipsResult lp = lumer_phillips_check(a, {0.1, 0.5, 1.0, 2.0, 5.0});
        CHECK(lp.semigroup_contractive);
        CHECK(lp.halfplane);
        CHECK(lp.agree);
    }
}

TEST_CASE("boundary band calibration stays near the documented default") {
    const double band = volterra_boundary_band(400);
    CHECK(band > 0.0);
    CHECK(band < 1e-2);  // the default band is an upper envelope for N >= 400
}

TEST_SUITE_END();
