#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mobius/operators.hpp"
#include "mobius/spectral.hpp"
#include "oracles.hpp"

using namespace mobius;

TEST_SUITE_BEGIN("operators");

TEST_CASE("volterra matrix entries follow the midpoint rule") {
    const DiscretizedOperator v2 = build_volterra(2);
    CHECK(v2.step == 0.5);
    CHECK(v2.matrix(0, 0) == Complex(0.25, 0.0));
    CHECK(v2.matrix(0, 1) == Complex(0.0, 0.0));
    CHECK(v2.matrix(1, 0) == Complex(0.5, 0.0));
    CHECK(v2.matrix(1, 1) == Complex(0.25, 0.0));

    const DiscretizedOperator v1 = build_volterra(1);
    CHECK(v1.matrix(0, 0) == Complex(0.5, 0.0));

    CHECK_THROWS_AS(build_volterra(0), std::invalid_argument);
}

TEST_CASE("volterra plus its adjoint is exactly h times the all-ones matrix") {
    for (int n : {1, 2, 5, 33, 100}) {
        const DiscretizedOperator v = build_volterra(n);
        const ComplexMatrix sum = v.matrix + v.matrix.adjoint();
        const ComplexMatrix expect = v.step * ComplexMatrix::Ones(n, n);
        CHECK((sum - expect).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("real part of the volterra form is the rank-one positivity identity") {
    for (unsigned seed : {11u, 12u, 13u}) {
        const int n = 64;
        const DiscretizedOperator v = build_volterra(n);
        ComplexVector x(n);
        std::mt19937 gen(seed);
        std::normal_distribution<double> dist;
        for (int i = 0; i < n; ++i) x[i] = Complex(dist(gen), dist(gen));

        const double lhs = std::real(x.dot(v.matrix * x));
        const double rhs = 0.5 * v.step * std::norm(x.sum());
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(lhs >= -1e-12);
    }
}

TEST_CASE("volterra norm converges to the known operator norm") {
    const double norm_800 = spectral_norm(build_volterra(800).matrix);
    const double norm_1600 = spectral_norm(build_volterra(1600).matrix);
    const double target = 2.0 / std::numbers::pi;
    CHECK(std::abs(norm_800 - target) < 1e-3);
    CHECK(std::abs(norm_800 - norm_1600) < 1e-4);  // convergence study oracle
}

TEST_CASE("operator powers") {
    const DiscretizedOperator v = build_volterra(2);

    const DiscretizedOperator p1 = operator_power(v, 1);
    CHECK((p1.matrix - v.matrix).cwiseAbs().maxCoeff() == 0.0);
    CHECK(p1.power == 1);

    const DiscretizedOperator p2 = operator_power(v, 2);
    CHECK(p2.power == 2);
    CHECK(p2.matrix(0, 0) == Complex(0.0625, 0.0));
    CHECK(p2.matrix(0, 1) == Complex(0.0, 0.0));
    CHECK(p2.matrix(1, 0) == Complex(0.25, 0.0));
    CHECK(p2.matrix(1, 1) == Complex(0.0625, 0.0));

    const DiscretizedOperator v400sq = operator_power(build_volterra(400), 2);
    for (int i = 0; i < 400; i += 97)
        CHECK(v400sq.matrix(i, i) == Complex(1.0 / 800 * 1.0 / 800, 0.0));

    CHECK_THROWS_AS(operator_power(v, 0), std::invalid_argument);
}

TEST_CASE("operator powers compose") {
    const DiscretizedOperator v = build_volterra(37);
    const ComplexMatrix lhs = operator_power(v, 5).matrix;
    const ComplexMatrix rhs = operator_power(v, 2).matrix * operator_power(v, 3).matrix;
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());
}

TEST_CASE("moebius transform cancels for equal parameters") {
    const ComplexMatrix t = oracles::random_matrix(6, 2024);
    const MoebiusParams p{Complex(0.4, -0.3), Complex(0.4, -0.3)};
    const ComplexMatrix m = moebius_transform(t, p);
    CHECK((m - ComplexMatrix::Identity(6, 6)).norm() < 1e-12);
}

TEST_CASE("moebius transform of the identity is a scalar") {
    const ComplexMatrix ident = ComplexMatrix::Identity(4, 4);
    const ComplexMatrix m = moebius_transform(ident, {Complex(0.3, 0), Complex(0.5, 0)});
    CHECK((m - (1.3 / 1.5) * ident).norm() < 1e-14);
    CHECK(spectral_norm(m) == doctest::Approx(13.0 / 15.0).epsilon(1e-10));
}

TEST_CASE("moebius transform on the volterra matrix succeeds away from the real pole") {
    // spectrum of V_N is {h/2}, so I + mu V_N is singular only at mu = -2N
    const DiscretizedOperator v = build_volterra(10);
    for (Complex mu : {Complex(5.0, 0.0), Complex(-3.0, 7.0), Complex(0.0, -40.0)})
        CHECK_NOTHROW(moebius_transform(v.matrix, {Complex(1.0, 1.0), mu}));
    CHECK_THROWS_AS(moebius_transform(v.matrix, {Complex(0.0, 0.0), Complex(-20.0, 0.0)}),
                    SingularPencilError);
}

TEST_CASE("moebius transform solves its defining equation") {
    for (unsigned seed : {5u, 6u}) {
        const ComplexMatrix t = oracles::random_matrix(7, seed);
        const MoebiusParams p{Complex(0.7, 0.2), Complex(-0.1, 0.9)};
        const ComplexMatrix m = moebius_transform(t, p);
        const ComplexMatrix ident = ComplexMatrix::Identity(7, 7);
        const double resid = (m * (ident + p.mu * t) - (ident + p.lambda * t)).norm();
        CHECK(resid < 1e-10 * (1.0 + std::abs(p.lambda)) * (1.0 + t.norm()));
    }
}

TEST_CASE("random invertible matrices are deterministic and well conditioned") {
    const ComplexMatrix a = random_invertible_matrix(2, 42, 1e6);
    const ComplexMatrix b = random_invertible_matrix(2, 42, 1e6);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix c = random_invertible_matrix(8, 99, 1e6);
    CHECK(oracles::svd_smallest_singular_value(c) > 0.0);

    const ComplexMatrix d = random_invertible_matrix(4, 7, 1e6);
    const ComplexMatrix prod = d * d.partialPivLu().solve(ComplexMatrix::Identity(4, 4));
    CHECK((prod - ComplexMatrix::Identity(4, 4)).norm() < 1e-10);
}

TEST_SUITE_END();
