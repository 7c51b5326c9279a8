#include "mobius/operators.hpp"

#include <cmath>
#include <string>

#include "mobius/detail/rng.hpp"
#include "mobius/spectral.hpp"

namespace mobius {

DiscretizedOperator build_volterra(int grid_n) {
    require(grid_n >= 1, "build_volterra: grid size must be >= 1");
    const double h = 1.0 / grid_n;
    ComplexMatrix m = ComplexMatrix::Zero(grid_n, grid_n);
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < i; ++j) m(i, j) = h;
        m(i, i) = 0.5 * h;
    }
    return {std::move(m), grid_n, h, OperatorKind::VolterraPower, 1};
}

DiscretizedOperator operator_power(const DiscretizedOperator& op, int n) {
    require(n >= 1, "operator_power: exponent must be >= 1");
    DiscretizedOperator out = op;
    ComplexMatrix acc = op.matrix;
    for (int k = 1; k < n; ++k) acc = acc * op.matrix;
    out.matrix = std::move(acc);
    if (op.kind == OperatorKind::VolterraPower) out.power = op.power * n;
    return out;
}

ComplexMatrix moebius_transform(const ComplexMatrix& T, const MoebiusParams& p) {
    const auto dim = T.rows();
    require(dim >= 1 && T.rows() == T.cols(), "moebius_transform: square matrix required");
    require(T.allFinite(), "moebius_transform: matrix entries must be finite");
    require(std::isfinite(p.lambda.real()) && std::isfinite(p.lambda.imag()) &&
                std::isfinite(p.mu.real()) && std::isfinite(p.mu.imag()),
            "moebius_transform: parameters must be finite");

    const ComplexMatrix ident = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix numer = ident + p.lambda * T;
    const ComplexMatrix denom = ident + p.mu * T;

    // M * (I + mu T) = (I + lambda T)  =>  (I + mu T)^H M^H = (I + lambda T)^H
    Eigen::PartialPivLU<ComplexMatrix> lu(denom.adjoint());
    const double rcond = lu.rcond();
    if (!(rcond >= kSingularRcondThreshold)) {
        throw SingularPencilError(
            "moebius_transform: I + mu*T is numerically singular (rcond = " +
                std::to_string(rcond) + ")",
            rcond);
    }
    return lu.solve(numer.adjoint()).adjoint();
}

ComplexMatrix random_invertible_matrix(int dim, std::uint64_t seed, double condition_cap) {
    require(dim >= 1, "random_invertible_matrix: dim must be >= 1");
    require(condition_cap > 1.0, "random_invertible_matrix: condition cap must exceed 1");

    detail::Rng rng(seed);
    const double sigma_min_floor = 1e-4 * std::sqrt(static_cast<double>(dim));
    constexpr int kRetries = 64;

    for (int attempt = 0; attempt < kRetries; ++attempt) {
        ComplexMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = rng.next_complex_gaussian();

        Eigen::PartialPivLU<ComplexMatrix> lu(m);
        if (!(lu.rcond() > 0.0)) continue;
        const ComplexMatrix inv = lu.solve(ComplexMatrix::Identity(dim, dim));

        const double sigma_max = spectral_norm(m);
        const double inv_norm = spectral_norm(inv);
        if (inv_norm == 0.0) continue;
        const double sigma_min = 1.0 / inv_norm;
        if (sigma_min >= sigma_min_floor && sigma_max / sigma_min <= condition_cap)
            return m;
    }
    throw GenerationError("random_invertible_matrix: retry budget exhausted for dim " +
                          std::to_string(dim));
}

GridFunction sample_grid(int grid_n, const std::function<Complex(double)>& f) {
    require(grid_n >= 1, "sample_grid: grid size must be >= 1");
    const double h = 1.0 / grid_n;
    ComplexVector v(grid_n);
    for (int j = 0; j < grid_n; ++j) v[j] = f((j + 0.5) * h);
    return {std::move(v), grid_n};
}

}  // namespace mobius
