#pragma once

#include <cstdint>
#include <functional>

#include "mobius/types.hpp"

namespace mobius {

/// Midpoint-collocation matrix of integration from 0 to x on [0, 1]:
/// h below the diagonal, h/2 on it, 0 above (h = 1/N). The half-weight
/// diagonal makes V + V* equal h times the all-ones matrix exactly, so the
/// real part of <Vx, x> is (h/2)|sum x_j|^2 >= 0 at every N.
DiscretizedOperator build_volterra(int grid_n);

/// Exact matrix power. A VolterraPower(1) input becomes VolterraPower(n).
DiscretizedOperator operator_power(const DiscretizedOperator& op, int n);

inline constexpr double kSingularRcondThreshold = 1e-12;

/// (I + lambda*T)(I + mu*T)^{-1}, formed by solving linear systems against
/// I + lambda*T rather than inverting. Throws SingularPencilError when the
/// reciprocal-condition estimate of I + mu*T falls below the threshold.
ComplexMatrix moebius_transform(const ComplexMatrix& T, const MoebiusParams& p);

/// Deterministic complex Gaussian matrix, redrawn (bounded retries) until the
/// smallest singular value clears a dim-scaled floor and the condition number
/// stays within condition_cap.
ComplexMatrix random_invertible_matrix(int dim, std::uint64_t seed,
                                       double condition_cap = 1e6);

/// Samples f at the grid midpoints x_j = (j + 1/2)/N.
GridFunction sample_grid(int grid_n, const std::function<Complex(double)>& f);

}  // namespace mobius
