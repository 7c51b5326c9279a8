#pragma once

#include <vector>

#include "mobius/types.hpp"

namespace mobius {

struct SpectralConfig {
    double power_iter_tol = 1e-12;  // relative change per iteration
    int power_iter_max = 10000;
    double eig_tol = 1e-11;  // residual tolerance, scaled by 1 + ||H||
};

/// Largest singular value by Krylov iteration on A*A (applied through
/// products with A and A^H only), run from a fixed deterministic start
/// vector and once more from a second fixed vector so an unlucky start
/// orthogonal to the top singular space cannot go unnoticed. The full
/// Krylov basis is kept: the plain single-vector iteration cannot resolve
/// the singular values of the transforms this toolkit studies, which
/// cluster toward the norm.
double spectral_norm(const ComplexMatrix& a, const SpectralConfig& cfg = {});

struct ExtremalEigenpair {
    double value = 0.0;
    ComplexVector vector;  // unit norm; any vector of the eigenspace when degenerate
};

/// Largest eigenvalue and an eigenvector of a Hermitian matrix, by Lanczos
/// with full reorthogonalization. The tridiagonal extremes are located by
/// Sturm-sequence bisection and the Ritz vector by inverse iteration, so no
/// dense eigendecomposition is involved; the dense solver stays a test-only
/// oracle. Rejects inputs with ||H - H*||_max > 1e-12.
ExtremalEigenpair hermitian_max_eig(const ComplexMatrix& h, const SpectralConfig& cfg = {});

/// exp(t*A) by scaling and squaring with a truncated series at scaled norm
/// <= 1/2. Accurate to ~1e-10 relative for ||t*A|| up to 50; inputs beyond
/// the supported range (Frobenius norm 400) raise std::range_error.
ComplexMatrix matrix_exponential(const ComplexMatrix& a, double t);

/// All eigenvalues. Exactly triangular inputs are read off the diagonal
/// (their eigenvalues are exact and a similarity-based solver would scatter
/// a high-multiplicity defective spectrum); everything else goes through a
/// dense Schur decomposition.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

}  // namespace mobius
