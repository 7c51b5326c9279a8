#pragma once

#include <vector>

#include "mobius/spectral.hpp"
#include "mobius/types.hpp"

namespace mobius {

/// One supporting-line sample of a numerical range: at direction angle theta,
/// `support` is the extent max Re(e^{-i theta} <Ax, x>) over unit x and
/// `point` an attained Rayleigh quotient on that supporting line. On a flat
/// boundary stretch the point is whichever extremal Rayleigh quotient the
/// eigensolver produced; predicates must rely on support values only.
struct BoundarySample {
    double theta = 0.0;
    double support = 0.0;
    Complex point;
};

struct NumericalRangeBoundary {
    std::vector<BoundarySample> samples;  // strictly increasing theta in [0, 2*pi)
    int source_dim = 0;
};

/// Samples the boundary of the numerical range by the rotation method: for
/// each angle the top eigenpair of the Hermitian part of e^{-i theta} A gives
/// the support value and a boundary point. Starts from `num_angles` equally
/// spaced angles and bisects angle gaps whose boundary points sit more than
/// ten median spacings apart (bounded refinement).
NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& a, int num_angles,
                                                const SpectralConfig& cfg = {});

/// Support function of the numerical range of A in direction z != 0:
/// sup over unit x of Re(z * conj(<Ax, x>)) = |z| * lambda_max(H(arg z)).
double support_function(const ComplexMatrix& a, Complex z, const SpectralConfig& cfg = {});

/// Support function of the closed right half-plane: 0 on the closed negative
/// real ray, +infinity everywhere else. The ray test is razor thin by
/// construction; z counts as "real <= 0" when |Im z| <= 1e-12 * max(|z|, 1)
/// and Re z < 0.
double halfplane_support(Complex z);

/// True iff w lies inside every sampled supporting half-plane, inflated by
/// `slack`.
bool hull_contains(const NumericalRangeBoundary& boundary, Complex w, double slack);

/// Consistency checks on a computed boundary: angles strictly increasing,
/// each point on its supporting line to 1e-9, and all points inside all
/// half-planes (convex position). Throws std::logic_error on violation.
void validate_boundary(const NumericalRangeBoundary& boundary);

}  // namespace mobius
