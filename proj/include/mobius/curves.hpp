#pragma once

#include <vector>

#include "mobius/spectral.hpp"
#include "mobius/types.hpp"

namespace mobius {

/// The classical boundary of the numerical range of the integration
/// operator on L^2[0,1]: the arcs
///   t -> (1 - cos t)/t^2 +- i (t - sin t)/t^2,  t in [0, 2*pi],
/// closed on the left by the vertical segment from -i/(2*pi) to i/(2*pi).
struct ReferenceBoundary {
    std::vector<Complex> samples;    // upper arc, segment, lower arc (closed loop)
    std::vector<double> param_grid;  // t values used for each arc
};

/// Point on the reference arc. `branch` is +1 (upper) or -1 (lower). Near
/// t = 0 the formula loses every significant digit, so a 6-term series takes
/// over below t = 1e-3; the limit value is 1/2.
Complex wv_boundary_point(double t, int branch);

/// Builds the closed reference boundary with cosine-clustered arc sampling
/// (dense near t = 0 and t = 2*pi where the curvature concentrates).
ReferenceBoundary make_reference_boundary(int arc_samples = 2048);

/// max over reference samples of Re(e^{-i theta} w): the support value of the
/// reference region in direction theta.
double reference_support(const ReferenceBoundary& ref, double theta);

struct WvAngleDeviation {
    double theta = 0.0;
    double computed = 0.0;
    double reference = 0.0;
};

struct WvComparison {
    double max_deviation = 0.0;
    std::vector<WvAngleDeviation> per_angle;
};

/// Compares the computed support function of the discretized operator's
/// numerical range against the reference boundary over equally spaced
/// angles. Requires kind == VolterraPower with power 1.
WvComparison compare_wv(const DiscretizedOperator& op, int num_angles,
                        const SpectralConfig& cfg = {});

/// Height of the flat left edge of the computed numerical range: the largest
/// eigenvalue of the skew part (V - V*)/(2i) compressed to the orthogonal
/// complement of the all-ones vector. Points of the range on the imaginary
/// axis are exactly the Rayleigh quotients with zero-sum vectors (the real
/// part is (h/2)|sum x|^2), so this measures the upper end of the vertical
/// segment; it tends to 1/(2*pi).
double vertical_edge_extent(const DiscretizedOperator& op, const SpectralConfig& cfg = {});

}  // namespace mobius
