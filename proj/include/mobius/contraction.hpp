#pragma once

#include <optional>
#include <vector>

#include "mobius/spectral.hpp"
#include "mobius/types.hpp"

namespace mobius {

enum class Classification { Contraction, Boundary, NonContraction };

/// Result of running the three equivalent contraction tests on one (T, p).
///
/// The tests are linked by the chain
///   ||(I+lambda T)(I+mu T)^{-1}|| <= 1
///     <=>  lambda_max((I+lambda T)*(I+lambda T) - (I+mu T)*(I+mu T)) <= 0
///     <=>  2 h_{W(T^{-1})}(lambda - mu) <= |mu|^2 - |lambda|^2,
/// which is exact on finite invertible matrices, so disagreement outside the
/// tolerance band indicates a kernel bug, not mathematics.
struct ContractionReport {
    MoebiusParams params;
    double direct_norm = 0.0;
    double quad_gap = 0.0;
    std::optional<double> support_lhs;  // absent when T singular or lambda == mu
    std::optional<double> support_rhs;
    Classification classification = Classification::Boundary;
    double tolerance_band = 0.0;
    // pairwise sign agreement (set when both members are available)
    std::optional<bool> agree_direct_quad;
    std::optional<bool> agree_direct_support;
    std::optional<bool> agree_quad_support;
};

/// ||(I + lambda T)(I + mu T)^{-1}||. lambda == mu short-circuits to exactly
/// 1 (the transform is the identity).
double direct_norm_test(const ComplexMatrix& t, const MoebiusParams& p,
                        const SpectralConfig& cfg = {});

/// Largest eigenvalue of (I+lambda T)*(I+lambda T) - (I+mu T)*(I+mu T).
/// Contraction iff <= 0. Works even when I + mu T is singular.
double quadratic_gap_test(const ComplexMatrix& t, const MoebiusParams& p,
                          const SpectralConfig& cfg = {});

struct SupportTestResult {
    double lhs = 0.0;  // 2 * h_{W(T^{-1})}(lambda - mu)
    double rhs = 0.0;  // |mu|^2 - |lambda|^2
    bool holds = false;
};

/// The support-function inequality on W(T^{-1}). Requires invertible T and
/// distinct parameters (lambda == mu raises DegenerateParamsError; the norm
/// is exactly 1 there and no inequality is consulted).
SupportTestResult support_inequality_test(const ComplexMatrix& t, const MoebiusParams& p,
                                          const SpectralConfig& cfg = {});

/// Closed-form contraction predicate for the Volterra operator: true iff
/// Re mu > 0 and lambda lies on the half-open segment from -conj(mu)
/// (included) to mu (excluded). Evaluated through two algebraically
/// equivalent routes (segment parametrization, and "lambda - mu real <= 0
/// and |lambda| <= |mu|") with an internal cross-assertion.
bool volterra_contraction_oracle(const MoebiusParams& p);

/// Runs all three tests and classifies against the tolerance band.
ContractionReport contraction_report(const ComplexMatrix& t, const MoebiusParams& p,
                                     const SpectralConfig& cfg = {}, double band = 1e-2);

struct Window {
    double x0 = -1.5, x1 = 1.5, y0 = -1.5, y1 = 1.5;
};

enum class CellStatus { Ok, SingularPencil };

struct RegionCell {
    Complex lambda;
    double norm = 0.0;  // meaningful when status == Ok
    Classification classification = Classification::Boundary;
    CellStatus status = CellStatus::Ok;
};

struct RegionScan {
    Complex mu;
    Window window;
    int nx = 0, ny = 0;
    double band = 0.0;
    std::vector<RegionCell> cells;  // row-major, x fastest
};

/// Classifies the direct norm on an inclusive (nx x ny) lambda grid. The
/// factor (I + mu T)^{-1} is shared across cells; lambda == mu cells (exact
/// bit equality of the grid value) short-circuit to norm 1. Singular pencils
/// mark cells, never abort the scan.
RegionScan region_scan(const ComplexMatrix& t, Complex mu, const Window& window,
                       int nx, int ny, const SpectralConfig& cfg = {}, double band = 1e-2);

/// Classification band calibrated from the discretization drift of the
/// Volterra family at the reference point lambda = 0, mu = 1:
/// 5 * |norm_N - norm_2N|.
double volterra_boundary_band(int grid_n, const SpectralConfig& cfg = {});

struct LumerPhillipsResult {
    bool semigroup_contractive = false;  // max_t ||exp(-tT)|| <= 1 + 1e-9
    bool halfplane = false;              // h_{W(T)}(-1) <= 1e-9
    bool agree = false;
};

/// Cross-check of the two equivalent statements "the semigroup exp(-tT) is
/// contractive" and "W(T) lies in the closed right half-plane".
LumerPhillipsResult lumer_phillips_check(const ComplexMatrix& t,
                                         const std::vector<double>& t_samples,
                                         const SpectralConfig& cfg = {});

}  // namespace mobius
