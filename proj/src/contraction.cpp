#include "mobius/contraction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mobius/geometry.hpp"
#include "mobius/operators.hpp"

namespace mobius {

namespace {

Classification classify_norm(double norm, double band) {
    if (norm > 1.0 + band) return Classification::NonContraction;
    if (norm < 1.0 - band) return Classification::Contraction;
    return Classification::Boundary;
}

}  // namespace

double direct_norm_test(const ComplexMatrix& t, const MoebiusParams& p,
                        const SpectralConfig& cfg) {
    if (p.degenerate()) return 1.0;
    return spectral_norm(moebius_transform(t, p), cfg);
}

double quadratic_gap_test(const ComplexMatrix& t, const MoebiusParams& p,
                          const SpectralConfig& cfg) {
    require(t.rows() == t.cols() && t.rows() >= 1, "quadratic_gap_test: square matrix required");
    if (p.degenerate()) return 0.0;  // the gap matrix is identically zero
    const Complex d = p.lambda - p.mu;
    const double weight = std::norm(p.lambda) - std::norm(p.mu);
    // (I+lambda T)*(I+lambda T) - (I+mu T)*(I+mu T)
    //   = (lambda-mu) T + conj(lambda-mu) T* + (|lambda|^2 - |mu|^2) T*T
    ComplexMatrix gap = d * t;
    gap += gap.adjoint().eval();
    gap += weight * (t.adjoint() * t);
    gap = 0.5 * (gap + gap.adjoint()).eval();  // kill roundoff asymmetry
    return hermitian_max_eig(gap, cfg).value;
}

SupportTestResult support_inequality_test(const ComplexMatrix& t, const MoebiusParams& p,
                                          const SpectralConfig& cfg) {
    require(t.rows() == t.cols() && t.rows() >= 1,
            "support_inequality_test: square matrix required");
    if (p.degenerate())
        throw DegenerateParamsError(
            "support_inequality_test: lambda == mu (norm is exactly 1; no inequality applies)");

    Eigen::PartialPivLU<ComplexMatrix> lu(t);
    const double rcond = lu.rcond();
    if (!(rcond >= kSingularRcondThreshold))
        throw std::invalid_argument("support_inequality_test: T numerically singular (rcond " +
                                    std::to_string(rcond) + ")");
    const ComplexMatrix t_inv = lu.solve(ComplexMatrix::Identity(t.rows(), t.cols()));

    SupportTestResult result;
    result.lhs = 2.0 * support_function(t_inv, p.lambda - p.mu, cfg);
    result.rhs = std::norm(p.mu) - std::norm(p.lambda);
    result.holds = result.lhs <= result.rhs + 1e-9;
    return result;
}

bool volterra_contraction_oracle(const MoebiusParams& p) {
    if (p.degenerate())
        throw DegenerateParamsError("volterra_contraction_oracle: lambda == mu");

    // route 1: segment parametrization. lambda = -(1-t)*conj(mu) + t*mu for
    // t in [0,1) forces Im lambda == Im mu and Re lambda in [-Re mu, Re mu).
    const bool by_segment = p.mu.real() > 0.0 && p.lambda.imag() == p.mu.imag() &&
                            p.lambda.real() >= -p.mu.real() && p.lambda.real() < p.mu.real();

    // route 2: lambda - mu on the closed negative real ray and |lambda| <= |mu|
    const Complex d = p.lambda - p.mu;
    const bool by_ray = d.imag() == 0.0 && d.real() <= 0.0 && std::abs(p.lambda) <= std::abs(p.mu);

    if (by_segment != by_ray)
        throw std::logic_error("volterra_contraction_oracle: internal route disagreement");
    return by_segment;
}

ContractionReport contraction_report(const ComplexMatrix& t, const MoebiusParams& p,
                                     const SpectralConfig& cfg, double band) {
    ContractionReport report;
    report.params = p;
    report.tolerance_band = band;
    report.direct_norm = direct_norm_test(t, p, cfg);
    report.quad_gap = p.degenerate() ? 0.0 : quadratic_gap_test(t, p, cfg);
    report.classification = classify_norm(report.direct_norm, band);

    if (!p.degenerate()) {
        try {
            const SupportTestResult s = support_inequality_test(t, p, cfg);
            report.support_lhs = s.lhs;
            report.support_rhs = s.rhs;
        } catch (const std::invalid_argument&) {
            // singular T: the support route has no finite-matrix meaning here
        }
    }

    const bool direct_contr = report.direct_norm <= 1.0;
    const bool quad_contr = report.quad_gap <= 0.0;
    report.agree_direct_quad = (direct_contr == quad_contr);
    if (report.support_lhs) {
        const bool support_contr = *report.support_lhs <= *report.support_rhs + 1e-9;
        report.agree_direct_support = (direct_contr == support_contr);
        report.agree_quad_support = (quad_contr == support_contr);
    }
    return report;
}

RegionScan region_scan(const ComplexMatrix& t, Complex mu, const Window& window,
                       int nx, int ny, const SpectralConfig& cfg, double band) {
    require(t.rows() == t.cols() && t.rows() >= 1, "region_scan: square matrix required");
    require(nx >= 2 && ny >= 2, "region_scan: resolution must be >= 2 per axis");
    require(window.x1 > window.x0 && window.y1 > window.y0, "region_scan: empty window");

    RegionScan scan;
    scan.mu = mu;
    scan.window = window;
    scan.nx = nx;
    scan.ny = ny;
    scan.band = band;
    scan.cells.reserve(static_cast<std::size_t>(nx) * ny);

    const auto dim = t.rows();
    const ComplexMatrix ident = ComplexMatrix::Identity(dim, dim);
    Eigen::PartialPivLU<ComplexMatrix> lu(ident + mu * t);
    const bool pencil_ok = lu.rcond() >= kSingularRcondThreshold;

    ComplexMatrix denom_inv, t_denom_inv;
    if (pencil_ok) {
        denom_inv = lu.solve(ident);
        t_denom_inv = t * denom_inv;  // M(lambda) = denom_inv + lambda * (T denom_inv)
    }

    const double dx = (window.x1 - window.x0) / (nx - 1);
    const double dy = (window.y1 - window.y0) / (ny - 1);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Complex lambda(window.x0 + ix * dx, window.y0 + iy * dy);
            RegionCell cell;
            cell.lambda = lambda;
            if (lambda == mu) {
                cell.norm = 1.0;
                cell.classification = Classification::Boundary;
            } else if (!pencil_ok) {
                cell.status = CellStatus::SingularPencil;
            } else {
                const ComplexMatrix m = denom_inv + lambda * t_denom_inv;
                cell.norm = spectral_norm(m, cfg);
                cell.classification = classify_norm(cell.norm, band);
            }
            scan.cells.push_back(cell);
        }
    }
    return scan;
}

double volterra_boundary_band(int grid_n, const SpectralConfig& cfg) {
    require(grid_n >= 1, "volterra_boundary_band: grid size must be >= 1");
    const MoebiusParams reference{Complex(0.0, 0.0), Complex(1.0, 0.0)};
    const double norm_n = direct_norm_test(build_volterra(grid_n).matrix, reference, cfg);
    const double norm_2n = direct_norm_test(build_volterra(2 * grid_n).matrix, reference, cfg);
    return 5.0 * std::abs(norm_n - norm_2n);
}

LumerPhillipsResult lumer_phillips_check(const ComplexMatrix& t,
                                         const std::vector<double>& t_samples,
                                         const SpectralConfig& cfg) {
    require(!t_samples.empty(), "lumer_phillips_check: need at least one time sample");
    for (double ts : t_samples) require(ts > 0.0, "lumer_phillips_check: times must be positive");

    double max_norm = 0.0;
    const ComplexMatrix neg = -t;
    for (double ts : t_samples)
        max_norm = std::max(max_norm, spectral_norm(matrix_exponential(neg, ts), cfg));

    LumerPhillipsResult result;
    result.semigroup_contractive = max_norm <= 1.0 + 1e-9;
    result.halfplane = support_function(t, Complex(-1.0, 0.0), cfg) <= 1e-9;
    result.agree = (result.semigroup_contractive == result.halfplane);
    return result;
}

}  // namespace mobius
