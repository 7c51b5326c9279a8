#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mobius {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// The pair (lambda, mu) of the transform (I + lambda*T)(I + mu*T)^{-1}.
struct MoebiusParams {
    Complex lambda;
    Complex mu;

    bool degenerate() const { return lambda == mu; }
};

enum class OperatorKind { VolterraPower, Custom };

/// A dense matrix tagged with the grid it was discretized on.
/// For kind == VolterraPower, `power` holds the exponent n >= 1 and the
/// matrix equals the n-th power of the midpoint-collocation Volterra matrix.
struct DiscretizedOperator {
    ComplexMatrix matrix;
    int grid_n = 0;
    double step = 0.0;  // h = 1/grid_n
    OperatorKind kind = OperatorKind::Custom;
    int power = 0;      // meaningful for VolterraPower only
};

/// Samples of a function at the grid midpoints x_j = (j + 1/2) * h.
struct GridFunction {
    ComplexVector values;
    int grid_n = 0;
};

// --- error types -----------------------------------------------------------

/// I + mu*T (or another pencil) is numerically singular. Carries the
/// reciprocal-condition estimate that triggered the rejection.
class SingularPencilError : public std::runtime_error {
public:
    SingularPencilError(const std::string& what, double rcond)
        : std::runtime_error(what), rcond_estimate(rcond) {}
    double rcond_estimate;
};

/// An iterative kernel ran out of its iteration budget. Carries the last
/// iterate's value so callers can decide whether it is still usable.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last)
        : std::runtime_error(what), last_value(last) {}
    double last_value;
};

/// Random-matrix generation exhausted its retry budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// lambda == mu where the contraction machinery requires distinct parameters.
class DegenerateParamsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix-file parse failure; `line` is 1-based.
class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
    int line;
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace mobius
