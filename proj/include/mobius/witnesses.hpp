#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mobius/quadrature.hpp"
#include "mobius/types.hpp"

namespace mobius {

enum class WitnessMethod { ClosedForm, Quadrature };

/// A witness Rayleigh quotient <g', g>/||g||^2 (or its n-th derivative
/// analog) exhibiting a prescribed value of the numerical range of the
/// inverse operator. `quotient` is the value produced by `method`;
/// `cross_check` carries the other route's value when both exist.
struct WitnessQuotient {
    std::string description;
    Complex quotient;
    WitnessMethod method = WitnessMethod::ClosedForm;
    std::optional<int> quadrature_n;
    std::optional<Complex> cross_check;
};

struct PositivityIdentity {
    double lhs = 0.0;  // Re of the h-weighted quadratic form <V_N f, f>
    double rhs = 0.0;  // (1/2) |h * sum f|^2
};

/// Discrete counterpart of "the real part of <V^{-1}g, g> with g = Vf equals
/// half the squared integral of f". With the half-weight-diagonal Volterra
/// matrix the two sides agree to roundoff at every grid size.
PositivityIdentity positivity_identity_check(const GridFunction& f);

/// Witness g_n(x) = exp(±2*pi*i*n*x) - 1: quotient ±i*pi*n, squared norm 2.
/// The closed form is cross-checked by composite quadrature (1e-6 at 4096
/// points). `sign` is +1 or -1.
WitnessQuotient witness_g_quotient(int n, int sign);

/// Witness h_n(x) = x^n: quotient n + 1/2 (= (1/2) / (1/(2n+1)) scaled).
WitnessQuotient witness_h_quotient(int n);

/// Witness g_r(x) = x^n exp(r e^{i theta} x) for n >= 2. The quotient
/// <g^{(n)}, g>/||g||^2 tends to r^n e^{i n theta} as r grows; evaluated by
/// quadrature of the derivative's binomial expansion,
///   sum_k C(n,k) (n!/k!) (r e^{i theta})^k * J_{n+k}(c) / J_{2n}(c),
/// where c = 2 r cos(theta) and J_m(c) = integral of x^m e^{c(x-1)}. The
/// common factor e^c is cancelled analytically before quadrature, which keeps
/// the evaluation stable up to the supported cap r <= 300 (std::range_error
/// beyond). Evaluated in function space, never through an inverted grid
/// matrix: inversion amplifies exactly the high-frequency content these
/// witnesses carry.
WitnessQuotient witness_gr_quotient(int n, double theta, double r,
                                    const QuadratureSpec& spec = {});

/// Ratios of integral of x^m e^{c x} to integral of e^{c x} for
/// c = 2 r cos(theta) along r_list. Each lies in (0, 1] and increases
/// toward 1 with r.
std::vector<double> asymptotic_ratio_check(int m, double theta,
                                           const std::vector<double>& r_list,
                                           const QuadratureSpec& spec = {});

}  // namespace mobius
