#include "mobius/witnesses.hpp"

#include <cmath>
#include <numbers>

#include "mobius/operators.hpp"

namespace mobius {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGrRadiusCap = 300.0;

std::string format_id(const char* prefix, int n, const char* suffix = "") {
    return std::string(prefix) + std::to_string(n) + suffix;
}

double binomial(int n, int k) {
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc *= static_cast<double>(n - k + i) / i;
    return acc;
}

double falling_factorial(int n, int k) {  // n! / k! for k <= n
    double acc = 1.0;
    for (int i = k + 1; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace

PositivityIdentity positivity_identity_check(const GridFunction& f) {
    require(f.grid_n >= 1 && f.values.size() == f.grid_n,
            "positivity_identity_check: malformed grid function");
    const DiscretizedOperator v = build_volterra(f.grid_n);
    const double h = v.step;

    PositivityIdentity id;
    // h-weighted form: the plain Euclidean value would carry a stray 1/h
    id.lhs = h * std::real(f.values.dot(v.matrix * f.values));
    id.rhs = 0.5 * std::norm(h * f.values.sum());
    return id;
}

WitnessQuotient witness_g_quotient(int n, int sign) {
    require(n >= 1, "witness_g_quotient: n must be >= 1");
    require(sign == 1 || sign == -1, "witness_g_quotient: sign must be +1 or -1");

    const double omega = sign * kTwoPi * n;  // g(x) = e^{i omega x} - 1
    const QuadratureSpec spec{16, 256};      // 4096 nodes
    const Complex numer = integrate(
        [omega](double x) {
            const Complex g = std::polar(1.0, omega * x) - 1.0;
            const Complex dg = Complex(0.0, omega) * std::polar(1.0, omega * x);
            return dg * std::conj(g);
        },
        0.0, 1.0, spec);
    const double denom = integrate(
        [omega](double x) { return std::norm(std::polar(1.0, omega * x) - 1.0); }, 0.0,
        1.0, spec);

    WitnessQuotient w;
    w.description = format_id("g", n, sign > 0 ? "+" : "-");
    w.quotient = Complex(0.0, sign * std::numbers::pi * n);  // (±2*pi*i*n) / 2
    w.method = WitnessMethod::ClosedForm;
    w.quadrature_n = spec.order * spec.panels;
    w.cross_check = numer / denom;
    return w;
}

WitnessQuotient witness_h_quotient(int n) {
    require(n >= 1, "witness_h_quotient: n must be >= 1");
    const QuadratureSpec spec{16, 256};
    const double numer = integrate(
        [n](double x) { return n * std::pow(x, 2 * n - 1); }, 0.0, 1.0, spec);
    const double denom =
        integrate([n](double x) { return std::pow(x, 2 * n); }, 0.0, 1.0, spec);

    WitnessQuotient w;
    w.description = format_id("h", n);
    w.quotient = Complex(n + 0.5, 0.0);  // (1/2) / (1/(2n+1))
    w.method = WitnessMethod::ClosedForm;
    w.quadrature_n = spec.order * spec.panels;
    w.cross_check = Complex(numer / denom, 0.0);
    return w;
}

WitnessQuotient witness_gr_quotient(int n, double theta, double r,
                                    const QuadratureSpec& spec) {
    require(n >= 2, "witness_gr_quotient: n must be >= 2");
    require(theta > -std::numbers::pi / 2 && theta < std::numbers::pi / 2,
            "witness_gr_quotient: theta must lie in (-pi/2, pi/2)");
    require(r > 0.0, "witness_gr_quotient: r must be positive");
    if (!(r <= kGrRadiusCap))
        throw std::range_error(
            "witness_gr_quotient: r beyond the stable quadrature cap (" +
            std::to_string(kGrRadiusCap) + "); rescale or extend the log-shifted path");

    const double c = 2.0 * r * std::cos(theta);
    const Complex s = std::polar(r, theta);

    Complex numer(0.0, 0.0);
    Complex s_pow(1.0, 0.0);
    for (int k = 0; k <= n; ++k) {
        numer += binomial(n, k) * falling_factorial(n, k) * s_pow *
                 shifted_moment_integral(n + k, c, spec);
        s_pow *= s;
    }
    const double denom = shifted_moment_integral(2 * n, c, spec);

    WitnessQuotient w;
    // keep the id free of commas so CSV rows stay one field per column
    w.description = "gr(n=" + std::to_string(n) + ";theta=" + std::to_string(theta) +
                    ";r=" + std::to_string(r) + ")";
    w.quotient = numer / denom;
    w.method = WitnessMethod::Quadrature;
    w.quadrature_n = spec.order * spec.panels;
    return w;
}

std::vector<double> asymptotic_ratio_check(int m, double theta,
                                           const std::vector<double>& r_list,
                                           const QuadratureSpec& spec) {
    require(m >= 0, "asymptotic_ratio_check: m must be >= 0");
    require(std::cos(theta) > 0.0, "asymptotic_ratio_check: cos(theta) must be positive");

    std::vector<double> ratios;
    ratios.reserve(r_list.size());
    for (double r : r_list) {
        require(r > 0.0, "asymptotic_ratio_check: r must be positive");
        if (!(r <= kGrRadiusCap))
            throw std::range_error("asymptotic_ratio_check: r beyond the stable cap");
        const double c = 2.0 * r * std::cos(theta);
        ratios.push_back(shifted_moment_integral(m, c, spec) /
                         shifted_moment_integral(0, c, spec));
    }
    return ratios;
}

}  // namespace mobius
