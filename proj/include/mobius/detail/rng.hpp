#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "mobius/types.hpp"

namespace mobius::detail {

// splitmix64 + Box-Muller. Used instead of <random> so that start vectors
// and generated test matrices are bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]; never exactly 0 so log() below is safe
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    // standard complex Gaussian: Re and Im each N(0, 1/2), E|z|^2 = 1
    Complex next_complex_gaussian() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double rad = std::sqrt(-std::log(u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

    ComplexVector next_unit_vector(Eigen::Index n) {
        ComplexVector v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = next_complex_gaussian();
        const double nrm = v.norm();
        if (nrm == 0.0) {  // astronomically unlikely; fall back to e_0
            v.setZero();
            v[0] = 1.0;
            return v;
        }
        return v / nrm;
    }

private:
    std::uint64_t state_;
};

}  // namespace mobius::detail
