#pragma once

// Numerical holomorphy classification. A function H -> H is probed with
// central differences along the four real axes; the left-derivative chain
//   dF/dq = d0 F = -i d1 F = -j d2 F = -k d3 F
// holds exactly when F(q) = q a + b, and the mirrored chain (+i, +j, +k)
// holds exactly when F(q) = qbar a + b.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qhx/quaternion.hpp"

namespace qhx::holo {

struct EmptySampleSetError : std::invalid_argument {
    EmptySampleSetError() : std::invalid_argument("classification needs at least one sample point") {}
};

using QuatFn = std::function<Quat(const Quat&)>;

struct AffineFunction {
    Quat a, b;
    Quat operator()(const Quat& q) const { return q * a + b; }
};

struct DerivativeEstimates {
    // Candidate derivatives d0 F, -i d1 F, -j d2 F, -k d3 F.
    Quat d0, d1, d2, d3;
    // Symplectic components of F at the probe point.
    std::complex<double> e0, e1;
};

DerivativeEstimates left_derivative_fd(const QuatFn& f, const Quat& q, double h);

// Max pairwise distance of the four estimates, scaled by 1 + |F(q)|.
double left_chain_residual(const DerivativeEstimates& est);
// Same for the conjugate chain d0 F = +i d1 F = +j d2 F = +k d3 F.
double conjugate_chain_residual(const DerivativeEstimates& est);

enum class HoloClass { LeftHolomorphic, ConjugateLeftHolomorphic, Neither };

inline const char* to_string(HoloClass c) {
    switch (c) {
        case HoloClass::LeftHolomorphic: return "LeftHolomorphic";
        case HoloClass::ConjugateLeftHolomorphic: return "ConjugateLeftHolomorphic";
        case HoloClass::Neither: return "Neither";
    }
    return "?";
}

struct HolomorphyVerdict {
    HoloClass cls{};
    double max_residual = 0.0;
    Quat worst_point;
};

HolomorphyVerdict classify_holomorphy(const QuatFn& f, std::span<const Quat> sample_points,
                                      double h = 1e-5, double tol = 1e-6);

// Symplectic Cauchy-Riemann residual at one point:
//   max(|dz E0 - dzetabar conj(E1)|, |dzeta E0 + dzbar conj(E1)|),
// derivatives taken by central differences along the real axes.
double cr_residual(const QuatFn& f, const Quat& q, double h);

// Components uniform in [-2, 2], deterministic across platforms.
std::vector<Quat> default_sample_points(size_t n = 20, std::uint64_t seed = 0x5EED);

} // namespace qhx::holo
