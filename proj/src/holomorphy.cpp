#include "qhx/holomorphy.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace qhx::holo {

namespace {

// Central difference of f along real axis u (0..3).
Quat axis_derivative(const QuatFn& f, const Quat& q, int axis, double h) {
    Quat e;
    switch (axis) {
        case 0: e = Quat::one(); break;
        case 1: e = Quat::i(); break;
        case 2: e = Quat::j(); break;
        default: e = Quat::k(); break;
    }
    Quat hi = f(q + e * h);
    Quat lo = f(q - e * h);
    return (hi - lo) * (1.0 / (2.0 * h));
}

double max_pairwise_distance(const std::array<Quat, 4>& qs) {
    double best = 0.0;
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t j = i + 1; j < qs.size(); ++j)
            best = std::max(best, norm(qs[i] - qs[j]));
    return best;
}

} // namespace

DerivativeEstimates left_derivative_fd(const QuatFn& f, const Quat& q, double h) {
    Quat p0 = axis_derivative(f, q, 0, h);
    Quat p1 = axis_derivative(f, q, 1, h);
    Quat p2 = axis_derivative(f, q, 2, h);
    Quat p3 = axis_derivative(f, q, 3, h);
    DerivativeEstimates est;
    est.d0 = p0;
    est.d1 = -Quat::i() * p1;
    est.d2 = -Quat::j() * p2;
    est.d3 = -Quat::k() * p3;
    auto s = symplectic_split(f(q));
    est.e0 = s.z;
    est.e1 = s.zeta;
    return est;
}

double left_chain_residual(const DerivativeEstimates& est) {
    double scale = 1.0 + std::sqrt(std::norm(est.e0) + std::norm(est.e1));
    return max_pairwise_distance({est.d0, est.d1, est.d2, est.d3}) / scale;
}

double conjugate_chain_residual(const DerivativeEstimates& est) {
    double scale = 1.0 + std::sqrt(std::norm(est.e0) + std::norm(est.e1));
    // +i d1 F = -(-i d1 F), and likewise for j, k.
    return max_pairwise_distance({est.d0, -est.d1, -est.d2, -est.d3}) / scale;
}

HolomorphyVerdict classify_holomorphy(const QuatFn& f, std::span<const Quat> sample_points,
                                      double h, double tol) {
    if (sample_points.empty()) throw EmptySampleSetError{};
    double worst_left = 0.0, worst_conj = 0.0;
    Quat worst_left_pt = sample_points[0], worst_conj_pt = sample_points[0];
    for (const Quat& q : sample_points) {
        auto est = left_derivative_fd(f, q, h);
        double rl = left_chain_residual(est);
        double rc = conjugate_chain_residual(est);
        if (rl > worst_left) { worst_left = rl; worst_left_pt = q; }
        if (rc > worst_conj) { worst_conj = rc; worst_conj_pt = q; }
    }
    if (worst_left <= tol) return {HoloClass::LeftHolomorphic, worst_left, worst_left_pt};
    if (worst_conj <= tol)
        return {HoloClass::ConjugateLeftHolomorphic, worst_conj, worst_conj_pt};
    // Report the chain that came closer to passing.
    if (worst_left <= worst_conj) return {HoloClass::Neither, worst_left, worst_left_pt};
    return {HoloClass::Neither, worst_conj, worst_conj_pt};
}

double cr_residual(const QuatFn& f, const Quat& q, double h) {
    using C = std::complex<double>;
    std::array<C, 4> de0, de1;
    for (int axis = 0; axis < 4; ++axis) {
        Quat pd = axis_derivative(f, q, axis, h);
        auto s = symplectic_split(pd);
        de0[axis] = s.z;
        de1[axis] = s.zeta;
    }
    const C i(0.0, 1.0);
    C dz_e0 = de0[0] - i * de0[1];
    C dzeta_e0 = de0[2] - i * de0[3];
    C dzbar_e1c = std::conj(de1[0]) + i * std::conj(de1[1]);
    C dzetabar_e1c = std::conj(de1[2]) + i * std::conj(de1[3]);
    return std::max(std::abs(dz_e0 - dzetabar_e1c), std::abs(dzeta_e0 + dzbar_e1c));
}

std::vector<Quat> default_sample_points(size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    auto draw = [&eng] {
        // 53 uniform bits -> [0, 1) -> [-2, 2); avoids the library
        // distributions, whose output is implementation-defined.
        double u = static_cast<double>(eng() >> 11) * 0x1p-53;
        return 4.0 * u - 2.0;
    };
    std::vector<Quat> pts;
    pts.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        double a = draw(), b = draw(), c = draw(), d = draw();
        pts.push_back({a, b, c, d});
    }
    return pts;
}

} // namespace qhx::holo
