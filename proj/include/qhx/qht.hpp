#pragma once

// The similarity transform G(q) = q u + v as a first-class value: group
// operations, fixed-point analysis, rotation/dilation split, and the
// right-ordered three-point ratio it leaves invariant.

#include <optional>
#include <stdexcept>
#include <type_traits>

#include "qhx/quaternion.hpp"

namespace qhx {

struct NonInvertibleError : std::domain_error {
    NonInvertibleError() : std::domain_error("transform with u = 0 is constant, not invertible") {}
};
struct CoincidentPointsError : std::domain_error {
    CoincidentPointsError() : std::domain_error("ratio undefined: q coincides with q2") {}
};

template <typename S>
struct QhtTransform {
    Quaternion<S> u = Quaternion<S>::one();
    Quaternion<S> v{};

    static QhtTransform identity() { return {}; }
    friend bool operator==(const QhtTransform&, const QhtTransform&) = default;
};

template <typename S>
Quaternion<S> apply(const QhtTransform<S>& t, const Quaternion<S>& q) {
    return q * t.u + t.v;
}

// apply(compose(t2, t1), q) == apply(t2, apply(t1, q)): (q u1 + v1) u2 + v2.
template <typename S>
QhtTransform<S> compose(const QhtTransform<S>& t2, const QhtTransform<S>& t1) {
    return {t1.u * t2.u, t1.v * t2.u + t2.v};
}

template <typename S>
QhtTransform<S> inverse(const QhtTransform<S>& t) {
    if (t.u.is_zero()) throw NonInvertibleError{};
    Quaternion<S> ui = inverse(t.u);
    return {ui, -(t.v * ui)};
}

enum class FixedPointKind { AllPoints, InfinityOnly, FiniteAndInfinity };

inline const char* to_string(FixedPointKind k) {
    switch (k) {
        case FixedPointKind::AllPoints: return "AllPoints";
        case FixedPointKind::InfinityOnly: return "InfinityOnly";
        case FixedPointKind::FiniteAndInfinity: return "FiniteAndInfinity";
    }
    return "?";
}

template <typename S>
struct FixedPointResult {
    FixedPointKind kind{};
    std::optional<Quaternion<S>> finite_point;
};

// Solving q = q u + v: u = 1 leaves either everything (v = 0) or nothing
// finite fixed; otherwise the unique finite fixed point is v (1 - u)^-1,
// with infinity always fixed.
template <typename S>
FixedPointResult<S> fixed_points(const QhtTransform<S>& t, double tol = 1e-12) {
    bool u_is_one, v_is_zero;
    if constexpr (std::is_same_v<S, double>) {
        u_is_one = norm(t.u - Quaternion<S>::one()) <= tol;
        v_is_zero = norm(t.v) <= tol;
    } else {
        u_is_one = t.u == Quaternion<S>::one();
        v_is_zero = t.v.is_zero();
    }
    if (u_is_one) {
        if (v_is_zero) return {FixedPointKind::AllPoints, std::nullopt};
        return {FixedPointKind::InfinityOnly, std::nullopt};
    }
    Quaternion<S> p = t.v * inverse(Quaternion<S>::one() - t.u);
    return {FixedPointKind::FiniteAndInfinity, p};
}

struct SimilarityDecomposition {
    Quat rotation;      // unit norm
    double dilation;    // > 0
    Quat translation;
};

inline SimilarityDecomposition decompose(const QhtTransform<double>& t) {
    if (t.u.is_zero()) throw NonInvertibleError{};
    double d = norm(t.u);
    return {t.u * (1.0 / d), d, t.v};
}

// (q - q1)(q - q2)^-1, inverse on the right. This ordering is invariant
// under every invertible transform; the left ordering is not.
template <typename S>
Quaternion<S> three_point_ratio(const Quaternion<S>& q, const Quaternion<S>& q1,
                                const Quaternion<S>& q2) {
    if (q == q2) throw CoincidentPointsError{};
    return (q - q1) * inverse(q - q2);
}

// apply(t, q) - apply(t, q1); equals (q - q1) u, the translation cancels.
template <typename S>
Quaternion<S> difference_factor(const QhtTransform<S>& t, const Quaternion<S>& q,
                                const Quaternion<S>& q1) {
    return apply(t, q) - apply(t, q1);
}

} // namespace qhx
