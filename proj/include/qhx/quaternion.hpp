#pragma once

// Quaternion arithmetic over a pluggable scalar: double for numerics,
// Rational for exact table work. The symplectic view q = z + zeta*j
// (z = x0 + x1 i, zeta = x2 + x3 i) is the bridge to the 3x3 matrix group.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "qhx/rational.hpp"

namespace qhx {

struct ZeroQuaternionError : std::domain_error {
    ZeroQuaternionError() : std::domain_error("inverse of zero quaternion") {}
};
struct DegenerateTransformError : std::domain_error {
    DegenerateTransformError() : std::domain_error("degenerate quaternionic Moebius transform (Delta = 0)") {}
};
struct PoleAtPointError : std::domain_error {
    PoleAtPointError() : std::domain_error("quaternionic Moebius transform evaluated at its pole") {}
};

template <typename S> struct complex_of;
template <> struct complex_of<double> { using type = std::complex<double>; };
template <> struct complex_of<Rational> { using type = GaussRat; };
template <typename S> using complex_of_t = typename complex_of<S>::type;

inline std::complex<double> conj_of(const std::complex<double>& c) { return std::conj(c); }
inline GaussRat conj_of(const GaussRat& c) { return c.conj(); }

template <typename S>
struct Quaternion {
    S x0{}, x1{}, x2{}, x3{};

    constexpr Quaternion() = default;
    constexpr Quaternion(S a, S b, S c, S d) : x0(a), x1(b), x2(c), x3(d) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {S(1), S(0), S(0), S(0)}; }
    static constexpr Quaternion i() { return {S(0), S(1), S(0), S(0)}; }
    static constexpr Quaternion j() { return {S(0), S(0), S(1), S(0)}; }
    static constexpr Quaternion k() { return {S(0), S(0), S(0), S(1)}; }

    bool is_zero() const { return *this == zero(); }

    Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }
    Quaternion operator+(const Quaternion& o) const {
        return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3};
    }
    Quaternion operator-(const Quaternion& o) const { return *this + (-o); }

    // Hamilton product; ij = k, ji = -k.
    Quaternion operator*(const Quaternion& o) const {
        return {x0 * o.x0 - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
                x0 * o.x1 + x1 * o.x0 + x2 * o.x3 - x3 * o.x2,
                x0 * o.x2 - x1 * o.x3 + x2 * o.x0 + x3 * o.x1,
                x0 * o.x3 + x1 * o.x2 - x2 * o.x1 + x3 * o.x0};
    }

    Quaternion operator*(const S& s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

template <typename S> Quaternion<S> conjugate(const Quaternion<S>& q) {
    return {q.x0, -q.x1, -q.x2, -q.x3};
}

template <typename S> S norm_sq(const Quaternion<S>& q) {
    return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

inline double norm(const Quaternion<double>& q) { return std::sqrt(norm_sq(q)); }

template <typename S> S real_part(const Quaternion<S>& q) { return q.x0; }

template <typename S> Quaternion<S> inverse(const Quaternion<S>& q) {
    if (q.is_zero()) throw ZeroQuaternionError{};
    S n = norm_sq(q);
    Quaternion<S> c = conjugate(q);
    return {c.x0 / n, c.x1 / n, c.x2 / n, c.x3 / n};
}

template <typename S>
struct SymplecticPair {
    complex_of_t<S> z{}, zeta{};
    friend bool operator==(const SymplecticPair&, const SymplecticPair&) = default;
};

template <typename S> SymplecticPair<S> symplectic_split(const Quaternion<S>& q) {
    using C = complex_of_t<S>;
    return {C(q.x0, q.x1), C(q.x2, q.x3)};
}

template <typename S> Quaternion<S> from_symplectic(const SymplecticPair<S>& p) {
    if constexpr (std::is_same_v<S, double>) {
        return {p.z.real(), p.z.imag(), p.zeta.real(), p.zeta.imag()};
    } else {
        return {p.z.re, p.z.im, p.zeta.re, p.zeta.im};
    }
}

// (z + zeta j)(e0 + e1 j) = (e0 z - conj(e1) zeta) + (e1 z + conj(e0) zeta) j
template <typename S>
Quaternion<S> mul_symplectic(const Quaternion<S>& a, const Quaternion<S>& b) {
    auto pa = symplectic_split(a);
    auto pb = symplectic_split(b);
    SymplecticPair<S> out{pb.z * pa.z - conj_of(pb.zeta) * pa.zeta,
                          pb.zeta * pa.z + conj_of(pb.z) * pa.zeta};
    return from_symplectic(out);
}

// Delta = |a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re[a cbar d bbar]: the invertibility
// discriminant of the quaternionic Moebius map (a q + b)(c q + d)^-1.
template <typename S>
S mobius_delta(const Quaternion<S>& a, const Quaternion<S>& b, const Quaternion<S>& c,
               const Quaternion<S>& d) {
    S cross = real_part(a * conjugate(c) * d * conjugate(b));
    return norm_sq(a) * norm_sq(d) + norm_sq(b) * norm_sq(c) - (cross + cross);
}

template <typename S>
Quaternion<S> quat_mobius(const Quaternion<S>& a, const Quaternion<S>& b, const Quaternion<S>& c,
                          const Quaternion<S>& d, const Quaternion<S>& q) {
    S delta = mobius_delta(a, b, c, d);
    if constexpr (std::is_same_v<S, double>) {
        double scale = norm_sq(a) * norm_sq(d) + norm_sq(b) * norm_sq(c) + 1.0;
        if (std::abs(delta) < 1e-10 * scale) throw DegenerateTransformError{};
    } else {
        if (delta.is_zero()) throw DegenerateTransformError{};
    }
    Quaternion<S> den = c * q + d;
    if (den.is_zero()) throw PoleAtPointError{};
    return (a * q + b) * inverse(den);
}

inline std::string to_string(const Quaternion<double>& q) {
    auto piece = [](double v, const char* unit, std::string& out) {
        if (v == 0.0) return;
        std::string mag = std::to_string(std::abs(v));
        mag.erase(mag.find_last_not_of('0') + 1);
        if (!mag.empty() && mag.back() == '.') mag.pop_back();
        if (*unit != '\0' && mag == "1") mag.clear();
        if (out.empty())
            out += (v < 0 ? "-" : "") + mag + unit;
        else
            out += (v < 0 ? " - " : " + ") + mag + unit;
    };
    std::string out;
    piece(q.x0, "", out);
    piece(q.x1, "i", out);
    piece(q.x2, "j", out);
    piece(q.x3, "k", out);
    return out.empty() ? "0" : out;
}

using Quat = Quaternion<double>;
using QuatQ = Quaternion<Rational>;

} // namespace qhx
