#include "qhx/crossratio.hpp"

#include <cmath>

namespace qhx::mobius {

namespace {

using C = std::complex<double>;

void require_nondegenerate(const MobiusParams& m) {
    double scale = std::abs(m.a) * std::abs(m.d) + std::abs(m.b) * std::abs(m.c) + 1.0;
    if (std::abs(m.a * m.d - m.b * m.c) < 1e-12 * scale) throw DegenerateParamsError{};
}

ExtendedComplex ratio(const C& num, const C& den) {
    if (den == C(0.0)) return ExtendedComplex::inf();
    return {num / den};
}

} // namespace

std::string ExtendedComplex::to_string() const {
    if (infinite) return "inf";
    std::string out = std::to_string(value.real());
    if (value.imag() != 0.0) {
        out += value.imag() < 0 ? " - " : " + ";
        out += std::to_string(std::abs(value.imag())) + "i";
    }
    return out;
}

ExtendedComplex mobius_apply(const MobiusParams& m, const ExtendedComplex& z) {
    require_nondegenerate(m);
    if (z.infinite) {
        if (m.c == C(0.0)) return ExtendedComplex::inf();
        return {m.a / m.c};
    }
    return ratio(m.a * z.value + m.b, m.c * z.value + m.d);
}

MobiusParams compose(const MobiusParams& m1, const MobiusParams& m2) {
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

namespace {

// Homogeneous coordinates: infinity is (1 : 0), a finite w is (w : 1).
// bracket(p, q) is the determinant |p q|, the projective difference p - q.
C bracket(const ExtendedComplex& p, const ExtendedComplex& q) {
    C pa = p.infinite ? C(1.0) : p.value, pb = p.infinite ? C(0.0) : C(1.0);
    C qa = q.infinite ? C(1.0) : q.value, qb = q.infinite ? C(0.0) : C(1.0);
    return pa * qb - qa * pb;
}

} // namespace

ExtendedComplex cross_ratio(const ExtendedComplex& z, const ExtendedComplex& z1,
                            const ExtendedComplex& z2, const ExtendedComplex& z3) {
    const ExtendedComplex pts[4] = {z, z1, z2, z3};
    int distinct = 0;
    for (int i = 0; i < 4; ++i) {
        bool seen = false;
        for (int j = 0; j < i; ++j) seen = seen || pts[i] == pts[j];
        distinct += !seen;
    }
    if (distinct < 3) throw TooManyCoincidencesError{};

    // With at least three distinct points the numerator and denominator
    // cannot both vanish, so the projective value is well defined.
    return ratio(bracket(z, z1) * bracket(z2, z3), bracket(z, z3) * bracket(z2, z1));
}

ExtendedComplex similarity_ratio(const ExtendedComplex& z, const ExtendedComplex& z1,
                                 const ExtendedComplex& z2) {
    if (z == z2) throw CoincidentPointsError{};
    if (z.infinite) return {1.0};
    if (z1.infinite) return ExtendedComplex::inf();
    if (z2.infinite) return {0.0};
    return ratio(z.value - z1.value, z.value - z2.value);
}

MobiusParams mobius_from_three_points(const ExtendedComplex& z1, const ExtendedComplex& z2,
                                      const ExtendedComplex& z3) {
    if (z1 == z2 || z1 == z3 || z2 == z3) throw CoincidentPointsError{};
    // At most one of the targets is infinite; put it where its factor drops out.
    if (z1.infinite) {
        // M(z) = (z3 z + (z2 - z3)) / z
        return {z3.value, z2.value - z3.value, 1.0, 0.0};
    }
    if (z2.infinite) {
        // M(z) = (z3 z - z1) / (z - 1)
        return {z3.value, -z1.value, 1.0, -1.0};
    }
    if (z3.infinite) {
        // M(z) = (z2 - z1) z + z1
        return {z2.value - z1.value, z1.value, 0.0, 1.0};
    }
    return {z3.value * (z2.value - z1.value), z1.value * (z3.value - z2.value),
            z2.value - z1.value, z3.value - z2.value};
}

} // namespace qhx::mobius
