#pragma once

// Complex Moebius utilities on the extended plane: the four-point
// cross-ratio, the similarity three-point ratio, and the standard-triple
// construction. Infinity is a tagged value, never a large-number stand-in.

#include <complex>
#include <stdexcept>
#include <string>

namespace qhx::mobius {

struct DegenerateParamsError : std::domain_error {
    DegenerateParamsError() : std::domain_error("Moebius parameters with ad - bc = 0") {}
};
struct CoincidentPointsError : std::domain_error {
    CoincidentPointsError() : std::domain_error("similarity ratio undefined: z coincides with z2") {}
};
struct TooManyCoincidencesError : std::domain_error {
    TooManyCoincidencesError()
        : std::domain_error("cross-ratio needs at least three distinct points") {}
};

struct ExtendedComplex {
    bool infinite = false;
    std::complex<double> value{};

    ExtendedComplex() = default;
    ExtendedComplex(std::complex<double> v) : value(v) {}
    ExtendedComplex(double v) : value(v) {}

    static ExtendedComplex inf() {
        ExtendedComplex e;
        e.infinite = true;
        return e;
    }

    bool is_finite() const { return !infinite; }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }

    std::string to_string() const;
};

struct MobiusParams {
    std::complex<double> a{1.0}, b{}, c{}, d{1.0};
};

// z -> (a z + b) / (c z + d) with the usual conventions at infinity and at
// the pole. Throws DegenerateParamsError when ad - bc vanishes (relative to
// the coefficient scale).
ExtendedComplex mobius_apply(const MobiusParams& m, const ExtendedComplex& z);

// 2x2 parameter product; mobius_apply(compose(m1, m2), z) applies m2 first.
MobiusParams compose(const MobiusParams& m1, const MobiusParams& m2);

// (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)), Moebius invariant. Evaluated
// through homogeneous coordinates, so any arrangement of infinities with at
// least three distinct points gets its exact projective value.
ExtendedComplex cross_ratio(const ExtendedComplex& z, const ExtendedComplex& z1,
                            const ExtendedComplex& z2, const ExtendedComplex& z3);

// (z - z1) / (z - z2), invariant under z -> a z + b only.
ExtendedComplex similarity_ratio(const ExtendedComplex& z, const ExtendedComplex& z1,
                                 const ExtendedComplex& z2);

// The unique map with M(0) = z1, M(1) = z2, M(inf) = z3.
MobiusParams mobius_from_three_points(const ExtendedComplex& z1, const ExtendedComplex& z2,
                                      const ExtendedComplex& z3);

} // namespace qhx::mobius
