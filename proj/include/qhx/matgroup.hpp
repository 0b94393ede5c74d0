#pragma once

// 3x3 matrix side of the story: the xhat / ghat algebra generators, the
// covering group reached through the exponential map, subgroup
// classification, and the action on (z, zeta, 1).

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

#include "qhx/algebra.hpp"
#include "qhx/quaternion.hpp"

namespace qhx::matgroup {

struct UnknownIndexError : std::out_of_range {
    explicit UnknownIndexError(const std::string& what) : std::out_of_range(what) {}
};
struct NotInXError : std::domain_error {
    NotInXError() : std::domain_error("matrix bottom row is not (0, 0, 1)") {}
};
struct SingularElementError : std::domain_error {
    SingularElementError() : std::domain_error("group element has singular upper block") {}
};
struct NotQhtFormError : std::domain_error {
    NotQhtFormError() : std::domain_error("matrix does not have the similarity-transform shape") {}
};

template <typename C>
struct Mat3T {
    std::array<std::array<C, 3>, 3> m{};

    static Mat3T zero() { return {}; }
    static Mat3T identity() {
        Mat3T out;
        out.m[0][0] = C(1);
        out.m[1][1] = C(1);
        out.m[2][2] = C(1);
        return out;
    }

    C& at(int r, int c) { return m[r][c]; }
    const C& at(int r, int c) const { return m[r][c]; }

    Mat3T operator+(const Mat3T& o) const {
        Mat3T out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.m[r][c] = m[r][c] + o.m[r][c];
        return out;
    }
    Mat3T operator-(const Mat3T& o) const {
        Mat3T out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.m[r][c] = m[r][c] - o.m[r][c];
        return out;
    }
    Mat3T operator*(const Mat3T& o) const {
        Mat3T out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                C acc{};
                for (int k = 0; k < 3; ++k) acc += m[r][k] * o.m[k][c];
                out.m[r][c] = acc;
            }
        return out;
    }
    Mat3T scaled(const C& s) const {
        Mat3T out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.m[r][c] = m[r][c] * s;
        return out;
    }

    friend bool operator==(const Mat3T&, const Mat3T&) = default;
};

using Mat3 = Mat3T<std::complex<double>>;
using Mat3G = Mat3T<GaussRat>;

Mat3 to_floating(const Mat3G& m);
double max_abs(const Mat3& m);

enum class MatCatalog { XHat, GHat };

// Exact generator matrices (1-based index).
Mat3G algebra_generator_exact(MatCatalog cat, int index);
Mat3 algebra_generator(MatCatalog cat, int index);

// [m_i, m_j] for i < j, expressed exactly in the generator basis.
std::map<std::pair<int, int>, symop::CoeffMap> matrix_commutator_table(MatCatalog cat);

// Diff of the matrix table against the same reference data the differential
// checker uses; the substitution x_k -> xhat_k (g_k -> ghat_k) is the claim
// under test.
symop::DiscrepancyReport verify_matrix_table(MatCatalog cat);

// Group element with bottom row pinned to (0, 0, 1):
//   [ a  b  t_z    ]
//   [ c  d  t_zeta ]
//   [ 0  0  1      ]
struct GroupElement {
    std::complex<double> a{1.0}, b{}, c{}, d{1.0};
    std::complex<double> t_z{}, t_zeta{};

    static GroupElement identity() { return {}; }

    Mat3 to_mat3() const;
    // Requires a (0,0,1) bottom row within tol.
    static GroupElement from_mat3(const Mat3& m, double tol = 1e-9);

    std::complex<double> block_det() const { return a * d - b * c; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// exp(t x_i): affine in t for the nilpotent generators, 1 + (1 - e^-t) x_i
// for the diagonal ones.
GroupElement exp_generator(int index, double t);

// Scaling-and-squaring matrix exponential; oracle for exp_generator.
Mat3 exp_series(const Mat3& m, double tol = 1e-15);

struct SubgroupClassification {
    bool general_x = false;
    bool moebius = false;
    bool heisenberg = false;
    bool heisenberg_tilde = false;
    bool qht = false;
    bool unimodular = false;
};

// Entrywise shape tests at the given tolerance. Throws NotInXError when the
// bottom row is not (0, 0, 1).
SubgroupClassification classify(const Mat3& m, double tol = 1e-9);

SymplecticPair<double> act(const GroupElement& g, const SymplecticPair<double>& v);
Quat m_map(const SymplecticPair<double>& v);

GroupElement compose(const GroupElement& m1, const GroupElement& m2);
GroupElement invert(const GroupElement& m);

// G(q) = q u + v as a matrix: u = a + b j fills the block, v the t column.
GroupElement from_qht(const Quat& u, const Quat& v);
std::pair<Quat, Quat> to_qht(const GroupElement& m, double tol = 1e-9);

} // namespace qhx::matgroup
