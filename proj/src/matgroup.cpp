#include "qhx/matgroup.hpp"

#include <cmath>

namespace qhx::matgroup {

namespace {

GaussRat gr(long long re, long long im = 0) { return {Rational(re), Rational(im)}; }

// Elementary matrix with a single nonzero entry (0-based row/col).
Mat3G elem(int r, int c, GaussRat v) {
    Mat3G out;
    out.at(r, c) = v;
    return out;
}

GVec flatten(const Mat3G& m) {
    GVec v;
    v.reserve(9);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) v.push_back(m.at(r, c));
    return v;
}

} // namespace

Mat3 to_floating(const Mat3G& m) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out.at(r, c) = {m.at(r, c).re.to_double(), m.at(r, c).im.to_double()};
    return out;
}

double max_abs(const Mat3& m) {
    double best = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) best = std::max(best, std::abs(m.at(r, c)));
    return best;
}

Mat3G algebra_generator_exact(MatCatalog cat, int index) {
    if (index < 1 || index > 6)
        throw UnknownIndexError("matrix catalog: no generator with index " +
                                std::to_string(index));
    if (cat == MatCatalog::XHat) {
        switch (index) {
            case 1: return elem(0, 2, gr(1));
            case 2: return elem(0, 0, gr(-1));
            case 3: return elem(0, 1, gr(1));
            case 4: return elem(1, 2, gr(-1));
            case 5: return elem(1, 1, gr(-1));
            case 6: return elem(1, 0, gr(1));
        }
    }
    switch (index) {
        case 1: return elem(0, 1, gr(1)) + elem(1, 0, gr(1));
        case 2: return elem(0, 1, gr(0, -1)) + elem(1, 0, gr(0, 1));
        case 3: return elem(0, 0, gr(1)) + elem(1, 1, gr(-1));
        case 4: return elem(0, 0, gr(1)) + elem(1, 1, gr(1));
        case 5: return elem(0, 2, gr(1));
        case 6: return elem(1, 2, gr(1));
    }
    throw std::logic_error("unreachable");
}

Mat3 algebra_generator(MatCatalog cat, int index) {
    return to_floating(algebra_generator_exact(cat, index));
}

std::map<std::pair<int, int>, symop::CoeffMap> matrix_commutator_table(MatCatalog cat) {
    std::vector<GVec> columns;
    std::vector<Mat3G> basis;
    for (int i = 1; i <= 6; ++i) {
        basis.push_back(algebra_generator_exact(cat, i));
        columns.push_back(flatten(basis.back()));
    }
    std::map<std::pair<int, int>, symop::CoeffMap> table;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            Mat3G bracket = basis[i - 1] * basis[j - 1] - basis[j - 1] * basis[i - 1];
            auto coords = express_in_span(columns, flatten(bracket));
            if (!coords)
                throw std::logic_error("matrix bracket left the generator span");
            symop::CoeffMap m;
            for (size_t k = 0; k < coords->size(); ++k)
                if (!(*coords)[k].is_zero()) m[static_cast<int>(k) + 1] = (*coords)[k];
            table[{i, j}] = std::move(m);
        }
    return table;
}

symop::DiscrepancyReport verify_matrix_table(MatCatalog cat) {
    symop::DiscrepancyReport report;
    report.catalog = cat == MatCatalog::XHat ? "xhat" : "ghat";
    auto ref_catalog = cat == MatCatalog::XHat ? symop::Catalog::X : symop::Catalog::G;
    const auto& ref = symop::reference_table(ref_catalog);
    if (cat == MatCatalog::GHat)
        report.notes = symop::reference_notes(symop::Catalog::G);
    for (const auto& [pair, computed] : matrix_commutator_table(cat)) {
        symop::DiscrepancyEntry e;
        e.i = pair.first;
        e.j = pair.second;
        e.computed = computed;
        auto it = ref.find(pair);
        if (it != ref.end()) e.reference = it->second;
        e.match = (it != ref.end()) && computed == it->second;
        report.entries.push_back(std::move(e));
    }
    return report;
}

Mat3 GroupElement::to_mat3() const {
    Mat3 out;
    out.at(0, 0) = a;
    out.at(0, 1) = b;
    out.at(0, 2) = t_z;
    out.at(1, 0) = c;
    out.at(1, 1) = d;
    out.at(1, 2) = t_zeta;
    out.at(2, 2) = 1.0;
    return out;
}

GroupElement GroupElement::from_mat3(const Mat3& m, double tol) {
    if (std::abs(m.at(2, 0)) > tol || std::abs(m.at(2, 1)) > tol ||
        std::abs(m.at(2, 2) - 1.0) > tol)
        throw NotInXError{};
    GroupElement g;
    g.a = m.at(0, 0);
    g.b = m.at(0, 1);
    g.t_z = m.at(0, 2);
    g.c = m.at(1, 0);
    g.d = m.at(1, 1);
    g.t_zeta = m.at(1, 2);
    return g;
}

GroupElement exp_generator(int index, double t) {
    if (index < 1 || index > 6)
        throw UnknownIndexError("exp_generator: no generator with index " +
                                std::to_string(index));
    double factor = (index == 2 || index == 5) ? 1.0 - std::exp(-t) : t;
    Mat3 m = to_floating(algebra_generator_exact(MatCatalog::XHat, index))
                 .scaled(std::complex<double>(factor)) +
             Mat3::identity();
    return GroupElement::from_mat3(m, 0.0);
}

Mat3 exp_series(const Mat3& m, double tol) {
    double scale = max_abs(m);
    int squarings = 0;
    Mat3 base = m;
    while (scale > 0.5) {
        base = base.scaled(std::complex<double>(0.5));
        scale *= 0.5;
        ++squarings;
    }
    Mat3 sum = Mat3::identity();
    Mat3 term = Mat3::identity();
    for (int k = 1; k < 64; ++k) {
        term = (term * base).scaled(std::complex<double>(1.0 / k));
        sum = sum + term;
        if (max_abs(term) < tol) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

SubgroupClassification classify(const Mat3& m, double tol) {
    if (std::abs(m.at(2, 0)) > tol || std::abs(m.at(2, 1)) > tol ||
        std::abs(m.at(2, 2) - 1.0) > tol)
        throw NotInXError{};
    GroupElement g = GroupElement::from_mat3(m, tol);
    auto near = [tol](std::complex<double> u, std::complex<double> v) {
        return std::abs(u - v) <= tol;
    };
    SubgroupClassification out;
    out.general_x = true;
    out.moebius = near(g.t_z, 0.0) && near(g.t_zeta, 0.0);
    out.heisenberg = near(g.a, 1.0) && near(g.d, 1.0) && near(g.c, 0.0);
    out.heisenberg_tilde = near(g.a, 1.0) && near(g.d, 1.0) && near(g.b, 0.0);
    out.qht = near(g.d, std::conj(g.a)) && near(g.b, -std::conj(g.c));
    out.unimodular = near(g.block_det(), 1.0);
    return out;
}

SymplecticPair<double> act(const GroupElement& g, const SymplecticPair<double>& v) {
    return {g.a * v.z + g.b * v.zeta + g.t_z, g.c * v.z + g.d * v.zeta + g.t_zeta};
}

Quat m_map(const SymplecticPair<double>& v) { return from_symplectic(v); }

GroupElement compose(const GroupElement& m1, const GroupElement& m2) {
    GroupElement out;
    out.a = m1.a * m2.a + m1.b * m2.c;
    out.b = m1.a * m2.b + m1.b * m2.d;
    out.c = m1.c * m2.a + m1.d * m2.c;
    out.d = m1.c * m2.b + m1.d * m2.d;
    out.t_z = m1.a * m2.t_z + m1.b * m2.t_zeta + m1.t_z;
    out.t_zeta = m1.c * m2.t_z + m1.d * m2.t_zeta + m1.t_zeta;
    return out;
}

GroupElement invert(const GroupElement& m) {
    std::complex<double> det = m.block_det();
    if (det == std::complex<double>(0.0)) throw SingularElementError{};
    GroupElement out;
    out.a = m.d / det;
    out.b = -m.b / det;
    out.c = -m.c / det;
    out.d = m.a / det;
    out.t_z = -(out.a * m.t_z + out.b * m.t_zeta);
    out.t_zeta = -(out.c * m.t_z + out.d * m.t_zeta);
    return out;
}

GroupElement from_qht(const Quat& u, const Quat& v) {
    auto su = symplectic_split(u);
    auto sv = symplectic_split(v);
    GroupElement g;
    g.a = su.z;
    g.b = -std::conj(su.zeta);
    g.c = su.zeta;
    g.d = std::conj(su.z);
    g.t_z = sv.z;
    g.t_zeta = sv.zeta;
    return g;
}

std::pair<Quat, Quat> to_qht(const GroupElement& m, double tol) {
    if (std::abs(m.d - std::conj(m.a)) > tol || std::abs(m.b + std::conj(m.c)) > tol)
        throw NotQhtFormError{};
    Quat u = from_symplectic<double>({m.a, m.c});
    Quat v = from_symplectic<double>({m.t_z, m.t_zeta});
    return {u, v};
}

} // namespace qhx::matgroup
