#include "qhx/algebra.hpp"

namespace qhx::symop {

namespace {

DiffOperator dz() { return DiffOperator::partial(Var::z); }
DiffOperator dzbar() { return DiffOperator::partial(Var::zbar); }
DiffOperator dzeta() { return DiffOperator::partial(Var::zeta); }

DiffOperator mono_term(Var coeff_var, Var d_var) {
    return DiffOperator::term(Polynomial::variable(coeff_var), d_var);
}

GaussRat im_unit() { return GaussRat::i(); }

// Coordinate vectors for span work: one slot per (variable, monomial) pair
// seen across the given operators.
struct CoordinateIndex {
    std::map<std::pair<int, Expo>, size_t> slots;

    void absorb(const DiffOperator& op) {
        for (int v = 0; v < kNumVars; ++v)
            for (const auto& [e, c] : op.coefficient(static_cast<Var>(v)).terms())
                slots.emplace(std::make_pair(v, e), slots.size());
    }

    GVec vectorize(const DiffOperator& op) const {
        GVec vec(slots.size());
        for (int v = 0; v < kNumVars; ++v)
            for (const auto& [e, c] : op.coefficient(static_cast<Var>(v)).terms()) {
                auto it = slots.find({v, e});
                if (it == slots.end())
                    throw std::logic_error("vectorize: operator not absorbed into index");
                vec[it->second] = c;
            }
        return vec;
    }
};

std::optional<GVec> express(const std::vector<DiffOperator>& basis, const DiffOperator& target) {
    CoordinateIndex idx;
    for (const auto& op : basis) idx.absorb(op);
    idx.absorb(target);
    std::vector<GVec> columns;
    columns.reserve(basis.size());
    for (const auto& op : basis) {
        GVec v = idx.vectorize(op);
        v.resize(idx.slots.size());
        columns.push_back(std::move(v));
    }
    GVec t = idx.vectorize(target);
    t.resize(idx.slots.size());
    return express_in_span(columns, t);
}

CoeffMap to_coeff_map(const GVec& coords) {
    CoeffMap m;
    for (size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) m[static_cast<int>(k) + 1] = coords[k];
    return m;
}

} // namespace

int catalog_size(Catalog c) {
    switch (c) {
        case Catalog::X:
        case Catalog::XBar:
        case Catalog::G: return 6;
        case Catalog::HeisenbergA:
        case Catalog::HeisenbergB:
        case Catalog::Sl2: return 3;
    }
    throw std::logic_error("unreachable");
}

const char* catalog_name(Catalog c) {
    switch (c) {
        case Catalog::X: return "x";
        case Catalog::XBar: return "xbar";
        case Catalog::G: return "g";
        case Catalog::HeisenbergA: return "heisenberg_a";
        case Catalog::HeisenbergB: return "heisenberg_b";
        case Catalog::Sl2: return "sl2";
    }
    throw std::logic_error("unreachable");
}

std::string basis_symbol(Catalog c, int index) {
    switch (c) {
        case Catalog::X: return "x" + std::to_string(index);
        case Catalog::XBar: return "xbar" + std::to_string(index);
        case Catalog::G: return "g" + std::to_string(index);
        case Catalog::HeisenbergA: {
            static const char* names[] = {"x1", "x4", "x3"};
            return names[index - 1];
        }
        case Catalog::HeisenbergB: {
            static const char* names[] = {"x1", "x4", "x6"};
            return names[index - 1];
        }
        case Catalog::Sl2: return "e" + std::to_string(index);
    }
    throw std::logic_error("unreachable");
}

DiffOperator generator(Catalog c, int index) {
    if (index < 1 || index > catalog_size(c))
        throw UnknownIndexError(std::string(catalog_name(c)) + ": no generator with index " +
                                std::to_string(index));
    switch (c) {
        case Catalog::X:
            switch (index) {
                case 1: return dz();
                case 2: return mono_term(Var::z, Var::z);
                case 3: return mono_term(Var::zeta, Var::z);
                case 4: return dzeta();
                case 5: return mono_term(Var::zeta, Var::zeta);
                case 6: return mono_term(Var::z, Var::zeta);
            }
            break;
        case Catalog::XBar:
            switch (index) {
                case 1: return dzbar();
                case 2: return mono_term(Var::zbar, Var::zbar);
                case 3: return mono_term(Var::zeta, Var::zbar);
                case 4: return dzeta();
                case 5: return mono_term(Var::zeta, Var::zeta);
                case 6: return mono_term(Var::zbar, Var::zeta);
            }
            break;
        case Catalog::G:
            switch (index) {
                case 1: return mono_term(Var::zeta, Var::z) + mono_term(Var::z, Var::zeta);
                case 2:
                    return (mono_term(Var::z, Var::zeta) - mono_term(Var::zeta, Var::z))
                        .scaled(im_unit());
                case 3: return mono_term(Var::z, Var::z) - mono_term(Var::zeta, Var::zeta);
                case 4: return -(mono_term(Var::z, Var::z) + mono_term(Var::zeta, Var::zeta));
                case 5: return dz();
                case 6: return -dzeta();
            }
            break;
        case Catalog::HeisenbergA:
            switch (index) {
                case 1: return dz();
                case 2: return dzeta();
                case 3: return mono_term(Var::zeta, Var::z);
            }
            break;
        case Catalog::HeisenbergB:
            switch (index) {
                case 1: return dz();
                case 2: return dzeta();
                case 3: return mono_term(Var::z, Var::zeta);
            }
            break;
        case Catalog::Sl2:
            switch (index) {
                case 1: return mono_term(Var::zeta, Var::z);
                case 2: return mono_term(Var::z, Var::zeta);
                case 3: return mono_term(Var::zeta, Var::zeta) - mono_term(Var::z, Var::z);
            }
            break;
    }
    throw std::logic_error("unreachable");
}

std::vector<DiffOperator> catalog_basis(Catalog c) {
    std::vector<DiffOperator> out;
    int n = catalog_size(c);
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back(generator(c, i));
    return out;
}

std::string coeff_map_to_string(Catalog c, const CoeffMap& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [k, coeff] : m) {
        std::string sym = basis_symbol(c, k);
        std::string term;
        if (coeff == GaussRat(1))
            term = sym;
        else if (coeff == GaussRat(-1))
            term = "-" + sym;
        else {
            std::string cs = coeff.to_string();
            if (!coeff.re.is_zero() && !coeff.im.is_zero()) cs = "(" + cs + ")";
            term = cs + "*" + sym;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

DiffOperator AlgebraElement::realize() const {
    DiffOperator out;
    for (const auto& [k, c] : coeff) out = out + generator(catalog, k).scaled(c);
    return out;
}

CommutatorTable commutator_table(Catalog c) {
    auto basis = catalog_basis(c);
    int n = static_cast<int>(basis.size());
    CommutatorTable table{c, {}};
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            DiffOperator bracket = commutator(basis[i - 1], basis[j - 1]);
            auto coords = express(basis, bracket);
            if (!coords) throw NotClosedError(bracket.to_string());
            table.entries[{i, j}] = to_coeff_map(*coords);
        }
    return table;
}

ClosureResult is_closed(const std::vector<DiffOperator>& ops) {
    int n = static_cast<int>(ops.size());
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            DiffOperator bracket = commutator(ops[i - 1], ops[j - 1]);
            if (!express(ops, bracket))
                return {false, bracket, {i, j}};
        }
    return {};
}

StructureConstants structure_constants(const std::vector<DiffOperator>& basis) {
    size_t n = basis.size();
    {
        CoordinateIndex idx;
        for (const auto& op : basis) idx.absorb(op);
        std::vector<GVec> columns;
        for (const auto& op : basis) {
            GVec v = idx.vectorize(op);
            v.resize(idx.slots.size());
            columns.push_back(std::move(v));
        }
        if (column_rank(columns) != n) throw DependentBasisError{};
    }
    StructureConstants c(n, std::vector<std::vector<GaussRat>>(n, std::vector<GaussRat>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            DiffOperator bracket = commutator(basis[i], basis[j]);
            auto coords = express(basis, bracket);
            if (!coords) throw NotClosedError(bracket.to_string());
            for (size_t k = 0; k < n; ++k) {
                c[i][j][k] = (*coords)[k];
                c[j][i][k] = -(*coords)[k];
            }
        }
    return c;
}

std::vector<GMat> adjoint_rep(const std::vector<DiffOperator>& basis) {
    auto c = structure_constants(basis);
    size_t n = basis.size();
    std::vector<GMat> mats(n, gmat_zero(n, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) mats[i][k][j] = c[i][j][k];
    return mats;
}

bool ideal_check(const std::vector<DiffOperator>& basis, const std::vector<int>& subset) {
    std::vector<DiffOperator> sub;
    sub.reserve(subset.size());
    for (int s : subset) {
        if (s < 1 || s > static_cast<int>(basis.size()))
            throw UnknownIndexError("ideal_check: subset index out of range");
        sub.push_back(basis[s - 1]);
    }
    for (const auto& b : basis)
        for (const auto& s : sub)
            if (!express(sub, commutator(b, s))) return false;
    return true;
}

DiscrepancyReport verify_against_reference(Catalog c) {
    DiscrepancyReport report;
    report.catalog = catalog_name(c);
    report.notes = reference_notes(c);
    auto oracle = commutator_table(c);
    const auto& ref = reference_table(c);
    for (const auto& [pair, computed] : oracle.entries) {
        DiscrepancyEntry e;
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

bool adjoint_property_holds(const std::vector<DiffOperator>& basis) {
    auto c = structure_constants(basis);
    auto ad = adjoint_rep(basis);
    size_t n = basis.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            GMat lhs = gmat_sub(gmat_mul(ad[i], ad[j]), gmat_mul(ad[j], ad[i]));
            GMat rhs = gmat_zero(n, n);
            for (size_t k = 0; k < n; ++k) {
                if (c[i][j][k].is_zero()) continue;
                for (size_t r = 0; r < n; ++r)
                    for (size_t s = 0; s < n; ++s) rhs[r][s] += c[i][j][k] * ad[k][r][s];
            }
            if (!gmat_is_zero(gmat_sub(lhs, rhs))) return false;
        }
    return true;
}

std::optional<std::string> oracle_self_check(Catalog c) {
    auto basis = catalog_basis(c);
    int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DiffOperator sum = commutator(basis[i], basis[j]) + commutator(basis[j], basis[i]);
            if (!sum.is_zero())
                return "antisymmetry fails at (" + basis_symbol(c, i + 1) + ", " +
                       basis_symbol(c, j + 1) + ")";
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                DiffOperator jac = commutator(basis[i], commutator(basis[j], basis[k])) +
                                   commutator(basis[j], commutator(basis[k], basis[i])) +
                                   commutator(basis[k], commutator(basis[i], basis[j]));
                if (!jac.is_zero())
                    return "Jacobi identity fails at (" + basis_symbol(c, i + 1) + ", " +
                           basis_symbol(c, j + 1) + ", " + basis_symbol(c, k + 1) + ")";
            }
    return std::nullopt;
}

} // namespace qhx::symop
