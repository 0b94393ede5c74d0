#pragma once

// First-order differential operators with polynomial coefficients:
//   A = sum_v p_v(z, zbar, zeta, zetabar) * d/dv.
// The commutator keeps full second-order bookkeeping and checks that the
// second-order part cancels before projecting back to first order.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qhx/polynomial.hpp"

namespace qhx::symop {

class DiffOperator {
public:
    DiffOperator() = default;

    static DiffOperator partial(Var v) { return term(Polynomial::one(), v); }
    static DiffOperator term(Polynomial coeff, Var v) {
        DiffOperator op;
        op.coeff_[static_cast<int>(v)] = std::move(coeff);
        return op;
    }

    const Polynomial& coefficient(Var v) const { return coeff_[static_cast<int>(v)]; }

    bool is_zero() const {
        for (const auto& p : coeff_)
            if (!p.is_zero()) return false;
        return true;
    }

    DiffOperator operator-() const {
        DiffOperator op;
        for (int v = 0; v < kNumVars; ++v) op.coeff_[v] = -coeff_[v];
        return op;
    }
    DiffOperator operator+(const DiffOperator& o) const {
        DiffOperator op;
        for (int v = 0; v < kNumVars; ++v) op.coeff_[v] = coeff_[v] + o.coeff_[v];
        return op;
    }
    DiffOperator operator-(const DiffOperator& o) const { return *this + (-o); }
    DiffOperator scaled(const GaussRat& s) const {
        DiffOperator op;
        for (int v = 0; v < kNumVars; ++v) op.coeff_[v] = coeff_[v].scaled(s);
        return op;
    }

    Polynomial apply(const Polynomial& p) const {
        Polynomial out;
        for (int v = 0; v < kNumVars; ++v) {
            if (coeff_[v].is_zero()) continue;
            out = out + coeff_[v] * p.derivative(static_cast<Var>(v));
        }
        return out;
    }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.coeff_ == b.coeff_;
    }

    // Flat sum of terms, e.g. "z*dz + -1*dzeta".
    std::string to_string() const {
        std::string out;
        for (int v = 0; v < kNumVars; ++v) {
            for (const auto& [e, c] : coeff_[v].terms()) {
                if (!out.empty()) out += " + ";
                out += term_string(e, c, v);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Polynomial, 4> coeff_;

    static std::string term_string(const Expo& e, const GaussRat& c, int v) {
        std::string d = std::string("d") + kVarNames[v];
        std::string mono = Polynomial::monomial_string(e);
        std::string cs = c.to_string();
        if (!c.re.is_zero() && !c.im.is_zero()) cs = "(" + cs + ")";
        if (mono.empty()) {
            if (c == GaussRat(1)) return d;
            return cs + "*" + d;
        }
        if (c == GaussRat(1)) return mono + "*" + d;
        if (c == GaussRat(-1)) return "-1*" + mono + "*" + d;
        return cs + "*" + mono + "*" + d;
    }
};

namespace detail {

// A o B split into its first- and second-order parts. Second-order keys are
// symmetrized (u <= v) since partials commute.
struct Composition {
    std::array<Polynomial, 4> first;
    std::map<std::pair<int, int>, Polynomial> second;
};

inline Composition compose(const DiffOperator& a, const DiffOperator& b) {
    Composition out;
    for (int u = 0; u < kNumVars; ++u) {
        const Polynomial& pu = a.coefficient(static_cast<Var>(u));
        if (pu.is_zero()) continue;
        for (int v = 0; v < kNumVars; ++v) {
            const Polynomial& qv = b.coefficient(static_cast<Var>(v));
            if (qv.is_zero()) continue;
            out.first[v] = out.first[v] + pu * qv.derivative(static_cast<Var>(u));
            auto key = std::minmax(u, v);
            auto [it, inserted] = out.second.emplace(key, pu * qv);
            if (!inserted) it->second = it->second + pu * qv;
        }
    }
    return out;
}

} // namespace detail

// [A, B] = A o B - B o A, acting on functions of (z, zbar, zeta, zetabar).
inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    auto ab = detail::compose(a, b);
    auto ba = detail::compose(b, a);
    for (const auto& [key, p] : ab.second) {
        auto it = ba.second.find(key);
        if (it == ba.second.end() ? !p.is_zero() : !(p - it->second).is_zero())
            throw std::logic_error("commutator: second-order terms failed to cancel");
    }
    for (const auto& [key, p] : ba.second) {
        if (ab.second.find(key) == ab.second.end() && !p.is_zero())
            throw std::logic_error("commutator: second-order terms failed to cancel");
    }
    DiffOperator out;
    for (int v = 0; v < kNumVars; ++v) {
        Polynomial p = ab.first[v] - ba.first[v];
        if (!p.is_zero()) out = out + DiffOperator::term(p, static_cast<Var>(v));
    }
    return out;
}

} // namespace qhx::symop
