#pragma once

// Exact polynomials in the four commuting symbols z, zbar, zeta, zetabar,
// with Gaussian-rational coefficients. Just enough ring structure to carry
// first-order differential operators and their commutators.

#include <array>
#include <map>
#include <string>

#include "qhx/rational.hpp"

namespace qhx::symop {

enum class Var : int { z = 0, zbar = 1, zeta = 2, zetabar = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<const char*, 4> kVarNames = {"z", "zbar", "zeta", "zetabar"};

using Expo = std::array<int, 4>;

struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Expo, GaussRat, GradedLexLess>;

    Polynomial() = default;

    static Polynomial constant(GaussRat c) {
        Polynomial p;
        p.add_term(Expo{0, 0, 0, 0}, c);
        return p;
    }
    static Polynomial one() { return constant(GaussRat(1)); }
    static Polynomial variable(Var v) {
        Polynomial p;
        Expo e{0, 0, 0, 0};
        e[static_cast<int>(v)] = 1;
        p.add_term(e, GaussRat(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const {
        Polynomial p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }
    Polynomial operator+(const Polynomial& o) const {
        Polynomial p = *this;
        for (const auto& [e, c] : o.terms_) p.add_term(e, c);
        return p;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial p;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                p.add_term(e, ca * cb);
            }
        return p;
    }
    Polynomial scaled(const GaussRat& s) const {
        Polynomial p;
        if (s.is_zero()) return p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
        return p;
    }

    Polynomial derivative(Var v) const {
        int idx = static_cast<int>(v);
        Polynomial p;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Expo d = e;
            d[idx] -= 1;
            p.add_term(d, c * GaussRat(e[idx]));
        }
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += term_string(e, c);
        }
        return out;
    }

    // "z^2*zeta" etc.; empty string for the constant monomial.
    static std::string monomial_string(const Expo& e) {
        std::string out;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (!out.empty()) out += "*";
            out += kVarNames[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
        return out;
    }

private:
    TermMap terms_;

    void add_term(const Expo& e, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string term_string(const Expo& e, const GaussRat& c) {
        std::string mono = monomial_string(e);
        if (mono.empty()) return c.to_string();
        if (c == GaussRat(1)) return mono;
        if (c == GaussRat(-1)) return "-" + mono;
        std::string cs = c.to_string();
        if (!c.re.is_zero() && !c.im.is_zero()) cs = "(" + cs + ")";
        return cs + "*" + mono;
    }
};

} // namespace qhx::symop
