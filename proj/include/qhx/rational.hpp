#pragma once

// Exact rational and Gaussian-rational scalars used by the symbolic layer.
// All operations are overflow-checked; the symbolic tables only ever touch
// small integers, so hitting the guard means a logic error somewhere.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qhx {

class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    // Accepts "p" or "p/q".
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return make(add(mul(num_, o.den_), mul(o.num_, den_)), mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return make(mul(num_, o.num_), mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        return make(mul(num_, o.den_), mul(den_, o.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    long long num_, den_;

    static Rational raw(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        return raw(static_cast<long long>(n), static_cast<long long>(d));
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static __int128 mul(long long a, long long b) { return static_cast<__int128>(a) * b; }
    static __int128 add(__int128 a, __int128 b) { return a + b; }

    static long long parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("rational: empty numeral");
        size_t pos = 0;
        long long v = std::stoll(std::string(s), &pos);
        if (pos != s.size()) throw std::invalid_argument("rational: bad numeral");
        return v;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (den_ == 0) den_ = 1;
    }
};

// Complex number over the rationals. Field operations only; everything exact.
struct GaussRat {
    Rational re{}, im{};

    constexpr GaussRat() = default;
    GaussRat(Rational r) : re(r) {}
    GaussRat(long long r) : re(r) {}
    GaussRat(Rational r, Rational i) : re(r), im(i) {}

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussRat conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        Rational n = o.norm_sq();
        if (n.is_zero()) throw std::domain_error("gaussian rational: division by zero");
        GaussRat t = *this * o.conj();
        return {t.re / n, t.im / n};
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    // "0", "1", "-2", "i", "-i", "2i", "1/2", "1+i", "1-2i", ...
    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string ipart = im.abs() == Rational(1) ? "i" : im.abs().to_string() + "i";
        if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + ipart;
        return re.to_string() + (im.sign() < 0 ? "-" : "+") + ipart;
    }
};

} // namespace qhx
