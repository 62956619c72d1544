#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcum/rational.hpp"
#include "gcum/ring.hpp"

namespace gcum::algebra {

/// Polynomial in the formal variable gamma with rational coefficients.
/// Canonical form: trailing zero coefficients stripped, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class GammaPoly {
public:
    GammaPoly() = default;
    GammaPoly(long n) { if (n != 0) c_.push_back(Rational(n)); }
    GammaPoly(int n) : GammaPoly(static_cast<long>(n)) {}
    GammaPoly(Rational r) {
        if (!is_zero(r)) c_.push_back(std::move(r));
    }
    explicit GammaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static GammaPoly gamma() { return GammaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }

    Rational eval(const Rational& g) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + *it;
        return acc;
    }
    double eval(double g) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + it->to_double();
        return acc;
    }

    friend GammaPoly operator+(const GammaPoly& a, const GammaPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return GammaPoly(std::move(r));
    }
    friend GammaPoly operator-(const GammaPoly& a, const GammaPoly& b) { return a + (-b); }
    GammaPoly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        GammaPoly p;
        p.c_ = std::move(r);
        return p;
    }
    friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return GammaPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return GammaPoly(std::move(r));
    }
    GammaPoly& operator+=(const GammaPoly& o) { *this = *this + o; return *this; }
    GammaPoly& operator-=(const GammaPoly& o) { *this = *this - o; return *this; }
    GammaPoly& operator*=(const GammaPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GammaPoly& a, const GammaPoly& b) { return !(a == b); }

    Rational leading() const {
        if (c_.empty()) throw std::domain_error("GammaPoly::leading: zero polynomial");
        return c_.back();
    }

    /// Polynomial long division over the rationals; exact quotient/remainder.
    friend std::pair<GammaPoly, GammaPoly> divmod(const GammaPoly& a, const GammaPoly& b) {
        if (b.c_.empty()) throw std::domain_error("GammaPoly divmod: division by zero");
        std::vector<Rational> rem(a.c_);
        std::vector<Rational> quo;
        int db = b.degree();
        if (static_cast<int>(rem.size()) - 1 >= db)
            quo.assign(rem.size() - db, Rational(0));
        for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
            if (is_zero(rem[d])) continue;
            Rational f = rem[d] / b.c_.back();
            quo[d - db] = f;
            for (int j = 0; j <= db; ++j) rem[d - db + j] -= f * b.c_[j];
        }
        return {GammaPoly(std::move(quo)), GammaPoly(std::move(rem))};
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c_[i] != Rational(1)) os << c_[i].str();
            if (i > 0) {
                if (c_[i] != Rational(1)) os << "*";
                os << "g";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const GammaPoly& p) { return os << p.str(); }

private:
    void strip() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline bool is_zero(const GammaPoly& p) { return p.degree() < 0; }
inline GammaPoly div_exact(const GammaPoly& p, long n) {
    std::vector<Rational> r(p.coeffs());
    for (auto& x : r) x = div_exact(x, n);
    return GammaPoly(std::move(r));
}

inline GammaPoly gcd(GammaPoly a, GammaPoly b) {
    while (!is_zero(b)) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (is_zero(a)) return a;
    // monic normalization keeps gcd canonical
    Rational lead = a.leading();
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = x / lead;
    return GammaPoly(std::move(c));
}

/// Rational function in gamma: quotient of two gamma-polynomials.
/// Canonical form: gcd(num, den) = 1 and den monic, so operator== is
/// plain component comparison.
class GammaRat {
public:
    GammaRat() : num_(), den_(1) {}
    GammaRat(long n) : num_(n), den_(1) {}
    GammaRat(int n) : num_(n), den_(1) {}
    GammaRat(Rational r) : num_(std::move(r)), den_(1) {}
    GammaRat(GammaPoly p) : num_(std::move(p)), den_(1) {}
    GammaRat(GammaPoly num, GammaPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static GammaRat gamma() { return GammaRat(GammaPoly::gamma()); }

    const GammaPoly& num() const { return num_; }
    const GammaPoly& den() const { return den_; }

    Rational eval(const Rational& g) const {
        Rational d = den_.eval(g);
        if (is_zero(d)) throw std::domain_error("GammaRat::eval: pole at requested gamma");
        return num_.eval(g) / d;
    }

    friend GammaRat operator+(const GammaRat& a, const GammaRat& b) {
        return GammaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GammaRat operator-(const GammaRat& a, const GammaRat& b) {
        return GammaRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GammaRat operator*(const GammaRat& a, const GammaRat& b) {
        return GammaRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend GammaRat operator/(const GammaRat& a, const GammaRat& b) {
        if (is_zero(b.num_)) throw std::domain_error("GammaRat: division by zero");
        return GammaRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    GammaRat operator-() const { return GammaRat(-num_, den_, no_normalize{}); }

    GammaRat& operator+=(const GammaRat& o) { *this = *this + o; return *this; }
    GammaRat& operator-=(const GammaRat& o) { *this = *this - o; return *this; }
    GammaRat& operator*=(const GammaRat& o) { *this = *this * o; return *this; }
    GammaRat& operator/=(const GammaRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const GammaRat& a, const GammaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const GammaRat& a, const GammaRat& b) { return !(a == b); }

    std::string str() const {
        if (den_ == GammaPoly(1)) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const GammaRat& r) { return os << r.str(); }

private:
    struct no_normalize {};
    GammaRat(GammaPoly num, GammaPoly den, no_normalize) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (is_zero(den_)) throw std::domain_error("GammaRat: zero denominator");
        if (is_zero(num_)) {
            den_ = GammaPoly(1);
            return;
        }
        GammaPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != Rational(1)) {
            std::vector<Rational> nc(num_.coeffs()), dc(den_.coeffs());
            for (auto& x : nc) x = x / lead;
            for (auto& x : dc) x = x / lead;
            num_ = GammaPoly(std::move(nc));
            den_ = GammaPoly(std::move(dc));
        }
    }

    GammaPoly num_, den_;
};

inline bool is_zero(const GammaRat& r) { return is_zero(r.num()); }
inline GammaRat div_exact(const GammaRat& r, long n) { return r / GammaRat(n); }

}  // namespace gcum::algebra
