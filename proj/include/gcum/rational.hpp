#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcum::algebra {

/// Exact arbitrary-precision rational, always reduced with positive denominator.
/// Thin value wrapper around GMP's mpq_class that pins the canonical form and
/// the "p/q" string format used by every serializer in this project.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long long n) { v_ = from_ll(n); }

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        r.v_.canonicalize();
        return r;
    }

    /// Parses "p", "-p", or "p/q" in base 10.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
        q.canonicalize();
        return from_mpq(std::move(q));
    }

    /// Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.v_) == 0) throw std::domain_error("Rational: division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;  // gmp keeps +,-,*,/ results canonical
    }
    static mpq_class from_ll(long long n) {
        mpz_class z;
        if (n >= 0) {
            z = static_cast<unsigned long>(n);
        } else {
            z = static_cast<unsigned long>(-(n + 1));
            z = -z - 1;
        }
        return mpq_class(z);
    }

    mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.sign() == 0; }
inline Rational div_exact(const Rational& x, long n) { return x / Rational(n); }
inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace gcum::algebra
