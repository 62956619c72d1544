#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcum/ring.hpp"

namespace gcum::algebra {

/// Polynomial in commuting variables x_1, x_2, ... over a coefficient ring.
/// Terms map a canonical exponent vector (trailing zeros stripped, entry t
/// is the exponent of x_{t+1}) to a nonzero coefficient. The variable count
/// is implicit: a value is usable with any N exceeding every index it
/// mentions. Degree truncation is an explicit argument of the operations
/// that need it, never part of the value.
template <Ring R>
class MultiPoly {
public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, R>;

    MultiPoly() = default;
    MultiPoly(long n) {
        if (n != 0) t_[Expo{}] = R(n);
    }
    MultiPoly(int n) : MultiPoly(static_cast<long>(n)) {}
    static MultiPoly constant(R c) {
        MultiPoly p;
        if (!is_zero(c)) p.t_[Expo{}] = std::move(c);
        return p;
    }
    /// x_i (1-based variable index).
    static MultiPoly var(int i) {
        if (i < 1) throw std::invalid_argument("MultiPoly::var: index must be >= 1");
        MultiPoly p;
        Expo e(static_cast<size_t>(i), 0);
        e[static_cast<size_t>(i - 1)] = 1;
        p.t_[std::move(e)] = R(1);
        return p;
    }
    static MultiPoly monomial(Expo e, R c) {
        MultiPoly p;
        if (!is_zero(c)) p.t_[strip(std::move(e))] = std::move(c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    static int degree_of(const Expo& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, degree_of(e));
        return d;
    }

    R constant_term() const {
        auto it = t_.find(Expo{});
        return it == t_.end() ? R(0) : it->second;
    }
    R coeff(const Expo& e) const {
        auto it = t_.find(strip(Expo(e)));
        return it == t_.end() ? R(0) : it->second;
    }

    void add_term(Expo e, const R& c) {
        if (is_zero(c)) return;
        Expo key = strip(std::move(e));
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul_trunc(a, b, -1); }
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    friend MultiPoly operator*(const R& s, const MultiPoly& a) {
        MultiPoly r;
        for (const auto& [e, c] : a.t_) {
            R sc = s * c;
            if (!is_zero(sc)) r.t_.emplace(e, std::move(sc));
        }
        return r;
    }

    /// Product keeping only terms of total degree <= max_degree (no bound if
    /// max_degree < 0).
    friend MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int max_degree) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.t_) {
            int da = degree_of(ea);
            for (const auto& [eb, cb] : b.t_) {
                if (max_degree >= 0 && da + degree_of(eb) > max_degree) continue;
                Expo e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    MultiPoly truncate_degree(int max_degree) const {
        MultiPoly r;
        for (const auto& [e, c] : t_)
            if (degree_of(e) <= max_degree) r.t_.emplace(e, c);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Partial derivative with respect to x_i (1-based).
    MultiPoly deriv(int i) const {
        check_var(i);
        size_t v = static_cast<size_t>(i - 1);
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            if (v >= e.size() || e[v] == 0) continue;
            Expo d = e;
            int p = d[v]--;
            r.add_term(std::move(d), R(p) * c);
        }
        return r;
    }

    /// Exchange of the variables x_i and x_j.
    MultiPoly swap_vars(int i, int j) const {
        check_var(i);
        check_var(j);
        if (i == j) return *this;
        size_t vi = static_cast<size_t>(i - 1), vj = static_cast<size_t>(j - 1);
        size_t need = std::max(vi, vj) + 1;
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            Expo d = e;
            if (d.size() < need) d.resize(need, 0);
            std::swap(d[vi], d[vj]);
            r.add_term(std::move(d), c);
        }
        return r;
    }

    /// (h - s_{ij} h) / (x_i - x_j): always an exact polynomial. Per term,
    /// x_i^a x_j^b - x_i^b x_j^a factors as (x_i - x_j) times a symmetric
    /// geometric sum, handled monomial by monomial.
    MultiPoly divided_difference(int i, int j) const {
        check_var(i);
        check_var(j);
        if (i == j) throw std::invalid_argument("divided_difference: indices must differ");
        size_t vi = static_cast<size_t>(i - 1), vj = static_cast<size_t>(j - 1);
        size_t need = std::max(vi, vj) + 1;
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            Expo base = e;
            if (base.size() < need) base.resize(need, 0);
            int a = base[vi], b = base[vj];
            if (a == b) continue;
            int lo = std::min(a, b), hi = std::max(a, b);
            R coeff = (a > b) ? c : -c;
            for (int t = 0; t < hi - lo; ++t) {
                Expo d = base;
                d[vi] = lo + t;
                d[vj] = hi - 1 - t;
                r.add_term(std::move(d), coeff);
            }
        }
        return r;
    }

    /// Evaluation at a point (variables beyond the vector's length are 0).
    R eval(const std::vector<R>& x) const {
        R acc(0);
        for (const auto& [e, c] : t_) {
            R term = c;
            bool dead = false;
            for (size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (v >= x.size() || is_zero(x[v])) {
                    dead = true;
                    break;
                }
                term *= ring_pow(x[v], static_cast<unsigned long>(e[v]));
            }
            if (!dead) acc += term;
        }
        return acc;
    }

private:
    static Expo strip(Expo e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        return e;
    }
    static void check_var(int i) {
        if (i < 1) throw std::invalid_argument("MultiPoly: variable index must be >= 1");
    }
    Terms t_;
};

template <Ring R>
bool is_zero(const MultiPoly<R>& p) {
    return p.empty();
}

template <Ring R>
MultiPoly<R> div_exact(const MultiPoly<R>& p, long n) {
    MultiPoly<R> r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, div_exact(c, n));
    return r;
}

/// exp of a polynomial with zero constant term, truncated at total degree D.
template <Ring R>
MultiPoly<R> exp_trunc(const MultiPoly<R>& f, int max_degree) {
    if (!is_zero(f.constant_term()))
        throw std::invalid_argument("exp_trunc: nonzero constant term");
    MultiPoly<R> ft = f.truncate_degree(max_degree);
    MultiPoly<R> result(1), power(1);
    for (int n = 1; n <= max_degree; ++n) {
        power = div_exact(mul_trunc(power, ft, max_degree), n);
        if (is_zero(power)) break;
        result += power;
    }
    return result;
}

/// log of a polynomial with constant term 1, truncated at total degree D.
template <Ring R>
MultiPoly<R> log_trunc(const MultiPoly<R>& h, int max_degree) {
    if (!(h.constant_term() == R(1)))
        throw std::invalid_argument("log_trunc: constant term must be 1");
    MultiPoly<R> u = h.truncate_degree(max_degree) - MultiPoly<R>(1);
    MultiPoly<R> result, power(1);
    for (int n = 1; n <= max_degree; ++n) {
        power = mul_trunc(power, u, max_degree);
        if (is_zero(power)) break;
        MultiPoly<R> term = div_exact(power, n);
        if (n % 2 == 0) term = -term;
        result += term;
    }
    return result;
}

/// Monomial symmetric polynomial M_mu(x_1..x_N): the sum of all distinct
/// monomials whose exponent multiset equals mu padded with zeros to length N.
template <Ring R>
MultiPoly<R> monomial_symmetric(const std::vector<int>& mu, int N) {
    if (static_cast<int>(mu.size()) > N)
        throw std::invalid_argument("monomial_symmetric: more parts than variables");
    for (int p : mu)
        if (p < 1) throw std::invalid_argument("monomial_symmetric: parts must be positive");
    std::vector<int> e(static_cast<size_t>(N), 0);
    std::copy(mu.begin(), mu.end(), e.begin());
    std::sort(e.begin(), e.end());
    MultiPoly<R> r;
    do {
        r.add_term(e, R(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

}  // namespace gcum::algebra
