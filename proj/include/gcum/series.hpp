#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcum/ring.hpp"

namespace gcum::algebra {

/// Truncated formal power series over a coefficient ring R.
/// A series with truncation order K represents coefficients of z^0..z^{K-1};
/// z^K and beyond are unrepresented. Binary operations truncate to the
/// minimum of the operand orders; derive/lower lose one order because their
/// top coefficient would need the unrepresented z^K term.
template <Ring R>
class Series {
public:
    Series() : k_(0) {}
    explicit Series(int truncation) : c_(check_k(truncation)), k_(truncation) {}
    Series(std::vector<R> coeffs, int truncation) : c_(std::move(coeffs)), k_(check_k(truncation)) {
        c_.resize(static_cast<size_t>(k_));
    }

    int truncation() const { return k_; }

    const R& at(int i) const {
        if (i < 0 || i >= k_) throw std::out_of_range("Series::at: index beyond truncation order");
        return c_[static_cast<size_t>(i)];
    }
    void set(int i, R v) {
        if (i < 0 || i >= k_) throw std::out_of_range("Series::set: index beyond truncation order");
        c_[static_cast<size_t>(i)] = std::move(v);
    }
    const std::vector<R>& coeffs() const { return c_; }

    friend Series operator+(const Series& a, const Series& b) {
        int k = std::min(a.k_, b.k_);
        std::vector<R> r(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) r[i] = a.c_[i] + b.c_[i];
        return Series(std::move(r), k);
    }
    friend Series operator-(const Series& a, const Series& b) {
        int k = std::min(a.k_, b.k_);
        std::vector<R> r(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) r[i] = a.c_[i] - b.c_[i];
        return Series(std::move(r), k);
    }
    Series operator-() const {
        std::vector<R> r(c_);
        for (auto& x : r) x = -x;
        return Series(std::move(r), k_);
    }
    friend Series operator*(const Series& a, const Series& b) {
        int k = std::min(a.k_, b.k_);
        std::vector<R> r(static_cast<size_t>(k), R(0));
        for (int i = 0; i < std::min<int>(k, static_cast<int>(a.c_.size())); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < k; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Series(std::move(r), k);
    }
    friend Series operator*(const R& s, const Series& a) {
        std::vector<R> r(a.c_);
        for (auto& x : r) x = s * x;
        return Series(std::move(r), a.k_);
    }

    friend bool operator==(const Series& a, const Series& b) { return a.k_ == b.k_ && a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    static int check_k(int k) {
        if (k < 0) throw std::invalid_argument("Series: negative truncation order");
        return k;
    }
    std::vector<R> c_;
    int k_;
};

/// d/dz: output_i = (i+1) h_{i+1}; truncation drops by one.
template <Ring R>
Series<R> derive(const Series<R>& h) {
    if (h.truncation() < 1) throw std::invalid_argument("derive: truncation order must be >= 1");
    int k = h.truncation() - 1;
    std::vector<R> r(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) r[i] = R(i + 1) * h.at(i + 1);
    return Series<R>(std::move(r), k);
}

/// Lowering operator: output_i = h_{i+1}; truncation drops by one.
template <Ring R>
Series<R> lower(const Series<R>& h) {
    if (h.truncation() < 1) throw std::invalid_argument("lower: truncation order must be >= 1");
    int k = h.truncation() - 1;
    std::vector<R> r(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) r[i] = h.at(i + 1);
    return Series<R>(std::move(r), k);
}

/// Antiderivative with zero constant term; truncation grows by one, so that
/// derive(integrate(h)) == h.
template <Ring R>
Series<R> integrate(const Series<R>& h) {
    int k = h.truncation() + 1;
    std::vector<R> r(static_cast<size_t>(k), R(0));
    for (int i = 1; i < k; ++i) r[i] = div_exact(h.at(i - 1), i);
    return Series<R>(std::move(r), k);
}

enum class SeriesOp { derive, lower, multiply };

/// Dispatcher over the three series operators. Ring agreement between h and
/// a is enforced by the type system; multiply without a is a usage error.
template <Ring R>
Series<R> series_op(SeriesOp kind, const Series<R>& h, const std::optional<Series<R>>& a = std::nullopt) {
    switch (kind) {
        case SeriesOp::derive: return derive(h);
        case SeriesOp::lower: return lower(h);
        case SeriesOp::multiply:
            if (!a) throw std::invalid_argument("series_op: multiply requires second operand");
            return h * *a;
    }
    throw std::invalid_argument("series_op: unknown kind");
}

/// exp of a series with zero constant term, truncated at h's order.
/// Uses the recurrence (n+1) e_{n+1} = sum_j (j+1) f_{j+1} e_{n-j}, which
/// keeps all divisions exact integer divisions in the coefficient ring.
template <Ring R>
Series<R> exp_series(const Series<R>& f) {
    int k = f.truncation();
    if (k == 0) return Series<R>(0);
    if (!is_zero(f.at(0)))
        throw std::invalid_argument("exp_series: nonzero constant term");
    std::vector<R> e(static_cast<size_t>(k), R(0));
    e[0] = R(1);
    for (int n = 0; n + 1 < k; ++n) {
        R acc(0);
        for (int j = 0; j <= n; ++j) {
            if (j + 1 >= k) break;
            acc += R(j + 1) * f.at(j + 1) * e[n - j];
        }
        e[n + 1] = div_exact(acc, n + 1);
    }
    return Series<R>(std::move(e), k);
}

/// log of a series with constant term 1, truncated at h's order.
template <Ring R>
Series<R> log_series(const Series<R>& h) {
    int k = h.truncation();
    if (k == 0) return Series<R>(0);
    if (!(h.at(0) == R(1)))
        throw std::invalid_argument("log_series: constant term must be 1");
    std::vector<R> l(static_cast<size_t>(k), R(0));
    for (int n = 0; n + 1 < k; ++n) {
        R acc(0);
        for (int j = 0; j <= n - 1; ++j) acc += R(j + 1) * l[j + 1] * h.at(n - j);
        l[n + 1] = h.at(n + 1) - div_exact(acc, n + 1);
    }
    return Series<R>(std::move(l), k);
}

}  // namespace gcum::algebra
