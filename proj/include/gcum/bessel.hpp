#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gcum/parallel.hpp"
#include "gcum/ring.hpp"
#include "gcum/rng.hpp"
#include "gcum/series.hpp"

namespace gcum::bessel {

using algebra::Ring;
using algebra::Series;

/// Coefficients c_0..c_K of prod_i (1 - a_i z)^{-theta} via the power-sum
/// route: exp(theta * sum_m p_m z^m / m) with p_m = sum_i a_i^m.
template <Ring R>
Series<R> moment_gen_ck(const std::vector<R>& a, const R& theta, int K) {
    Series<R> A(K + 1);
    for (int m = 1; m <= K; ++m) {
        R pm(0);
        for (const R& ai : a) pm += ring_pow(ai, static_cast<unsigned long>(m));
        A.set(m, div_exact(theta * pm, m));
    }
    return exp_series(A);
}

/// Same coefficients by expanding each factor as the binomial series
/// (1 - a z)^{-theta} = sum_m (theta)_m a^m z^m / m! and Cauchy-multiplying;
/// an independent code path kept as a self-test oracle.
template <algebra::FieldRing R>
Series<R> product_ck(const std::vector<R>& a, const R& theta, int K) {
    Series<R> acc(K + 1);
    acc.set(0, R(1));
    for (const R& ai : a) {
        Series<R> factor(K + 1);
        R am(1);
        for (int m = 0; m <= K; ++m) {
            factor.set(m, div_exact(algebra::pochhammer(theta, m) * am,
                                    static_cast<long>(algebra::factorial_ll(m))));
            am *= ai;
        }
        acc = acc * factor;
    }
    return acc;
}

/// y-series of the one-nonzero-variable Bessel function with spectrum a:
/// coefficient k is c_k / (theta * N)_k, N = len(a).
template <algebra::FieldRing R>
Series<R> mbf_one_var_series(const std::vector<R>& a, const R& theta, int K) {
    if (K < 1) throw std::invalid_argument("mbf_one_var_series: K must be >= 1");
    R thetaN = theta * R(static_cast<long>(a.size()));
    Series<R> c = moment_gen_ck(a, theta, K);
    Series<R> b(K + 1);
    for (int k = 0; k <= K; ++k) b.set(k, c.at(k) / algebra::pochhammer(thetaN, k));
    return b;
}

/// l-th derivatives at 0 of the log of the one-variable Bessel series,
/// l = 1..L: returns l! * [y^l] log B.
template <algebra::FieldRing R>
std::vector<R> ln_bgf_derivs(const std::vector<R>& a, const R& theta, int L) {
    Series<R> b = mbf_one_var_series(a, theta, L);
    Series<R> lg = log_series(b);
    std::vector<R> d;
    for (int l = 1; l <= L; ++l)
        d.push_back(R(static_cast<long>(algebra::factorial_ll(l))) * lg.at(l));
    return d;
}

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long samples = 0;
};

/// Monte-Carlo evaluation of the same value through the Dirichlet identity:
/// B(y, 0^{N-1}) = E exp(y * sum a_i eta_i), eta ~ Dirichlet(theta,...,theta).
/// Sample s uses substream s of the seed, partials are accumulated in fixed
/// chunk order, so the result is a pure function of (inputs, seed).
inline McEstimate mbf_dirichlet_mc(const std::vector<double>& a, double theta, double y,
                                   long samples, uint64_t seed, int max_workers = 0) {
    if (samples < 1) throw std::invalid_argument("mbf_dirichlet_mc: samples must be >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("mbf_dirichlet_mc: theta must be positive");
    int n = static_cast<int>(a.size());
    struct Partial {
        double sum = 0.0, sumsq = 0.0;
    };
    auto chunk = [&](size_t begin, size_t end) {
        Partial p;
        for (size_t s = begin; s < end; ++s) {
            rng::RngStream rs = rng::RngStream::substream(seed, s);
            std::vector<double> eta = rs.dirichlet(theta, n);
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += a[static_cast<size_t>(i)] * eta[static_cast<size_t>(i)];
            double x = std::exp(y * dot);
            p.sum += x;
            p.sumsq += x * x;
        }
        return p;
    };
    auto partials = par::chunked_partials<Partial>(static_cast<size_t>(samples), chunk, max_workers);
    double sum = 0.0, sumsq = 0.0;
    for (const auto& p : partials) {
        sum += p.sum;
        sumsq += p.sumsq;
    }
    McEstimate out;
    out.samples = samples;
    out.estimate = sum / static_cast<double>(samples);
    if (samples > 1) {
        double var = (sumsq - sum * sum / static_cast<double>(samples)) / static_cast<double>(samples - 1);
        if (var < 0.0) var = 0.0;
        out.std_error = std::sqrt(var / static_cast<double>(samples));
    }
    return out;
}

template <Ring R>
struct ErgodicParams {
    std::vector<R> alphas;
    R delta1 = R(0);
    R delta2 = R(0);
    R theta = R(1);
};

/// Taylor series of ln F for the ergodic family
/// F(z) = exp(delta1 z + delta2 z^2/(2 theta)) * prod_i exp(-alpha_i z) / (1 - (alpha_i/theta) z)^theta:
/// coefficient 1 is delta1 (the alpha terms cancel at order 1), coefficient 2
/// is (delta2 + sum alpha_i^2)/(2 theta), and order l >= 3 contributes
/// (theta/l) * sum (alpha_i/theta)^l. Formal in z; numerically the radius is
/// limited by max |alpha_i/theta| < 1.
template <algebra::FieldRing R>
Series<R> ergodic_F(const ErgodicParams<R>& params, int K) {
    Series<R> f(K + 1);
    if (K >= 1) f.set(1, params.delta1);
    if (K >= 2) {
        R a2(0);
        for (const R& al : params.alphas) a2 += al * al;
        f.set(2, (params.delta2 + a2) / (R(2) * params.theta));
    }
    for (int l = 3; l <= K; ++l) {
        R s(0);
        for (const R& al : params.alphas) s += ring_pow(al / params.theta, static_cast<unsigned long>(l));
        f.set(l, div_exact(params.theta * s, l));
    }
    return f;
}

}  // namespace gcum::bessel
