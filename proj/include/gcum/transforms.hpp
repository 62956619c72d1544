#pragma once

#include <stdexcept>
#include <vector>

#include "gcum/partitions.hpp"
#include "gcum/ring.hpp"
#include "gcum/series.hpp"

namespace gcum::transforms {

using algebra::Ring;
using algebra::Series;

/// Sequences are stored 1-based-by-convention: values[l-1] is the l-th
/// cumulant / moment. Auxiliary sequences carry c_0 at index 0.

enum class Route { op, partitions, genfun };

namespace detail {

template <Ring R>
Series<R> seq_series(const std::vector<R>& s, int K) {
    // g(z) = s_1 + s_2 z + ... + s_K z^{K-1}
    std::vector<R> c(static_cast<size_t>(K), R(0));
    for (int i = 0; i < K && i < static_cast<int>(s.size()); ++i) c[static_cast<size_t>(i)] = s[static_cast<size_t>(i)];
    return Series<R>(std::move(c), K);
}

template <Ring R>
R partition_product(const gcum::partitions::SetPartition& pi, const std::vector<R>& vals) {
    R prod(1);
    for (const auto& b : pi.blocks) prod *= vals[b.size() - 1];
    return prod;
}

}  // namespace detail

/// m_k = [z^0] (d/dz + gamma*lower + mult-by-g)^{k-1} (g), g(z) = sum kappa_l z^{l-1}.
/// Truncation bookkeeping: the iterate loses one representable order per
/// operator application, so starting at order K keeps every reported
/// constant term exact.
template <Ring R>
std::vector<R> cumulants_to_moments_operator(const std::vector<R>& kappa, int K, const R& gamma) {
    if (static_cast<int>(kappa.size()) < K)
        throw std::invalid_argument("cumulants_to_moments_operator: need at least K cumulants");
    std::vector<R> m;
    if (K == 0) return m;
    Series<R> g = detail::seq_series(kappa, K);
    Series<R> h = g;
    m.push_back(h.at(0));
    for (int k = 2; k <= K; ++k) {
        h = derive(h) + gamma * lower(h) + h * g;
        m.push_back(h.at(0));
    }
    return m;
}

/// m_k = sum over set partitions of [k] of W(pi) * prod kappa_{|B|}.
template <Ring R>
std::vector<R> cumulants_to_moments_partitions(const std::vector<R>& kappa, int K, const R& gamma) {
    if (K > 10) throw std::invalid_argument("cumulants_to_moments_partitions: K must be <= 10");
    if (static_cast<int>(kappa.size()) < K)
        throw std::invalid_argument("cumulants_to_moments_partitions: need at least K cumulants");
    std::vector<R> m;
    for (int k = 1; k <= K; ++k) {
        R sum(0);
        gcum::partitions::enumerate_set_partitions(k, [&](const gcum::partitions::SetPartition& pi) {
            sum += gcum::partitions::weight_W_in(gcum::partitions::arc_stats(pi), gamma) *
                   detail::partition_product(pi, kappa);
        });
        m.push_back(sum);
    }
    return m;
}

/// [z^0] (d/dz + mult-by-a + gamma*lower)^{k-1} (g) computed both as the
/// operator iterate and as the refined-weight partition sum; the two must
/// agree identically, and the common value is returned.
template <Ring R>
R refined_transition(const std::vector<R>& kappa, const std::vector<R>& a, int k, const R& gamma) {
    if (k < 1 || k > 10) throw std::invalid_argument("refined_transition: k must be in 1..10");
    if (static_cast<int>(kappa.size()) < k)
        throw std::invalid_argument("refined_transition: need at least k kappa entries");
    if (static_cast<int>(a.size()) < k - 1)
        throw std::invalid_argument("refined_transition: need at least k-1 a entries");
    Series<R> g = detail::seq_series(kappa, k);
    Series<R> aser = detail::seq_series(a, k);
    Series<R> h = g;
    for (int step = 2; step <= k; ++step) h = derive(h) + gamma * lower(h) + h * aser;
    R lhs = h.at(0);

    R rhs(0);
    gcum::partitions::enumerate_set_partitions(k, [&](const gcum::partitions::SetPartition& pi) {
        rhs += gcum::partitions::refined_weight_w(pi, kappa, a, gamma);
    });
    if (!(lhs == rhs)) throw std::logic_error("refined_transition: operator and partition sides disagree");
    return lhs;
}

/// Inverse map: kappa_k = (m_k - forward(kappa_1..kappa_{k-1}, 0)_k) / (gamma+1)_{k-1}.
/// The ring must support the division (rational-function gamma, or numeric
/// gamma avoiding negative integers).
template <algebra::FieldRing R>
std::vector<R> moments_to_cumulants(const std::vector<R>& m, int K, const R& gamma,
                                    Route route = Route::op) {
    if (static_cast<int>(m.size()) < K)
        throw std::invalid_argument("moments_to_cumulants: need at least K moments");
    if (route == Route::genfun) throw std::invalid_argument("moments_to_cumulants: use genfun_roundtrip");
    std::vector<R> kappa;
    for (int k = 1; k <= K; ++k) {
        std::vector<R> padded = kappa;
        padded.push_back(R(0));
        std::vector<R> partial = (route == Route::partitions)
                                     ? cumulants_to_moments_partitions(padded, k, gamma)
                                     : cumulants_to_moments_operator(padded, k, gamma);
        kappa.push_back((m[static_cast<size_t>(k - 1)] - partial.back()) /
                        algebra::pochhammer(gamma + R(1), k - 1));
    }
    return kappa;
}

template <Ring R>
struct GenfunResult {
    std::vector<R> c;      // c_0..c_K
    std::vector<R> kappa;  // kappa_1..kappa_K
};

/// Moments -> auxiliary sequence -> cumulants through the two generating
/// identities: exp(gamma * sum m_k z^k / k) = sum c_n z^n and
/// exp(sum kappa_l z^l / l) = sum c_n z^n / (gamma)_n.
template <algebra::FieldRing R>
GenfunResult<R> genfun_roundtrip(const std::vector<R>& m, int K, const R& gamma) {
    if (static_cast<int>(m.size()) < K)
        throw std::invalid_argument("genfun_roundtrip: need at least K moments");
    Series<R> A(K + 1);
    for (int k = 1; k <= K; ++k) A.set(k, div_exact(gamma * m[static_cast<size_t>(k - 1)], k));
    Series<R> c = exp_series(A);
    GenfunResult<R> out;
    for (int n = 0; n <= K; ++n) out.c.push_back(c.at(n));
    Series<R> d(K + 1);
    d.set(0, R(1));
    for (int n = 1; n <= K; ++n) d.set(n, out.c[static_cast<size_t>(n)] / algebra::pochhammer(gamma, n));
    Series<R> L = log_series(d);
    for (int l = 1; l <= K; ++l) out.kappa.push_back(R(l) * L.at(l));
    return out;
}

/// Cumulants -> moments through the same pair of identities, read the other
/// way; requires gamma invertible.
template <algebra::FieldRing R>
std::vector<R> cumulants_to_moments_genfun(const std::vector<R>& kappa, int K, const R& gamma) {
    if (static_cast<int>(kappa.size()) < K)
        throw std::invalid_argument("cumulants_to_moments_genfun: need at least K cumulants");
    if (is_zero(gamma)) throw std::invalid_argument("cumulants_to_moments_genfun: gamma must be nonzero");
    Series<R> B(K + 1);
    for (int l = 1; l <= K; ++l) B.set(l, div_exact(kappa[static_cast<size_t>(l - 1)], l));
    Series<R> e = exp_series(B);
    Series<R> cser(K + 1);
    cser.set(0, R(1));
    for (int n = 1; n <= K; ++n) cser.set(n, algebra::pochhammer(gamma, n) * e.at(n));
    Series<R> L = log_series(cser);
    std::vector<R> m;
    for (int k = 1; k <= K; ++k) m.push_back(R(k) * L.at(k) / gamma);
    return m;
}

/// Moment sequence of the sum: invert both inputs, add cumulants, map back.
template <algebra::FieldRing R>
std::vector<R> gamma_convolve(const std::vector<R>& mA, const std::vector<R>& mB, int K, const R& gamma) {
    std::vector<R> ka = moments_to_cumulants(mA, K, gamma);
    std::vector<R> kb = moments_to_cumulants(mB, K, gamma);
    for (int i = 0; i < K; ++i) ka[static_cast<size_t>(i)] += kb[static_cast<size_t>(i)];
    return cumulants_to_moments_operator(ka, K, gamma);
}

/// Classical cumulants via C(z) = ln(1 + sum m_k z^k / k!); c_l = l! [z^l] C.
template <algebra::FieldRing R>
std::vector<R> classical_cumulants(const std::vector<R>& m, int K) {
    if (static_cast<int>(m.size()) < K)
        throw std::invalid_argument("classical_cumulants: need at least K moments");
    Series<R> M(K + 1);
    M.set(0, R(1));
    for (int k = 1; k <= K; ++k)
        M.set(k, div_exact(m[static_cast<size_t>(k - 1)], static_cast<long>(algebra::factorial_ll(k))));
    Series<R> C = log_series(M);
    std::vector<R> c;
    for (int l = 1; l <= K; ++l)
        c.push_back(R(static_cast<long>(algebra::factorial_ll(l))) * C.at(l));
    return c;
}

template <algebra::FieldRing R>
std::vector<R> classical_moments(const std::vector<R>& c, int K) {
    if (static_cast<int>(c.size()) < K)
        throw std::invalid_argument("classical_moments: need at least K cumulants");
    Series<R> C(K + 1);
    for (int l = 1; l <= K; ++l)
        C.set(l, div_exact(c[static_cast<size_t>(l - 1)], static_cast<long>(algebra::factorial_ll(l))));
    Series<R> M = exp_series(C);
    std::vector<R> m;
    for (int k = 1; k <= K; ++k)
        m.push_back(R(static_cast<long>(algebra::factorial_ll(k))) * M.at(k));
    return m;
}

/// Free moments: m_k = sum over non-crossing partitions of prod r_{|B|}.
template <Ring R>
std::vector<R> free_moments(const std::vector<R>& r, int K) {
    if (K > 10) throw std::invalid_argument("free_moments: K must be <= 10");
    if (static_cast<int>(r.size()) < K)
        throw std::invalid_argument("free_moments: need at least K free cumulants");
    std::vector<R> m;
    for (int k = 1; k <= K; ++k) {
        R sum(0);
        gcum::partitions::enumerate_set_partitions(k, [&](const gcum::partitions::SetPartition& pi) {
            if (gcum::partitions::is_noncrossing(pi)) sum += detail::partition_product(pi, r);
        });
        m.push_back(sum);
    }
    return m;
}

/// Free cumulants by the triangular recursion r_k = m_k - (non-crossing
/// sums with two or more blocks, which only involve r_1..r_{k-1}).
template <Ring R>
std::vector<R> free_cumulants(const std::vector<R>& m, int K) {
    if (K > 10) throw std::invalid_argument("free_cumulants: K must be <= 10");
    if (static_cast<int>(m.size()) < K)
        throw std::invalid_argument("free_cumulants: need at least K moments");
    std::vector<R> r;
    for (int k = 1; k <= K; ++k) {
        R lower_terms(0);
        gcum::partitions::enumerate_set_partitions(k, [&](const gcum::partitions::SetPartition& pi) {
            if (pi.block_count() >= 2 && gcum::partitions::is_noncrossing(pi))
                lower_terms += detail::partition_product(pi, r);
        });
        r.push_back(m[static_cast<size_t>(k - 1)] - lower_terms);
    }
    return r;
}

/// Companion-measure moments: c~_n = n! c_n / (gamma)_n from the auxiliary
/// sequence of the generating identities.
template <algebra::FieldRing R>
std::vector<R> markov_krein(const std::vector<R>& m, int K, const R& gamma) {
    GenfunResult<R> gf = genfun_roundtrip(m, K, gamma);
    std::vector<R> mt;
    for (int n = 1; n <= K; ++n)
        mt.push_back(R(static_cast<long>(algebra::factorial_ll(n))) * gf.c[static_cast<size_t>(n)] /
                     algebra::pochhammer(gamma, n));
    return mt;
}

namespace detail {
inline bool ge_one(const algebra::Rational& x) { return x >= algebra::Rational(1); }
inline bool ge_one(double x) { return x >= 1.0; }
}  // namespace detail

/// Projection to the gamma/tau calculus: same cumulants, reinterpreted.
template <algebra::FieldRing R>
std::vector<R> projection(const std::vector<R>& m, int K, const R& gamma, const R& tau) {
    if (!detail::ge_one(tau)) throw std::invalid_argument("projection: tau must be >= 1");
    std::vector<R> kappa = moments_to_cumulants(m, K, gamma);
    return cumulants_to_moments_operator(kappa, K, gamma / tau);
}

/// kappa_l = l * [z^l] F for the Taylor series F of a log ergodic function.
template <Ring R>
std::vector<R> ergodic_cumulants(const Series<R>& F) {
    if (F.truncation() < 1 || !is_zero(F.at(0)))
        throw std::invalid_argument("ergodic_cumulants: F must have zero constant term");
    std::vector<R> kappa;
    for (int l = 1; l < F.truncation(); ++l) kappa.push_back(R(l) * F.at(l));
    return kappa;
}

/// m_k = sum over non-crossing partitions of prod theta^{|B|-1} c_{|B|},
/// cross-checked against the equivalent residue formula
/// m_k = [z^k] (1 + u(z))^{k+1} / (k+1), u(z) = sum theta^{l-1} c_l z^l.
template <algebra::FieldRing R>
std::vector<R> fixed_theta_nc_moments(const std::vector<R>& c, const R& theta, int K) {
    if (K > 10) throw std::invalid_argument("fixed_theta_nc_moments: K must be <= 10");
    if (static_cast<int>(c.size()) < K)
        throw std::invalid_argument("fixed_theta_nc_moments: need at least K coefficients");
    std::vector<R> weighted;  // theta^{l-1} c_l
    R tp(1);
    for (int l = 1; l <= K; ++l) {
        weighted.push_back(tp * c[static_cast<size_t>(l - 1)]);
        tp *= theta;
    }
    std::vector<R> m;
    for (int k = 1; k <= K; ++k) {
        R nc_sum(0);
        gcum::partitions::enumerate_set_partitions(k, [&](const gcum::partitions::SetPartition& pi) {
            if (gcum::partitions::is_noncrossing(pi)) nc_sum += detail::partition_product(pi, weighted);
        });
        Series<R> one_plus_u(k + 1);
        one_plus_u.set(0, R(1));
        for (int l = 1; l <= k; ++l) one_plus_u.set(l, weighted[static_cast<size_t>(l - 1)]);
        Series<R> pw(k + 1);
        pw.set(0, R(1));
        for (int rep = 0; rep < k + 1; ++rep) pw = pw * one_plus_u;
        R residue = div_exact(pw.at(k), k + 1);
        if (!(nc_sum == residue))
            throw std::logic_error("fixed_theta_nc_moments: the two stated forms disagree");
        m.push_back(nc_sum);
    }
    return m;
}

/// Gaussian family: m_{2m} = sum over perfect matchings of (gamma+1)^{roof},
/// odd moments 0.
template <Ring R>
std::vector<R> gaussian_moments_matchings(int K, const R& gamma) {
    if (K > 16) throw std::invalid_argument("gaussian_moments_matchings: K must be <= 16");
    std::vector<R> m;
    for (int k = 1; k <= K; ++k) {
        if (k % 2 == 1) {
            m.push_back(R(0));
            continue;
        }
        R sum(0);
        gcum::partitions::enumerate_matchings(k, [&](const gcum::partitions::SetPartition& pi) {
            sum += ring_pow(gamma + R(1), static_cast<unsigned long>(gcum::partitions::roof_count(pi)));
        });
        m.push_back(sum);
    }
    return m;
}

}  // namespace gcum::transforms
