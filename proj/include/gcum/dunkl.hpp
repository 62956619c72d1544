#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcum/multipoly.hpp"
#include "gcum/ring.hpp"

namespace gcum::dunkl {

using algebra::MultiPoly;
using algebra::Ring;

/// Integer partition: weakly decreasing positive parts.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    IntPartition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit IntPartition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    void validate() const {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("IntPartition: parts must be positive");
            if (i && parts[i] > parts[i - 1])
                throw std::invalid_argument("IntPartition: parts must be weakly decreasing");
        }
    }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const IntPartition& a, const IntPartition& b) { return a.parts == b.parts; }
    friend bool operator<(const IntPartition& a, const IntPartition& b) { return a.parts < b.parts; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }
    static IntPartition parse(const std::string& text) {
        std::vector<int> p;
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) p.push_back(std::stoi(tok));
        return IntPartition(std::move(p));
    }
};

/// Coefficients of a symmetric Taylor expansion: partition -> coefficient of
/// the monomial symmetric polynomial M_mu.
template <Ring R>
using SymCoeffs = std::map<IntPartition, R>;

/// D_i h = d h/d x_i + theta * sum_{j != i} (h - s_{ij} h)/(x_i - x_j),
/// acting on polynomials in x_1..x_N. Exact; lowers total degree by one on
/// homogeneous input.
template <Ring R>
MultiPoly<R> dunkl_apply(int i, const MultiPoly<R>& h, const R& theta, int N) {
    if (i < 1 || i > N) throw std::invalid_argument("dunkl_apply: index out of range");
    MultiPoly<R> out = h.deriv(i);
    MultiPoly<R> exch;
    for (int j = 1; j <= N; ++j) {
        if (j == i) continue;
        exch += h.divided_difference(i, j);
    }
    out += theta * exch;
    return out;
}

/// P_k h = sum_i D_i^k h.
template <Ring R>
MultiPoly<R> pk_apply(int k, const MultiPoly<R>& h, const R& theta, int N) {
    if (k < 1) throw std::invalid_argument("pk_apply: k must be >= 1");
    MultiPoly<R> out;
    for (int i = 1; i <= N; ++i) {
        MultiPoly<R> cur = h;
        for (int s = 0; s < k; ++s) cur = dunkl_apply(i, cur, theta, N);
        out += cur;
    }
    return out;
}

namespace detail {

/// One Dunkl application through the exponential: with the state H standing
/// for H * exp(F), D_i maps it to (dH/dx_i + H dF/dx_i + theta * exchange
/// terms of H) * exp(F); the symmetric F passes through the exchange part
/// untouched. Terms of degree above `budget` can never reach the final
/// constant term and are dropped.
template <Ring R>
MultiPoly<R> dunkl_apply_exp(int i, const MultiPoly<R>& H, const std::vector<MultiPoly<R>>& dF,
                             const R& theta, int N, int budget) {
    MultiPoly<R> out = H.deriv(i);
    out += mul_trunc(H, dF[static_cast<size_t>(i - 1)], budget);
    MultiPoly<R> exch;
    for (int j = 1; j <= N; ++j) {
        if (j == i) continue;
        exch += H.divided_difference(i, j);
    }
    out += theta * exch;
    return out.truncate_degree(budget);
}

}  // namespace detail

template <Ring R>
MultiPoly<R> build_sym_poly(const SymCoeffs<R>& F, int N, int max_degree) {
    MultiPoly<R> poly;
    for (const auto& [mu, c] : F) {
        if (mu.length() > N)
            throw std::invalid_argument("build_sym_poly: partition longer than variable count");
        if (mu.size() > max_degree) continue;  // cannot influence the requested order
        poly += c * algebra::monomial_symmetric<R>(mu.parts, N);
    }
    return poly;
}

/// N^{-len(lambda)} * [prod_i P_{lambda_i}] exp(F) evaluated at x = 0,
/// computed exactly by carrying the polynomial prefactor H of exp(F)
/// through the product rule; exp(F) itself is never materialized.
template <algebra::FieldRing R>
R apply_to_exp(const IntPartition& lambda, const SymCoeffs<R>& F, int N, const R& theta) {
    if (lambda.length() > N) throw std::invalid_argument("apply_to_exp: more parts than variables");
    if (N < 1) throw std::invalid_argument("apply_to_exp: N must be >= 1");
    int k = lambda.size();
    MultiPoly<R> Fp = build_sym_poly(F, N, k);
    std::vector<MultiPoly<R>> dF;
    for (int i = 1; i <= N; ++i) dF.push_back(Fp.deriv(i));

    MultiPoly<R> H(1);
    int remaining = k;
    for (int part : lambda.parts) {
        MultiPoly<R> next;
        for (int i = 1; i <= N; ++i) {
            MultiPoly<R> Hi = H;
            for (int s = 1; s <= part; ++s)
                Hi = detail::dunkl_apply_exp(i, Hi, dF, theta, N, remaining - s);
            next += Hi;
        }
        H = next;
        remaining -= part;
    }
    return H.constant_term() / ring_pow(R(N), static_cast<unsigned long>(lambda.length()));
}

/// Coefficient of c_F^mu in the linear part of the expansion of
/// N^{-len(lambda)} [prod P_{lambda_i}] exp(F)|_0: extracted as
/// [prod_{i=2..len(lambda)} D_i^{lambda_i}] D_1^{lambda_1 - 1} (d/dx_1) M_mu,
/// which is a degree-0 polynomial, hence an exact ring element.
template <Ring R>
R leading_coefficient_b(const IntPartition& lambda, const IntPartition& mu, int N, const R& theta) {
    if (lambda.length() < 1) throw std::invalid_argument("leading_coefficient_b: empty partition");
    if (lambda.size() != mu.size())
        throw std::invalid_argument("leading_coefficient_b: partition sizes must match");
    if (mu.length() > N || lambda.length() > N)
        throw std::invalid_argument("leading_coefficient_b: more parts than variables");
    MultiPoly<R> h = algebra::monomial_symmetric<R>(mu.parts, N);
    h = h.deriv(1);
    for (int s = 1; s < lambda.parts[0]; ++s) h = dunkl_apply(1, h, theta, N);
    for (int i = 2; i <= lambda.length(); ++i)
        for (int s = 0; s < lambda.parts[static_cast<size_t>(i - 1)]; ++s)
            h = dunkl_apply(i, h, theta, N);
    if (h.total_degree() > 0)
        throw std::logic_error("leading_coefficient_b: nonconstant residue");
    return h.constant_term();
}

}  // namespace gcum::dunkl
