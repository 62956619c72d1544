#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gcum/dunkl.hpp"
#include "gcum/gamma_poly.hpp"
#include "gcum/rational.hpp"
#include "gcum/series.hpp"

namespace gcum::io {

using nlohmann::json;

/// Rationals travel as canonical "p" / "p/q" strings, so round-trips are
/// bit-exact.
inline json to_json(const algebra::Rational& r) { return json(r.str()); }

inline algebra::Rational rational_from_json(const json& j) {
    if (j.is_string()) return algebra::Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return algebra::Rational(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("rational_from_json: expected \"p/q\" string or integer");
}

/// GammaPoly: {"coeffs": ["p/q", ...], "truncation": count}; coefficient i
/// multiplies gamma^i and truncation is the stored coefficient count.
inline json to_json(const algebra::GammaPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return json{{"coeffs", std::move(coeffs)}, {"truncation", p.coeffs().size()}};
}

inline algebra::GammaPoly gamma_poly_from_json(const json& j) {
    std::vector<algebra::Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return algebra::GammaPoly(std::move(coeffs));
}

inline json to_json(const algebra::GammaRat& r) {
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline algebra::GammaRat gamma_rat_from_json(const json& j) {
    return algebra::GammaRat(gamma_poly_from_json(j.at("num")), gamma_poly_from_json(j.at("den")));
}

/// Series: {"coeffs": [...], "truncation": K} with exactly K coefficients
/// listed (zeros included), so parse(serialize(s)) == s.
inline json to_json(const algebra::Series<algebra::Rational>& s) {
    json coeffs = json::array();
    for (int i = 0; i < s.truncation(); ++i) coeffs.push_back(to_json(s.at(i)));
    return json{{"coeffs", std::move(coeffs)}, {"truncation", s.truncation()}};
}

inline json to_json(const algebra::Series<algebra::GammaPoly>& s) {
    json coeffs = json::array();
    for (int i = 0; i < s.truncation(); ++i) coeffs.push_back(to_json(s.at(i)));
    return json{{"coeffs", std::move(coeffs)}, {"truncation", s.truncation()}};
}

inline algebra::Series<algebra::Rational> rational_series_from_json(const json& j) {
    int k = j.at("truncation").get<int>();
    std::vector<algebra::Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return algebra::Series<algebra::Rational>(std::move(coeffs), k);
}

inline algebra::Series<algebra::GammaPoly> gamma_series_from_json(const json& j) {
    int k = j.at("truncation").get<int>();
    std::vector<algebra::GammaPoly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(gamma_poly_from_json(c));
    return algebra::Series<algebra::GammaPoly>(std::move(coeffs), k);
}

/// Symmetric Taylor coefficients: {"N": n, "coeffs": {"2": "p/q", "1,1": ...}}
/// keyed by comma-separated partition strings.
inline json to_json(int N, const dunkl::SymCoeffs<algebra::Rational>& F) {
    json coeffs = json::object();
    for (const auto& [mu, c] : F) coeffs[mu.str()] = to_json(c);
    return json{{"N", N}, {"coeffs", std::move(coeffs)}};
}

inline std::pair<int, dunkl::SymCoeffs<algebra::Rational>> sym_coeffs_from_json(const json& j) {
    int N = j.at("N").get<int>();
    dunkl::SymCoeffs<algebra::Rational> F;
    for (const auto& [key, val] : j.at("coeffs").items())
        F[dunkl::IntPartition::parse(key)] = rational_from_json(val);
    return {N, std::move(F)};
}

}  // namespace gcum::io
