#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcum/rational.hpp"
#include "gcum/rng.hpp"

namespace gcum::ensembles {

/// One draw of the N-point Gaussian beta-ensemble spectrum (beta = 2*theta),
/// joint density proportional to prod_{i<j}|a_j-a_i|^{2 theta} prod_i e^{-a_i^2/2}.
/// Sampled through the symmetric tridiagonal model; returned sorted ascending.
std::vector<double> sample_gbe(int N, double theta, rng::RngStream& rng);

/// One random sample of the permutation convolution: a_i + b_{sigma(i)} for a
/// uniformly random permutation sigma, returned sorted ascending.
std::vector<double> theta0_convolve_sample(const std::vector<double>& a,
                                           const std::vector<double>& b, rng::RngStream& rng);

/// Exact average of the empirical power sum p_k(a + b_sigma) over all N!
/// permutations sigma. Requires 1 <= N <= 7 and k >= 1.
algebra::Rational theta0_exhaustive_moment(const std::vector<algebra::Rational>& a,
                                           const std::vector<algebra::Rational>& b, int k);

/// One draw of the interlacing corner array with fixed top row `a` (strictly
/// increasing, N <= 3). Row k of the result has k entries; the last row is `a`.
std::vector<std::vector<double>> corners_sample_tiny_n(const std::vector<double>& a, double theta,
                                                       rng::RngStream& rng);

struct LlnConfig {
    int N = 0;
    algebra::Rational gamma;
    long samples = 0;
    std::uint64_t seed = 0;
    std::vector<int> orders;
    int max_workers = 0;  // 0 = use the environment / hardware budget
};

struct OrderReport {
    int order = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    double z = 0.0;
};

struct LlnReport {
    int N = 0;
    std::string gamma;
    double theta = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::vector<OrderReport> orders;
    std::vector<std::string> notes;
};

/// Empirical moments of the Gaussian beta ensemble at theta = gamma/N against
/// the gamma-cumulant targets (kappa_2 = 1, all other cumulants 0).
/// Deterministic given the config; independent of the worker count.
LlnReport run_lln(const LlnConfig& config);

}  // namespace gcum::ensembles
