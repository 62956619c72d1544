#include "ensembles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gcum/parallel.hpp"
#include "gcum/transforms.hpp"

namespace gcum::ensembles {

std::vector<double> sample_gbe(int N, double theta, rng::RngStream& rng) {
    if (N < 1) throw std::invalid_argument("sample_gbe: N must be >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("sample_gbe: theta must be positive");
    Eigen::VectorXd diag(N), sub(std::max(N - 1, 0));
    for (int i = 0; i < N; ++i) diag[i] = rng.normal();
    // Off-diagonal i (1-based) is chi_{2 theta (N-i)} / sqrt(2), i.e. the square
    // root of a Gamma(theta*(N-i), 1) variate.
    for (int i = 1; i <= N - 1; ++i) sub[i - 1] = std::sqrt(rng.gamma_shape(theta * (N - i)));
    if (N == 1) return {diag[0]};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("sample_gbe: eigensolver failed");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + N);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> theta0_convolve_sample(const std::vector<double>& a,
                                           const std::vector<double>& b, rng::RngStream& rng) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("theta0_convolve_sample: spectra must have equal positive size");
    size_t n = a.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    // Fisher-Yates with the pinned stream; std::shuffle is implementation-defined.
    for (size_t i = n - 1; i > 0; --i) {
        size_t j = static_cast<size_t>(rng.uniform01() * static_cast<double>(i + 1));
        if (j > i) j = i;
        std::swap(perm[i], perm[j]);
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[perm[i]];
    std::sort(out.begin(), out.end());
    return out;
}

algebra::Rational theta0_exhaustive_moment(const std::vector<algebra::Rational>& a,
                                           const std::vector<algebra::Rational>& b, int k) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("theta0_exhaustive_moment: spectra must have equal positive size");
    if (a.size() > 7) throw std::invalid_argument("theta0_exhaustive_moment: N must be <= 7");
    if (k < 1) throw std::invalid_argument("theta0_exhaustive_moment: order must be >= 1");
    size_t n = a.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    algebra::Rational total(0);
    long count = 0;
    do {
        algebra::Rational pk(0);
        for (size_t i = 0; i < n; ++i) {
            algebra::Rational s = a[i] + b[perm[i]];
            pk = pk + algebra::ring_pow(s, k);
        }
        total = total + pk;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Average of p_k = (1/N) sum s_i^k over all N! permutations.
    return total / (algebra::Rational(static_cast<long>(n)) * algebra::Rational(count));
}

namespace {

double beta_theta_theta(double theta, rng::RngStream& rng) {
    double g1 = rng.gamma_shape(theta);
    double g2 = rng.gamma_shape(theta);
    double s = g1 + g2;
    while (!(s > 0.0)) {
        g1 = rng.gamma_shape(theta);
        g2 = rng.gamma_shape(theta);
        s = g1 + g2;
    }
    return g1 / s;
}

}  // namespace

std::vector<std::vector<double>> corners_sample_tiny_n(const std::vector<double>& a, double theta,
                                                       rng::RngStream& rng) {
    size_t N = a.size();
    if (N < 1 || N > 3) throw std::invalid_argument("corners_sample_tiny_n: N must be in 1..3");
    if (!(theta > 0.0)) throw std::invalid_argument("corners_sample_tiny_n: theta must be positive");
    for (size_t i = 0; i + 1 < N; ++i)
        if (!(a[i] < a[i + 1]))
            throw std::invalid_argument("corners_sample_tiny_n: top row must be strictly increasing");

    if (N == 1) return {{a[0]}};
    if (N == 2) {
        // The single free coordinate has a Beta(theta,theta) law on [a1,a2].
        double v = a[0] + (a[1] - a[0]) * beta_theta_theta(theta, rng);
        return {{v}, {a[0], a[1]}};
    }

    // N == 3. Proposal: u1 ~ Beta(theta,theta) on [a1,a2], u2 ~ Beta(theta,theta)
    // on [a2,a3], v ~ Beta(theta,theta) on [u1,u2]. The target/proposal ratio
    // reduces to (u2-u1) * (a3-u1)^(theta-1) * (u2-a1)^(theta-1); bound each
    // factor over its range (monotone in the argument, direction set by theta).
    double lo1 = a[2] - a[1], hi1 = a[2] - a[0];  // range of a3-u1
    double lo2 = a[1] - a[0], hi2 = a[2] - a[0];  // range of u2-a1
    double e = theta - 1.0;
    double bound = (a[2] - a[0]) * std::pow(e >= 0.0 ? hi1 : lo1, e) *
                   std::pow(e >= 0.0 ? hi2 : lo2, e);
    for (;;) {
        double u1 = a[0] + (a[1] - a[0]) * beta_theta_theta(theta, rng);
        double u2 = a[1] + (a[2] - a[1]) * beta_theta_theta(theta, rng);
        if (!(u2 > u1)) continue;
        double ratio = (u2 - u1) * std::pow(a[2] - u1, e) * std::pow(u2 - a[0], e);
        if (rng.uniform01() * bound <= ratio) {
            double v = u1 + (u2 - u1) * beta_theta_theta(theta, rng);
            return {{v}, {u1, u2}, {a[0], a[1], a[2]}};
        }
    }
}

LlnReport run_lln(const LlnConfig& config) {
    if (config.N < 1) throw std::invalid_argument("run_lln: N must be >= 1");
    if (config.samples < 1) throw std::invalid_argument("run_lln: samples must be >= 1");
    if (!(config.gamma > algebra::Rational(0)))
        throw std::invalid_argument("run_lln: gamma must be positive");
    if (config.orders.empty()) throw std::invalid_argument("run_lln: no orders requested");
    for (int k : config.orders)
        if (k < 1) throw std::invalid_argument("run_lln: orders must be >= 1");

    int K = *std::max_element(config.orders.begin(), config.orders.end());
    // Targets: moments of the limit measure, whose cumulant sequence is
    // kappa_2 = 1 and 0 otherwise.
    std::vector<algebra::Rational> kappa(static_cast<size_t>(K), algebra::Rational(0));
    if (K >= 2) kappa[1] = algebra::Rational(1);
    std::vector<algebra::Rational> targets =
        transforms::cumulants_to_moments_operator(kappa, K, config.gamma);

    algebra::Rational theta_rat = config.gamma / algebra::Rational(static_cast<long>(config.N));
    double theta = theta_rat.to_double();

    struct Partial {
        std::vector<double> sum, sumsq;
    };
    size_t norders = config.orders.size();
    auto chunk_fn = [&](size_t begin, size_t end) {
        Partial p;
        p.sum.assign(norders, 0.0);
        p.sumsq.assign(norders, 0.0);
        for (size_t s = begin; s < end; ++s) {
            rng::RngStream stream = rng::RngStream::substream(config.seed, s);
            std::vector<double> spec = sample_gbe(config.N, theta, stream);
            for (size_t oi = 0; oi < norders; ++oi) {
                double pk = 0.0;
                for (double lambda : spec) pk += std::pow(lambda, config.orders[oi]);
                pk /= static_cast<double>(config.N);
                p.sum[oi] += pk;
                p.sumsq[oi] += pk * pk;
            }
        }
        return p;
    };
    std::vector<Partial> partials = par::chunked_partials<Partial>(
        static_cast<size_t>(config.samples), chunk_fn, config.max_workers);

    LlnReport report;
    report.N = config.N;
    report.gamma = config.gamma.str();
    report.theta = theta;
    report.samples = config.samples;
    report.seed = config.seed;
    double n = static_cast<double>(config.samples);
    for (size_t oi = 0; oi < norders; ++oi) {
        double sum = 0.0, sumsq = 0.0;
        for (const Partial& p : partials) {
            sum += p.sum[oi];
            sumsq += p.sumsq[oi];
        }
        OrderReport r;
        r.order = config.orders[oi];
        r.mean = sum / n;
        double var = config.samples > 1 ? std::max(0.0, (sumsq - n * r.mean * r.mean) / (n - 1.0))
                                        : 0.0;
        r.std_error = std::sqrt(var / n);
        r.target = targets[static_cast<size_t>(r.order - 1)].to_double();
        r.z = r.std_error > 0.0 ? (r.mean - r.target) / r.std_error : 0.0;
        report.orders.push_back(r);
    }
    if (theta >= 0.25)
        report.notes.push_back(
            "theta = gamma/N = " + std::to_string(theta) +
            " is not small; the high-temperature targets describe the regime theta -> 0");
    return report;
}

}  // namespace gcum::ensembles
