#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gcum/multipoly.hpp"
#include "gcum/transforms.hpp"

using namespace gcum;
using algebra::GammaPoly;
using algebra::GammaRat;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Series;
using transforms::Route;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

std::vector<Rational> sample_kappa() {
    return {rat(2), rat(-1, 3), rat(5, 2), rat(0), rat(7, 4), rat(-3), rat(1, 6), rat(4)};
}

long binom(int n, int k) {
    return algebra::factorial_ll(n) / (algebra::factorial_ll(k) * algebra::factorial_ll(n - k));
}

}  // namespace

TEST_CASE("forward transition through degree 4 matches the closed forms, formally") {
    using P = MultiPoly<GammaPoly>;
    const GammaPoly g = GammaPoly::gamma();
    const GammaPoly gp1 = g + GammaPoly(1), gp2 = g + GammaPoly(2), gp3 = g + GammaPoly(3);
    const P x1 = P::var(1), x2 = P::var(2), x3 = P::var(3), x4 = P::var(4);
    const std::vector<P> kappa = {x1, x2, x3, x4};

    std::vector<P> m = transforms::cumulants_to_moments_operator(kappa, 4, P::constant(g));

    CHECK(m[0] == x1);
    CHECK(m[1] == gp1 * x2 + x1 * x1);
    CHECK(m[2] == (gp1 * gp2) * x3 + (GammaPoly(3) * gp1) * (x2 * x1) + x1 * x1 * x1);
    CHECK(m[3] == (gp1 * gp2 * gp3) * x4 + (GammaPoly(4) * gp1 * gp2) * (x3 * x1) +
                      (gp1 * (GammaPoly(2) * g + GammaPoly(3))) * (x2 * x2) +
                      (GammaPoly(6) * gp1) * (x2 * x1 * x1) + x1 * x1 * x1 * x1);

    CHECK(transforms::cumulants_to_moments_partitions(kappa, 4, P::constant(g)) == m);
}

TEST_CASE("inverse transition through degree 4 matches the closed forms, formally") {
    using Q = MultiPoly<GammaRat>;
    const GammaRat g = GammaRat::gamma();
    const GammaRat one(1);
    const GammaRat gp1 = g + one, gp2 = g + GammaRat(2), gp3 = g + GammaRat(3);
    const Q x1 = Q::var(1), x2 = Q::var(2), x3 = Q::var(3), x4 = Q::var(4);

    std::vector<Q> m =
        transforms::cumulants_to_moments_operator(std::vector<Q>{x1, x2, x3, x4}, 4, Q::constant(g));
    const Q &m1 = m[0], &m2 = m[1], &m3 = m[2], &m4 = m[3];

    CHECK((one / gp1) * (m2 - m1 * m1) == x2);
    CHECK((one / (gp1 * gp2)) * (m3 - GammaRat(3) * (m2 * m1) + GammaRat(2) * (m1 * m1 * m1)) == x3);
    CHECK((one / (gp1 * gp2 * gp3)) *
              (m4 - GammaRat(4) * (m3 * m1) - (GammaRat(2) + one / gp1) * (m2 * m2) +
               (GammaRat(10) + GammaRat(2) / gp1) * (m2 * m1 * m1) -
               (GammaRat(5) + one / gp1) * (m1 * m1 * m1 * m1)) == x4);
}

TEST_CASE("all three routes agree and invert each other") {
    const std::vector<Rational> kappa = sample_kappa();
    const int K = 8;
    const Rational gamma = rat(5, 3);

    std::vector<Rational> m_op = transforms::cumulants_to_moments_operator(kappa, K, gamma);
    CHECK(transforms::cumulants_to_moments_partitions(kappa, K, gamma) == m_op);
    CHECK(transforms::cumulants_to_moments_genfun(kappa, K, gamma) == m_op);

    CHECK(transforms::moments_to_cumulants(m_op, K, gamma, Route::op) == kappa);
    CHECK(transforms::moments_to_cumulants(m_op, K, gamma, Route::partitions) == kappa);
    CHECK(transforms::genfun_roundtrip(m_op, K, gamma).kappa == kappa);

    // Symbolic agreement: same identity over polynomials in gamma.
    const GammaPoly g = GammaPoly::gamma();
    std::vector<GammaPoly> ks;
    for (int l = 1; l <= 6; ++l) ks.push_back(GammaPoly(l % 3 == 0 ? -l : l));
    CHECK(transforms::cumulants_to_moments_operator(ks, 6, g) ==
          transforms::cumulants_to_moments_partitions(ks, 6, g));
}

TEST_CASE("moment prefixes do not depend on the truncation order") {
    const std::vector<Rational> kappa = sample_kappa();
    std::vector<Rational> m8 = transforms::cumulants_to_moments_operator(kappa, 8, rat(1, 2));
    std::vector<Rational> m5 = transforms::cumulants_to_moments_operator(kappa, 5, rat(1, 2));
    for (int i = 0; i < 5; ++i) CHECK(m8[static_cast<size_t>(i)] == m5[static_cast<size_t>(i)]);
}

TEST_CASE("route guards") {
    std::vector<Rational> kappa = sample_kappa();
    CHECK_THROWS_AS(transforms::cumulants_to_moments_operator(kappa, 9, rat(1)), std::invalid_argument);
    std::vector<Rational> long_kappa(12, rat(1));
    CHECK_THROWS_AS(transforms::cumulants_to_moments_partitions(long_kappa, 11, rat(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(transforms::cumulants_to_moments_genfun(kappa, 8, rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(transforms::moments_to_cumulants(kappa, 8, rat(1), Route::genfun),
                    std::invalid_argument);
}

TEST_CASE("refined transition: both sides agree and collapse when the sequences match") {
    std::vector<Rational> kappa = sample_kappa();
    std::vector<Rational> a = {rat(1, 2), rat(3), rat(-2, 5), rat(1), rat(0), rat(2, 7), rat(5)};

    // The call itself cross-checks operator and partition sides internally.
    for (int k = 1; k <= 6; ++k) CHECK_NOTHROW(transforms::refined_transition(kappa, a, k, rat(4, 3)));

    for (int k = 1; k <= 6; ++k)
        CHECK(transforms::refined_transition(kappa, kappa, k, rat(4, 3)) ==
              transforms::cumulants_to_moments_operator(kappa, k, rat(4, 3)).back());

    // Symbolic gamma, distinct sequences.
    const GammaPoly g = GammaPoly::gamma();
    std::vector<GammaPoly> ks = {GammaPoly(1), GammaPoly(2), GammaPoly(-1), GammaPoly(3)};
    std::vector<GammaPoly> as = {GammaPoly(5), GammaPoly(-2), GammaPoly(1)};
    for (int k = 1; k <= 4; ++k) CHECK_NOTHROW(transforms::refined_transition(ks, as, k, g));

    CHECK_THROWS_AS(transforms::refined_transition(kappa, a, 0, rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(transforms::refined_transition(kappa, a, 11, rat(1)), std::invalid_argument);
    std::vector<Rational> short_a = {rat(1)};
    CHECK_THROWS_AS(transforms::refined_transition(kappa, short_a, 5, rat(1)), std::invalid_argument);
}

TEST_CASE("convolution is commutative, associative, and neutral at the zero sequence") {
    const int K = 6;
    const Rational gamma = rat(1, 2);
    std::vector<Rational> mA = {rat(1), rat(2), rat(3, 2), rat(5), rat(-1), rat(7, 3)};
    std::vector<Rational> mB = {rat(-1, 2), rat(4), rat(0), rat(9, 4), rat(2), rat(-3)};
    std::vector<Rational> mC = {rat(2, 3), rat(1), rat(1), rat(0), rat(5, 6), rat(1, 9)};
    std::vector<Rational> zero(K, rat(0));

    CHECK(transforms::gamma_convolve(mA, mB, K, gamma) == transforms::gamma_convolve(mB, mA, K, gamma));
    CHECK(transforms::gamma_convolve(mA, zero, K, gamma) == mA);
    CHECK(transforms::gamma_convolve(transforms::gamma_convolve(mA, mB, K, gamma), mC, K, gamma) ==
          transforms::gamma_convolve(mA, transforms::gamma_convolve(mB, mC, K, gamma), K, gamma));

    // Cumulants add across the convolution.
    std::vector<Rational> ka = transforms::moments_to_cumulants(mA, K, gamma);
    std::vector<Rational> kb = transforms::moments_to_cumulants(mB, K, gamma);
    std::vector<Rational> ks = transforms::moments_to_cumulants(
        transforms::gamma_convolve(mA, mB, K, gamma), K, gamma);
    for (int i = 0; i < K; ++i)
        CHECK(ks[static_cast<size_t>(i)] == ka[static_cast<size_t>(i)] + kb[static_cast<size_t>(i)]);
}

TEST_CASE("zero-parameter specialization reduces to the classical calculus") {
    const int K = 6;
    std::vector<Rational> m = {rat(1), rat(3), rat(2, 5), rat(-4), rat(11, 2), rat(6)};

    // Cumulants at parameter 0 are classical cumulants rescaled by (l-1)!.
    std::vector<Rational> k0 = transforms::moments_to_cumulants(m, K, rat(0));
    std::vector<Rational> cl = transforms::classical_cumulants(m, K);
    for (int l = 1; l <= K; ++l)
        CHECK(k0[static_cast<size_t>(l - 1)] ==
              cl[static_cast<size_t>(l - 1)] / Rational(algebra::factorial_ll(l - 1)));

    // Convolution at parameter 0 is the binomial convolution (m_0 = 1).
    std::vector<Rational> mB = {rat(-1), rat(2), rat(1, 3), rat(5), rat(0), rat(-2)};
    std::vector<Rational> conv = transforms::gamma_convolve(m, mB, K, rat(0));
    for (int k = 1; k <= K; ++k) {
        Rational expect(0);
        for (int s = 0; s <= k; ++s) {
            Rational va = (s == 0) ? rat(1) : m[static_cast<size_t>(s - 1)];
            Rational vb = (s == k) ? rat(1) : mB[static_cast<size_t>(k - s - 1)];
            expect += Rational(binom(k, s)) * va * vb;
        }
        CHECK(conv[static_cast<size_t>(k - 1)] == expect);
    }
}

TEST_CASE("classical transforms on known sequences") {
    // Standard normal moments give a single nonzero cumulant.
    std::vector<Rational> mg = {rat(0), rat(1), rat(0), rat(3), rat(0), rat(15)};
    CHECK(transforms::classical_cumulants(mg, 6) ==
          std::vector<Rational>{rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)});

    // Unit-rate Poisson moments (Bell numbers) give all-ones cumulants.
    std::vector<Rational> mp = {rat(1), rat(2), rat(5), rat(15)};
    CHECK(transforms::classical_cumulants(mp, 4) ==
          std::vector<Rational>{rat(1), rat(1), rat(1), rat(1)});

    std::vector<Rational> c = {rat(2), rat(-1, 2), rat(3), rat(1, 4), rat(0), rat(5)};
    CHECK(transforms::classical_cumulants(transforms::classical_moments(c, 6), 6) == c);
}

TEST_CASE("noncrossing moment map and its triangular inverse") {
    std::vector<Rational> semi = {rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)};
    CHECK(transforms::free_moments(semi, 6) ==
          std::vector<Rational>{rat(0), rat(1), rat(0), rat(2), rat(0), rat(5)});

    std::vector<Rational> r = sample_kappa();
    CHECK(transforms::free_cumulants(transforms::free_moments(r, 8), 8) == r);

    std::vector<Rational> big(11, rat(1));
    CHECK_THROWS_AS(transforms::free_moments(big, 11), std::invalid_argument);
    CHECK_THROWS_AS(transforms::free_cumulants(big, 11), std::invalid_argument);
}

TEST_CASE("companion sequence fixes point masses") {
    // All moments a^k: the auxiliary coefficients are (gamma)_n a^n / n!,
    // so the companion sequence is again a^n.
    const Rational a = rat(2, 3);
    std::vector<Rational> m;
    Rational pw(1);
    for (int k = 1; k <= 8; ++k) {
        pw *= a;
        m.push_back(pw);
    }
    std::vector<Rational> mt = transforms::markov_krein(m, 8, rat(3, 2));
    Rational expect(1);
    for (int n = 1; n <= 8; ++n) {
        expect *= a;
        CHECK(mt[static_cast<size_t>(n - 1)] == expect);
    }
}

TEST_CASE("projection keeps cumulants while rescaling the parameter") {
    const int K = 6;
    const Rational gamma = rat(3), tau = rat(2);
    std::vector<Rational> m = {rat(1), rat(2), rat(0), rat(4), rat(-1), rat(3, 2)};

    CHECK(transforms::projection(m, K, gamma, rat(1)) == m);
    std::vector<Rational> proj = transforms::projection(m, K, gamma, tau);
    CHECK(transforms::moments_to_cumulants(proj, K, gamma / tau) ==
          transforms::moments_to_cumulants(m, K, gamma));
    CHECK_THROWS_AS(transforms::projection(m, K, gamma, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("log-series coefficients turn into cumulants by multiplying by the order") {
    Series<Rational> F(4);
    F.set(1, rat(1, 2));
    F.set(2, rat(1, 3));
    F.set(3, rat(5));
    CHECK(transforms::ergodic_cumulants(F) == std::vector<Rational>{rat(1, 2), rat(2, 3), rat(15)});

    Series<Rational> bad(3);
    bad.set(0, rat(1));
    CHECK_THROWS_AS(transforms::ergodic_cumulants(bad), std::invalid_argument);
}

TEST_CASE("fixed-parameter noncrossing moments: closed checks and special values") {
    const Rational theta = rat(2);
    std::vector<Rational> c = {rat(1), rat(1), rat(1), rat(1)};
    // m_1 = c_1, m_2 = theta c_2 + c_1^2, m_3 = theta^2 c_3 + 3 theta c_2 c_1 + c_1^3.
    std::vector<Rational> m = transforms::fixed_theta_nc_moments(c, theta, 3);
    CHECK(m[0] == rat(1));
    CHECK(m[1] == rat(3));
    CHECK(m[2] == rat(11));

    // At parameter 1 this is exactly the noncrossing moment map.
    std::vector<Rational> r = sample_kappa();
    CHECK(transforms::fixed_theta_nc_moments(r, rat(1), 8) == transforms::free_moments(r, 8));

    std::vector<Rational> big(11, rat(1));
    CHECK_THROWS_AS(transforms::fixed_theta_nc_moments(big, theta, 11), std::invalid_argument);
}

TEST_CASE("Gaussian moments by matchings: symbolic values and both scaling limits") {
    const GammaPoly g = GammaPoly::gamma();
    const GammaPoly gp1 = g + GammaPoly(1);
    std::vector<GammaPoly> m = transforms::gaussian_moments_matchings(8, g);

    CHECK(m[0] == GammaPoly(0));
    CHECK(m[1] == gp1);
    CHECK(m[2] == GammaPoly(0));
    CHECK(m[3] == GammaPoly(2) * gp1 * gp1 + gp1);
    CHECK(m[4] == GammaPoly(0));
    CHECK(m[6] == GammaPoly(0));

    // Same values through the partition route with the quadratic cumulant.
    std::vector<GammaPoly> ks(8, GammaPoly(0));
    ks[1] = GammaPoly(1);
    CHECK(transforms::cumulants_to_moments_partitions(ks, 8, g) == m);

    // Parameter 0 collapses to double factorials.
    std::vector<Rational> m0 = transforms::gaussian_moments_matchings(8, rat(0));
    CHECK(m0[1] == rat(1));
    CHECK(m0[3] == rat(3));
    CHECK(m0[5] == rat(15));
    CHECK(m0[7] == rat(105));

    CHECK_THROWS_AS(transforms::gaussian_moments_matchings(17, rat(0)), std::invalid_argument);
}
