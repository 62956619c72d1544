#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gcum/bessel.hpp"
#include "gcum/transforms.hpp"
#include "hciz.hpp"

using namespace gcum;
using algebra::Rational;
using algebra::Series;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

}  // namespace

TEST_CASE("the two coefficient routes for the spectral generating product agree") {
    std::vector<Rational> a = {rat(2), rat(-1, 3), rat(5, 2), rat(0), rat(7, 4)};
    const Rational theta = rat(3, 7);
    CHECK(bessel::moment_gen_ck(a, theta, 8) == bessel::product_ck(a, theta, 8));

    // Empty spectrum: the product is identically 1.
    std::vector<Rational> none;
    Series<Rational> one = bessel::moment_gen_ck(none, theta, 5);
    CHECK(one.at(0) == rat(1));
    for (int k = 1; k <= 5; ++k) CHECK(one.at(k) == rat(0));

    // Constant spectrum collapses to a single binomial series.
    std::vector<Rational> cc = {rat(3, 2), rat(3, 2), rat(3, 2)};
    Series<Rational> c = bessel::moment_gen_ck(cc, theta, 6);
    Rational am(1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(c.at(k) == algebra::pochhammer(rat(9, 7), k) * am / Rational(algebra::factorial_ll(k)));
        am *= rat(3, 2);
    }
}

TEST_CASE("one-variable Bessel series on closed-form spectra") {
    // Single point a: the series is exp(a y).
    std::vector<Rational> single = {rat(3, 4)};
    Series<Rational> b = bessel::mbf_one_var_series(single, rat(2), 6);
    Rational pw(1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(b.at(k) == pw / Rational(algebra::factorial_ll(k)));
        pw *= rat(3, 4);
    }

    // Constant spectrum c: exp(c y) for every theta.
    std::vector<Rational> cc = {rat(5, 2), rat(5, 2), rat(5, 2)};
    b = bessel::mbf_one_var_series(cc, rat(1, 2), 5);
    pw = rat(1);
    for (int k = 0; k <= 5; ++k) {
        CHECK(b.at(k) == pw / Rational(algebra::factorial_ll(k)));
        pw *= rat(5, 2);
    }

    // Two-point spectrum {0,1} at parameter 1: (exp(y) - 1) / y.
    std::vector<Rational> zo = {rat(0), rat(1)};
    b = bessel::mbf_one_var_series(zo, rat(1), 5);
    for (int k = 0; k <= 5; ++k) CHECK(b.at(k) == rat(1) / Rational(algebra::factorial_ll(k + 1)));

    CHECK_THROWS_AS(bessel::mbf_one_var_series(single, rat(2), 0), std::invalid_argument);
}

TEST_CASE("shifting the whole spectrum multiplies the series by an exponential") {
    std::vector<Rational> a = {rat(1, 2), rat(-1), rat(3)};
    const Rational theta = rat(2, 5), c = rat(2, 3);
    const int K = 8;

    std::vector<Rational> shifted;
    for (const Rational& ai : a) shifted.push_back(ai + c);

    Series<Rational> cz(K + 1);
    cz.set(1, c);
    Series<Rational> lhs = bessel::mbf_one_var_series(shifted, theta, K);
    Series<Rational> rhs = exp_series(cz) * bessel::mbf_one_var_series(a, theta, K);
    CHECK(lhs == rhs);
}

TEST_CASE("log-derivatives of the Bessel series") {
    // Point spectrum: the log is linear.
    std::vector<Rational> single = {rat(2)};
    CHECK(bessel::ln_bgf_derivs(single, rat(3), 4) ==
          std::vector<Rational>{rat(2), rat(0), rat(0), rat(0)});

    // Spectrum symmetric under negation: all odd derivatives vanish exactly.
    std::vector<Rational> sym = {rat(-1), rat(1)};
    std::vector<Rational> d = bessel::ln_bgf_derivs(sym, rat(1, 3), 6);
    CHECK(d[0] == rat(0));
    CHECK(d[2] == rat(0));
    CHECK(d[4] == rat(0));
    CHECK(d[1] != rat(0));
}

TEST_CASE("determinantal evaluation at parameter 1 matches closed forms and the series") {
    // Spectrum {0,1}, one active variable y: B = (exp(y) - 1) / y.
    std::vector<Rational> a = {rat(0), rat(1)};
    double v = bessel::hciz_theta1(a, {rat(1, 2), rat(0)});
    CHECK(v == doctest::Approx(2.0 * (std::exp(0.5) - 1.0)).epsilon(1e-13));

    // Precision independence: 256-bit and 512-bit runs agree.
    std::vector<Rational> a3 = {rat(0), rat(1), rat(2)};
    std::vector<Rational> x3 = {rat(1, 3), rat(1, 1024), rat(1, 512)};
    double v256 = bessel::hciz_theta1(a3, x3, 256);
    double v512 = bessel::hciz_theta1(a3, x3, 512);
    CHECK(v256 == doctest::Approx(v512).epsilon(1e-14));

    CHECK_THROWS_AS(bessel::hciz_theta1({rat(1), rat(1)}, {rat(0), rat(1)}), std::domain_error);
    CHECK_THROWS_AS(bessel::hciz_theta1({rat(0), rat(1)}, {rat(2), rat(2)}), std::domain_error);
    CHECK_THROWS_AS(bessel::hciz_theta1(a, {rat(1), rat(0)}, 32), std::invalid_argument);
}

TEST_CASE("Dirichlet Monte-Carlo estimator: exact cases, determinism, accuracy") {
    std::vector<double> a = {0.0, 1.0};

    bessel::McEstimate at_zero = bessel::mbf_dirichlet_mc(a, 1.0, 0.0, 500, 42);
    CHECK(at_zero.estimate == 1.0);
    CHECK(at_zero.std_error == 0.0);

    // Constant spectrum: the weights sum to 1, so every sample is exp(c y).
    bessel::McEstimate flat = bessel::mbf_dirichlet_mc({0.7, 0.7, 0.7}, 0.5, 1.3, 400, 7);
    CHECK(flat.estimate == doctest::Approx(std::exp(0.7 * 1.3)).epsilon(1e-12));
    CHECK(flat.std_error < 1e-12);

    // Pure function of (inputs, seed), independent of worker count.
    bessel::McEstimate r1 = bessel::mbf_dirichlet_mc(a, 1.0, 1.0, 20000, 123, 1);
    bessel::McEstimate r3 = bessel::mbf_dirichlet_mc(a, 1.0, 1.0, 20000, 123, 3);
    CHECK(r1.estimate == r3.estimate);
    CHECK(r1.std_error == r3.std_error);
    CHECK(r1.samples == 20000);

    // Within 4 standard errors of (exp(1) - 1) / 1.
    double truth = std::exp(1.0) - 1.0;
    CHECK(r1.std_error > 0.0);
    CHECK(std::abs(r1.estimate - truth) < 4.0 * r1.std_error);

    CHECK_THROWS_AS(bessel::mbf_dirichlet_mc(a, 1.0, 1.0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bessel::mbf_dirichlet_mc(a, 0.0, 1.0, 10, 1), std::invalid_argument);
}

TEST_CASE("log series of the ergodic family on its closed-form cases") {
    using EP = bessel::ErgodicParams<Rational>;

    // Quadratic-only exponent: log series z^2 / 2.
    EP gauss;
    gauss.theta = rat(2, 3);
    gauss.delta2 = gauss.theta;
    Series<Rational> f = bessel::ergodic_F(gauss, 5);
    CHECK(f.at(1) == rat(0));
    CHECK(f.at(2) == rat(1, 2));
    for (int l = 3; l <= 5; ++l) CHECK(f.at(l) == rat(0));

    // M equal atoms at theta with matching drift: log series of (1-z)^{-M theta},
    // so every cumulant equals M theta.
    EP atoms;
    atoms.theta = rat(2, 7);
    atoms.alphas = {atoms.theta, atoms.theta, atoms.theta};
    atoms.delta1 = rat(6, 7);
    f = bessel::ergodic_F(atoms, 6);
    CHECK(f.at(1) == rat(6, 7));
    for (int l = 2; l <= 6; ++l) CHECK(f.at(l) == rat(6, 7) / Rational(l));
    std::vector<Rational> kappa = transforms::ergodic_cumulants(f);
    for (const Rational& k : kappa) CHECK(k == rat(6, 7));

    // Everything zero: identically zero log.
    EP trivial;
    f = bessel::ergodic_F(trivial, 4);
    for (int l = 0; l <= 4; ++l) CHECK(f.at(l) == rat(0));
}
