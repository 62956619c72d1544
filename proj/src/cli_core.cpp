#include "cli_core.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gcum/bessel.hpp"
#include "gcum/dunkl.hpp"
#include "gcum/gamma_poly.hpp"
#include "gcum/json_io.hpp"
#include "gcum/multipoly.hpp"
#include "gcum/partitions.hpp"
#include "gcum/rng.hpp"
#include "gcum/transforms.hpp"
#include "ensembles.hpp"
#include "hciz.hpp"

namespace gcum::cli {

using nlohmann::json;
using algebra::GammaPoly;
using algebra::GammaRat;
using algebra::Rational;

const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        case Status::error: return "error";
    }
    return "error";
}

int exit_code(const CommandResult& r) {
    switch (r.status) {
        case Status::ok: return 0;
        case Status::mismatch: return 1;
        case Status::error: return 2;
    }
    return 2;
}

namespace {

CommandResult run_timed(const std::function<Status(json&)>& body) {
    CommandResult result;
    auto start = std::chrono::steady_clock::now();
    try {
        result.status = body(result.payload);
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.payload["error"] = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    result.payload["status"] = status_name(result.status);
    result.payload["elapsed_ms"] = result.elapsed_ms;
    return result;
}

Rational random_rational(rng::RngStream& rng) {
    long num = static_cast<long>(rng.next_u64() % 19u) - 9;  // -9..9
    long den = static_cast<long>(rng.next_u64() % 9u) + 1;   // 1..9
    return Rational(num) / Rational(den);
}

std::vector<Rational> random_sequence(rng::RngStream& rng, int K) {
    std::vector<Rational> s;
    for (int i = 0; i < K; ++i) s.push_back(random_rational(rng));
    return s;
}

std::string sym_str(const GammaRat& r) {
    if (r.den() == GammaPoly(1)) return r.num().str();
    return r.str();
}

// ---- transform command -----------------------------------------------------

std::vector<Rational> parse_sequence(const json& input, const char* key, int K) {
    if (!input.contains(key))
        throw std::invalid_argument(std::string("transform: missing \"") + key + "\" array");
    const json& arr = input.at(key);
    if (!arr.is_array())
        throw std::invalid_argument(std::string("transform: \"") + key + "\" must be an array");
    if (static_cast<int>(arr.size()) > K)
        throw std::invalid_argument(std::string("transform: \"") + key + "\" longer than K");
    std::vector<Rational> seq;
    for (const json& v : arr) seq.push_back(io::rational_from_json(v));
    seq.resize(static_cast<size_t>(K), Rational(0));
    return seq;
}

struct RouteRun {
    std::string name;
    std::vector<std::string> values;  // printable
    std::vector<GammaRat> sym;        // symbolic comparisons
    std::vector<Rational> num;        // numeric comparisons
};

template <typename T>
json values_json(const std::vector<T>& values, const std::function<std::string(const T&)>& str) {
    json arr = json::array();
    for (const T& v : values) arr.push_back(str(v));
    return arr;
}

// Runs one named route; `applicable` explains a skip when empty result.
struct TransformPlan {
    bool symbolic = false;
    Rational gamma;  // numeric mode only
    int K = 0;
    bool k2m = false;
    std::vector<Rational> seq;
};

bool route_applicable(const TransformPlan& plan, const std::string& route, std::string& why) {
    if (route == "partitions" && plan.K > 10) {
        why = "partitions route needs K <= 10 (Bell growth)";
        return false;
    }
    if (route == "genfun" && !plan.symbolic && algebra::is_zero(plan.gamma)) {
        why = "genfun route needs gamma != 0";
        return false;
    }
    return true;
}

RouteRun run_route(const TransformPlan& plan, const std::string& route) {
    RouteRun run;
    run.name = route;
    if (plan.symbolic) {
        std::vector<GammaRat> seq;
        for (const Rational& v : plan.seq) seq.emplace_back(v);
        GammaRat g = GammaRat::gamma();
        std::vector<GammaRat> out;
        if (plan.k2m) {
            if (route == "operator")
                out = transforms::cumulants_to_moments_operator(seq, plan.K, g);
            else if (route == "partitions")
                out = transforms::cumulants_to_moments_partitions(seq, plan.K, g);
            else
                out = transforms::cumulants_to_moments_genfun(seq, plan.K, g);
        } else {
            if (route == "operator")
                out = transforms::moments_to_cumulants(seq, plan.K, g, transforms::Route::op);
            else if (route == "partitions")
                out = transforms::moments_to_cumulants(seq, plan.K, g, transforms::Route::partitions);
            else
                out = transforms::genfun_roundtrip(seq, plan.K, g).kappa;
        }
        run.sym = std::move(out);
        for (const GammaRat& v : run.sym) run.values.push_back(sym_str(v));
    } else {
        std::vector<Rational> out;
        if (plan.k2m) {
            if (route == "operator")
                out = transforms::cumulants_to_moments_operator(plan.seq, plan.K, plan.gamma);
            else if (route == "partitions")
                out = transforms::cumulants_to_moments_partitions(plan.seq, plan.K, plan.gamma);
            else
                out = transforms::cumulants_to_moments_genfun(plan.seq, plan.K, plan.gamma);
        } else {
            if (route == "operator")
                out = transforms::moments_to_cumulants(plan.seq, plan.K, plan.gamma,
                                                       transforms::Route::op);
            else if (route == "partitions")
                out = transforms::moments_to_cumulants(plan.seq, plan.K, plan.gamma,
                                                       transforms::Route::partitions);
            else
                out = transforms::genfun_roundtrip(plan.seq, plan.K, plan.gamma).kappa;
        }
        run.num = std::move(out);
        for (const Rational& v : run.num) run.values.push_back(v.str());
    }
    return run;
}

bool routes_equal(const TransformPlan& plan, const RouteRun& a, const RouteRun& b, int& bad_order,
                  std::string& diff) {
    for (int i = 0; i < plan.K; ++i) {
        bool eq;
        std::string d;
        if (plan.symbolic) {
            eq = a.sym[i] == b.sym[i];
            if (!eq) d = sym_str(a.sym[i] - b.sym[i]);
        } else {
            eq = a.num[i] == b.num[i];
            if (!eq) d = (a.num[i] - b.num[i]).str();
        }
        if (!eq) {
            bad_order = i + 1;
            diff = d;
            return false;
        }
    }
    return true;
}

}  // namespace

CommandResult cmd_transform(const std::string& direction, const json& input,
                            const std::string& route) {
    return run_timed([&](json& payload) -> Status {
        if (direction != "k2m" && direction != "m2k")
            throw std::invalid_argument("transform: direction must be k2m or m2k");
        if (route != "operator" && route != "partitions" && route != "genfun" && route != "all")
            throw std::invalid_argument("transform: route must be operator|partitions|genfun|all");
        if (!input.contains("K")) throw std::invalid_argument("transform: missing \"K\"");
        TransformPlan plan;
        plan.K = input.at("K").get<int>();
        if (plan.K < 1) throw std::invalid_argument("transform: K must be >= 1");
        plan.k2m = direction == "k2m";
        const json& gj = input.contains("gamma") ? input.at("gamma") : json("symbolic");
        if (gj.is_string() && gj.get<std::string>() == "symbolic") {
            plan.symbolic = true;
        } else {
            plan.gamma = io::rational_from_json(gj);
        }
        plan.seq = parse_sequence(input, plan.k2m ? "kappa" : "moments", plan.K);

        payload["direction"] = direction;
        payload["K"] = plan.K;
        payload["gamma"] = plan.symbolic ? json("symbolic") : json(plan.gamma.str());
        json notes = json::array();

        std::vector<RouteRun> runs;
        if (route == "all") {
            for (const char* r : {"operator", "partitions", "genfun"}) {
                std::string why;
                if (route_applicable(plan, r, why)) {
                    runs.push_back(run_route(plan, r));
                } else {
                    notes.push_back(std::string("skipped ") + r + ": " + why);
                }
            }
        } else {
            std::string why;
            if (!route_applicable(plan, route, why))
                throw std::invalid_argument("transform: " + why);
            runs.push_back(run_route(plan, route));
        }

        json used = json::array();
        for (const RouteRun& r : runs) used.push_back(r.name);
        payload["routes"] = used;
        payload["notes"] = notes;

        for (size_t i = 1; i < runs.size(); ++i) {
            int bad = 0;
            std::string diff;
            if (!routes_equal(plan, runs[0], runs[i], bad, diff)) {
                payload["mismatch"] = {
                    {"route_a", runs[0].name},     {"route_b", runs[i].name},
                    {"order", bad},                {"value_a", runs[0].values[bad - 1]},
                    {"value_b", runs[i].values[bad - 1]}, {"difference", diff}};
                return Status::mismatch;
            }
        }
        payload["values"] = runs[0].values;
        return Status::ok;
    });
}

// ---- verify command --------------------------------------------------------

namespace {

struct Suite {
    json checks = json::array();
    int passed = 0;
    int total = 0;
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(json{{"name", name}, {"ok", ok}, {"detail", detail}});
        ++total;
        if (ok) ++passed;
    }
};

void suite_routes(std::uint64_t seed, Suite& s) {
    rng::RngStream rng(seed);
    const int K = 8;
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Rational> kap = random_sequence(rng, K);
        std::vector<GammaPoly> kg;
        for (const Rational& v : kap) kg.emplace_back(v);
        auto m_op = transforms::cumulants_to_moments_operator(kg, K, GammaPoly::gamma());
        auto m_pa = transforms::cumulants_to_moments_partitions(kg, K, GammaPoly::gamma());
        bool ok = m_op == m_pa;
        auto m1 = transforms::cumulants_to_moments_operator(kap, K, Rational(1));
        ok = ok && transforms::genfun_roundtrip(m1, K, Rational(1)).kappa == kap;
        ok = ok && transforms::moments_to_cumulants(m1, K, Rational(1),
                                                    transforms::Route::partitions) == kap;
        s.check("route-agreement-" + std::to_string(iter), ok);
    }
}

void suite_descent(std::uint64_t, Suite& s) {
    int bad = 0, cases = 0;
    for (int N = 0; N <= 10; ++N)
        for (int M = 0; M <= N; ++M) {
            GammaPoly lhs = partitions::descent_sum(N, M);
            GammaPoly rhs = algebra::pochhammer(GammaPoly::gamma() + GammaPoly(1 + N - M),
                                                static_cast<long>(M));
            ++cases;
            if (!(lhs == rhs)) ++bad;
        }
    s.check("descent-identity", bad == 0,
            std::to_string(cases - bad) + "/" + std::to_string(cases));
}

void suite_weights(std::uint64_t, Suite& s) {
    GammaPoly g = GammaPoly::gamma();
    auto p1 = partitions::parse_partition("1 2 5 7 | 3 4 6");
    GammaPoly w1 = (g + GammaPoly(1)) * (g + GammaPoly(2)) * (g + GammaPoly(2)) * (g + GammaPoly(3));
    s.check("weight-example-1", partitions::weight_W(p1) == w1);
    auto p2 = partitions::parse_partition("1 4 | 2 6 | 3 5 7");
    GammaPoly w2 = GammaPoly(2) * (g + GammaPoly(1));
    s.check("weight-example-2", partitions::weight_W(p2) == w2);
    auto p3 = partitions::parse_partition("1 3 4 5 6 | 2 7");
    GammaPoly w3 =
        (g + GammaPoly(1)) * (g + GammaPoly(2)) * (g + GammaPoly(3)) * (g + GammaPoly(4));
    s.check("weight-example-3", partitions::weight_W(p3) == w3);
}

Rational binomial(int n, int k) {
    return Rational(algebra::factorial_ll(n)) /
           (Rational(algebra::factorial_ll(k)) * Rational(algebra::factorial_ll(n - k)));
}

void suite_limits(std::uint64_t seed, Suite& s) {
    rng::RngStream rng(seed);
    const int K = 6;
    // At gamma = 0 the cumulants are classical cumulants over (l-1)!.
    {
        std::vector<Rational> m = random_sequence(rng, K);
        auto k0 = transforms::moments_to_cumulants(m, K, Rational(0));
        auto c = transforms::classical_cumulants(m, K);
        bool ok = true;
        for (int l = 1; l <= K; ++l)
            ok = ok && k0[l - 1] == c[l - 1] / Rational(algebra::factorial_ll(l - 1));
        s.check("classical-cumulant-scaling", ok);
    }
    // gamma = 0 convolution is the binomial moment formula.
    {
        std::vector<Rational> mA = random_sequence(rng, K);
        std::vector<Rational> mB = random_sequence(rng, K);
        auto conv = transforms::gamma_convolve(mA, mB, K, Rational(0));
        bool ok = true;
        for (int k = 1; k <= K; ++k) {
            Rational want(0);
            for (int t = 0; t <= k; ++t) {
                Rational ma = t == 0 ? Rational(1) : mA[t - 1];
                Rational mb = t == k ? Rational(1) : mB[k - t - 1];
                want = want + binomial(k, t) * ma * mb;
            }
            ok = ok && conv[k - 1] == want;
        }
        s.check("binomial-convolution", ok);
    }
    // Semicircle scaling: kappa_2 = 1/gamma drives even moments to Catalan numbers.
    {
        std::vector<Rational> catalan = {Rational(1), Rational(2), Rational(5)};
        std::vector<Rational> prev_err;
        bool ok = true;
        for (long gv : {10L, 100L, 1000L}) {
            Rational gamma(gv);
            std::vector<Rational> kappa(K, Rational(0));
            kappa[1] = Rational(1) / gamma;
            auto m = transforms::cumulants_to_moments_operator(kappa, K, gamma);
            std::vector<Rational> err;
            for (int j = 0; j < 3; ++j) err.push_back(algebra::abs(m[2 * j + 1] - catalan[j]));
            if (!prev_err.empty())
                for (int j = 0; j < 3; ++j) ok = ok && err[j] < prev_err[j];
            prev_err = err;
        }
        s.check("free-limit-catalan", ok);
    }
    // Free moment/cumulant pair on the semicircle sequence.
    {
        std::vector<Rational> r = {Rational(0), Rational(1), Rational(0),
                                   Rational(0), Rational(0), Rational(0)};
        auto m = transforms::free_moments(r, K);
        std::vector<Rational> semicircle = {Rational(0), Rational(1), Rational(0),
                                            Rational(2), Rational(0), Rational(5)};
        bool ok = m == semicircle && transforms::free_cumulants(m, K) == r;
        s.check("free-moment-roundtrip", ok);
    }
}

void suite_dunkl(std::uint64_t seed, Suite& s) {
    rng::RngStream rng(seed);
    using MP = algebra::MultiPoly<Rational>;
    const int N = 3;
    for (int iter = 0; iter < 2; ++iter) {
        MP h;
        for (int t = 0; t < 6; ++t) {
            std::vector<int> e(N);
            for (int& x : e) x = static_cast<int>(rng.next_u64() % 4u);
            h += MP::monomial(e, random_rational(rng));
        }
        Rational theta = Rational(static_cast<long>(rng.next_u64() % 9u) + 1) / Rational(7);
        MP a = dunkl::dunkl_apply(1, dunkl::dunkl_apply(2, h, theta, N), theta, N);
        MP b = dunkl::dunkl_apply(2, dunkl::dunkl_apply(1, h, theta, N), theta, N);
        s.check("commutativity-" + std::to_string(iter), a == b);
    }
    {
        Rational theta = Rational(1) / Rational(3);
        MP m21 = algebra::monomial_symmetric<Rational>({2, 1}, N);
        MP p2 = dunkl::pk_apply(2, m21, theta, N);
        bool ok = p2.swap_vars(1, 2) == p2 && p2.swap_vars(2, 3) == p2;
        s.check("symmetric-image", ok);
    }
    {
        // Quadratic exponent with coefficient 1/2: moments of the Gaussian ensemble.
        dunkl::SymCoeffs<Rational> F;
        F[dunkl::IntPartition{2}] = Rational(1) / Rational(2);
        bool ok = true;
        for (long n : {4L, 8L}) {
            Rational theta = Rational(1) / Rational(n);
            Rational got = dunkl::apply_to_exp(dunkl::IntPartition{2}, F, static_cast<int>(n), theta);
            Rational want = Rational(1) + theta * Rational(n - 1);
            ok = ok && got == want;
            Rational got11 =
                dunkl::apply_to_exp(dunkl::IntPartition{1, 1}, F, static_cast<int>(n), theta);
            ok = ok && got11 == Rational(1) / Rational(n);
        }
        s.check("gaussian-exponent-moments", ok);
    }
    {
        Rational theta = Rational(1) / Rational(3);
        Rational got = dunkl::leading_coefficient_b(dunkl::IntPartition{2}, dunkl::IntPartition{2},
                                                    8, theta);
        Rational want = Rational(2) * (Rational(1) + theta * Rational(7));
        s.check("leading-coefficient", got == want);
    }
}

void suite_bessel(std::uint64_t seed, Suite& s) {
    rng::RngStream rng(seed);
    const int K = 8;
    {
        bool ok = true;
        for (int iter = 0; iter < 3; ++iter) {
            std::vector<Rational> a = random_sequence(rng, 5);
            Rational theta = Rational(static_cast<long>(rng.next_u64() % 5u) + 1) / Rational(3);
            ok = ok && bessel::moment_gen_ck(a, theta, K) == bessel::product_ck(a, theta, K);
        }
        s.check("powersum-vs-product", ok);
    }
    {
        std::vector<Rational> a = random_sequence(rng, 4);
        Rational c = random_rational(rng);
        Rational theta = Rational(1) / Rational(2);
        std::vector<Rational> shifted;
        for (const Rational& ai : a) shifted.push_back(ai + c);
        algebra::Series<Rational> expc(K + 1);
        expc.set(1, c);
        bool ok = bessel::mbf_one_var_series(shifted, theta, K) ==
                  bessel::mbf_one_var_series(a, theta, K) * algebra::exp_series(expc);
        s.check("shift-covariance", ok);
    }
    {
        Rational c = Rational(3) / Rational(4);
        auto one_var = bessel::mbf_one_var_series(std::vector<Rational>{c}, Rational(2), K);
        auto constant =
            bessel::mbf_one_var_series(std::vector<Rational>{c, c, c}, Rational(1) / Rational(2), K);
        bool ok = true;
        Rational ck(1);
        for (int k = 0; k <= K; ++k) {
            Rational want = ck / Rational(algebra::factorial_ll(k));
            ok = ok && one_var.at(k) == want && constant.at(k) == want;
            ck *= c;
        }
        s.check("exponential-special-cases", ok);
    }
    {
        double y = 0.5;
        double det2 = bessel::hciz_theta1({Rational(0), Rational(1)},
                                          {Rational(0), Rational(1) / Rational(2)});
        double closed = (std::exp(y) - 1.0) / y;
        bool ok = std::fabs(det2 - closed) < 1e-10 * std::fabs(closed);
        // N=3 against the series: x = (1/2, eps, 2 eps) with a tiny exact eps.
        std::vector<Rational> a3 = {Rational(0), Rational(1), Rational(2)};
        Rational eps = Rational(1) / Rational(1099511627776L);  // 2^-40
        double det3 = bessel::hciz_theta1(
            a3, {Rational(1) / Rational(2), eps, eps + eps});
        auto series = bessel::mbf_one_var_series(a3, Rational(1), 40);
        double sv = 0.0, yp = 1.0;
        for (int k = 0; k <= 40; ++k) {
            sv += series.at(k).to_double() * yp;
            yp *= y;
        }
        ok = ok && std::fabs(det3 - sv) < 1e-8 * std::fabs(sv);
        s.check("determinant-vs-series", ok);
    }
    {
        auto series = bessel::mbf_one_var_series({Rational(0), Rational(1)}, Rational(1), 30);
        double sv = 0.0;
        for (int k = 30; k >= 0; --k) sv = sv * 1.0 + series.at(k).to_double();
        auto mc = bessel::mbf_dirichlet_mc({0.0, 1.0}, 1.0, 1.0, 20000, seed + 1);
        bool ok = std::fabs(mc.estimate - sv) < 4.0 * mc.std_error;
        s.check("dirichlet-mc", ok,
                "estimate " + std::to_string(mc.estimate) + " vs " + std::to_string(sv));
    }
}

void suite_appendix(std::uint64_t seed, Suite& s) {
    using MP = algebra::MultiPoly<Rational>;
    {
        bool ok = true;
        for (int N : {2, 3}) {
            MP sum;
            for (int i = 1; i <= N; ++i) sum += MP::var(i);
            MP F = (Rational(static_cast<long>(N)) / Rational(2)) * mul_trunc(sum, sum, 4);
            MP H = algebra::exp_trunc(F, 4);
            MP L = algebra::log_trunc(H, 4);
            // d^2/dx1 dx2 at 0 over N must be exactly 1.
            std::vector<int> e = {1, 1};
            Rational val = L.coeff(e) / Rational(static_cast<long>(N));
            ok = ok && val == Rational(1);
        }
        s.check("log-exp-cross-derivative", ok);
    }
    {
        rng::RngStream rng(seed);
        std::vector<Rational> c = random_sequence(rng, 8);
        bool ok = true;
        for (const Rational& theta :
             {Rational(1) / Rational(2), Rational(1), Rational(2)}) {
            // Throws internally if the two stated forms disagree.
            auto m = transforms::fixed_theta_nc_moments(c, theta, 8);
            ok = ok && m[0] == c[0];
            ok = ok && m[1] == theta * c[1] + c[0] * c[0];
        }
        s.check("fixed-theta-dual-forms", ok);
    }
}

}  // namespace

CommandResult cmd_verify(const std::string& suite, std::uint64_t seed) {
    return run_timed([&](json& payload) -> Status {
        static const std::map<std::string, void (*)(std::uint64_t, Suite&)> registry = {
            {"routes", suite_routes},   {"descent", suite_descent},
            {"weights", suite_weights}, {"limits", suite_limits},
            {"dunkl", suite_dunkl},     {"bessel", suite_bessel},
            {"appendix", suite_appendix}};
        auto it = registry.find(suite);
        if (it == registry.end())
            throw std::invalid_argument("verify: unknown suite \"" + suite + "\"");
        Suite s;
        it->second(seed, s);
        payload["suite"] = suite;
        payload["seed"] = seed;
        payload["checks"] = s.checks;
        payload["passed"] = s.passed;
        payload["total"] = s.total;
        return s.passed == s.total ? Status::ok : Status::mismatch;
    });
}

// ---- LLN command -----------------------------------------------------------

CommandResult cmd_run_lln(int N, const std::string& gamma, long samples, std::uint64_t seed,
                          const std::vector<int>& orders) {
    return run_timed([&](json& payload) -> Status {
        ensembles::LlnConfig cfg;
        cfg.N = N;
        cfg.gamma = Rational::parse(gamma);
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.orders = orders;
        ensembles::LlnReport rep = ensembles::run_lln(cfg);
        payload["N"] = rep.N;
        payload["gamma"] = rep.gamma;
        payload["theta"] = rep.theta;
        payload["samples"] = rep.samples;
        payload["seed"] = rep.seed;
        json arr = json::array();
        bool all_within = true;
        for (const ensembles::OrderReport& r : rep.orders) {
            arr.push_back(json{{"order", r.order},
                               {"mean", r.mean},
                               {"std_error", r.std_error},
                               {"target", r.target},
                               {"z", r.z}});
            if (std::fabs(r.z) > 4.0) all_within = false;
        }
        payload["orders"] = arr;
        json notes = rep.notes;
        if (!all_within)
            notes.push_back("some empirical mean deviates from its target by more than 4 SE");
        payload["notes"] = notes;
        return all_within ? Status::ok : Status::mismatch;
    });
}

// ---- bessel command --------------------------------------------------------

Rational parse_number(const std::string& token) {
    std::string t;
    for (char ch : token)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("parse_number: empty token");
    if (t.find('/') != std::string::npos) return Rational::parse(t);

    size_t pos = 0;
    std::string sign;
    if (t[pos] == '+' || t[pos] == '-') {
        if (t[pos] == '-') sign = "-";
        ++pos;
    }
    std::string digits, frac;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) digits += t[pos++];
    if (pos < t.size() && t[pos] == '.') {
        ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) frac += t[pos++];
    }
    long expo = 0;
    if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
        ++pos;
        bool neg = false;
        if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) neg = t[pos++] == '-';
        std::string ed;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ed += t[pos++];
        if (ed.empty()) throw std::invalid_argument("parse_number: bad exponent in '" + token + "'");
        expo = std::stol(ed);
        if (neg) expo = -expo;
    }
    if (pos != t.size() || (digits.empty() && frac.empty()))
        throw std::invalid_argument("parse_number: cannot parse '" + token + "'");
    long net = expo - static_cast<long>(frac.size());
    std::string num = digits + frac;
    if (num.find_first_not_of('0') == std::string::npos) return Rational(0);
    std::string den = "1";
    if (net >= 0)
        num.append(static_cast<size_t>(net), '0');
    else
        den.append(static_cast<size_t>(-net), '0');
    return Rational::parse(sign + num + "/" + den);
}

std::vector<Rational> read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spectrum file: " + path);
    std::vector<Rational> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(parse_number(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

CommandResult cmd_bessel(const std::string& spectrum_path, const std::string& theta, int order,
                         int derivs) {
    return run_timed([&](json& payload) -> Status {
        std::vector<Rational> a = read_spectrum_file(spectrum_path);
        if (a.empty()) throw std::invalid_argument("bessel: spectrum file is empty");
        Rational th = Rational::parse(theta);
        if (!(th > Rational(0))) throw std::invalid_argument("bessel: theta must be positive");
        if (order < 1) throw std::invalid_argument("bessel: order must be >= 1");
        int L = derivs > 0 ? derivs : order;
        if (L > order) throw std::invalid_argument("bessel: derivs must be <= order");
        auto series = bessel::mbf_one_var_series(a, th, order);
        auto lnd = bessel::ln_bgf_derivs(a, th, L);
        payload["N"] = a.size();
        payload["theta"] = th.str();
        payload["order"] = order;
        payload["series"] = io::to_json(series);
        json derivs_arr = json::array();
        for (const Rational& d : lnd) derivs_arr.push_back(d.str());
        payload["log_derivs"] = derivs_arr;
        return Status::ok;
    });
}

}  // namespace gcum::cli
