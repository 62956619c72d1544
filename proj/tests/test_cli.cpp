#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cli_core.hpp"
#include "gcum/json_io.hpp"

using namespace gcum;
using algebra::GammaPoly;
using algebra::GammaRat;
using algebra::Rational;
using cli::Status;
using nlohmann::json;

namespace {

Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/gcum_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("status names and exit codes") {
    CHECK(std::string(cli::status_name(Status::ok)) == "ok");
    CHECK(std::string(cli::status_name(Status::mismatch)) == "mismatch");
    CHECK(std::string(cli::status_name(Status::error)) == "error");

    cli::CommandResult r;
    r.status = Status::ok;
    CHECK(cli::exit_code(r) == 0);
    r.status = Status::mismatch;
    CHECK(cli::exit_code(r) == 1);
    r.status = Status::error;
    CHECK(cli::exit_code(r) == 2);
}

TEST_CASE("transform command: symbolic forward run across all routes") {
    json input = {{"gamma", "symbolic"}, {"K", 4}, {"kappa", {"0", "1"}}};
    cli::CommandResult r = cli::cmd_transform("k2m", input, "all");

    CHECK(r.status == Status::ok);
    CHECK(r.payload["status"] == "ok");
    CHECK(r.payload["direction"] == "k2m");
    CHECK(r.payload["gamma"] == "symbolic");
    CHECK(r.payload["routes"] == json::array({"operator", "partitions", "genfun"}));
    CHECK(r.payload["notes"].empty());
    CHECK(r.payload["values"] ==
          json::array({"0", "g + 1", "0", "2*g^2 + 5*g + 3"}));
    CHECK(r.payload["elapsed_ms"].is_number());
}

TEST_CASE("transform command: numeric roundtrip and zero-parameter notes") {
    json fwd_in = {{"gamma", "1"}, {"K", 4}, {"kappa", {"0", "1"}}};
    cli::CommandResult fwd = cli::cmd_transform("k2m", fwd_in, "all");
    CHECK(fwd.status == Status::ok);
    CHECK(fwd.payload["values"] == json::array({"0", "2", "0", "10"}));

    json inv_in = {{"gamma", "1"}, {"K", 4}, {"moments", {"0", "2", "0", "10"}}};
    cli::CommandResult inv = cli::cmd_transform("m2k", inv_in, "all");
    CHECK(inv.status == Status::ok);
    CHECK(inv.payload["values"] == json::array({"0", "1", "0", "0"}));

    // gamma = 0: the generating-function route is skipped with a note.
    json zero_in = {{"gamma", "0"}, {"K", 3}, {"kappa", {"1", "1", "1"}}};
    cli::CommandResult zero = cli::cmd_transform("k2m", zero_in, "all");
    CHECK(zero.status == Status::ok);
    CHECK(zero.payload["routes"] == json::array({"operator", "partitions"}));
    REQUIRE(zero.payload["notes"].size() == 1);
    std::string note = zero.payload["notes"][0].get<std::string>();
    CHECK(note.find("genfun") != std::string::npos);

    // Short input is zero-padded to K.
    json padded = {{"gamma", "1"}, {"K", 4}, {"kappa", {"0", "1", "0", "0"}}};
    CHECK(cli::cmd_transform("k2m", padded, "operator").payload["values"] ==
          fwd.payload["values"]);
}

TEST_CASE("transform command: rejected inputs") {
    json good = {{"gamma", "1"}, {"K", 4}, {"kappa", {"0", "1"}}};

    auto expect_error = [](const cli::CommandResult& r) {
        CHECK(r.status == Status::error);
        CHECK(cli::exit_code(r) == 2);
        CHECK(r.payload.contains("error"));
    };

    expect_error(cli::cmd_transform("sideways", good, "all"));
    expect_error(cli::cmd_transform("k2m", good, "scenic"));

    json no_k = {{"gamma", "1"}, {"kappa", {"1"}}};
    expect_error(cli::cmd_transform("k2m", no_k, "all"));

    json bad_k = {{"gamma", "1"}, {"K", 0}, {"kappa", {"1"}}};
    expect_error(cli::cmd_transform("k2m", bad_k, "all"));

    json too_long = {{"gamma", "1"}, {"K", 2}, {"kappa", {"1", "1", "1"}}};
    expect_error(cli::cmd_transform("k2m", too_long, "all"));

    json not_array = {{"gamma", "1"}, {"K", 2}, {"kappa", "1"}};
    expect_error(cli::cmd_transform("k2m", not_array, "all"));

    // Route-specific limits fail loudly when that route is requested alone.
    json deep = {{"gamma", "1"}, {"K", 12}, {"kappa", json::array()}};
    expect_error(cli::cmd_transform("k2m", deep, "partitions"));

    json zero_gf = {{"gamma", "0"}, {"K", 3}, {"kappa", {"1"}}};
    expect_error(cli::cmd_transform("k2m", zero_gf, "genfun"));

    // Missing the direction-appropriate sequence key.
    json wrong_key = {{"gamma", "1"}, {"K", 2}, {"kappa", {"1"}}};
    expect_error(cli::cmd_transform("m2k", wrong_key, "all"));
}

TEST_CASE("verify command: every suite passes with the default seed") {
    for (const char* suite :
         {"routes", "descent", "weights", "limits", "dunkl", "bessel", "appendix"}) {
        cli::CommandResult r = cli::cmd_verify(suite, 7);
        INFO("suite ", suite, ": ", r.payload.dump(2));
        CHECK(r.status == Status::ok);
        CHECK(r.payload["suite"] == suite);
        CHECK(r.payload["passed"] == r.payload["total"]);
        CHECK(r.payload["total"].get<int>() > 0);
        for (const auto& c : r.payload["checks"]) CHECK(c["ok"] == true);
    }

    cli::CommandResult unknown = cli::cmd_verify("imaginary", 7);
    CHECK(unknown.status == Status::error);
    CHECK(cli::exit_code(unknown) == 2);
}

TEST_CASE("ensemble law-of-large-numbers command reports per-order statistics") {
    cli::CommandResult r = cli::cmd_run_lln(20, "1", 300, 7, {2, 4});
    INFO(r.payload.dump(2));
    CHECK(r.status == Status::ok);
    CHECK(r.payload["N"] == 20);
    CHECK(r.payload["samples"] == 300);
    REQUIRE(r.payload["orders"].size() == 2);
    const json& o2 = r.payload["orders"][0];
    CHECK(o2["order"] == 2);
    CHECK(o2["target"].get<double>() == 2.0);
    CHECK(o2["std_error"].get<double>() > 0.0);
    CHECK(std::abs(o2["z"].get<double>()) < 4.0);

    CHECK(cli::cmd_run_lln(0, "1", 10, 7, {2}).status == Status::error);
    CHECK(cli::cmd_run_lln(5, "nonsense", 10, 7, {2}).status == Status::error);
    CHECK(cli::cmd_run_lln(5, "-1", 10, 7, {2}).status == Status::error);
}

TEST_CASE("spectrum-file command produces the series and its log-derivatives") {
    std::string path = write_temp("spec_ok.txt", "# two points\n0\n\n1\n");
    cli::CommandResult r = cli::cmd_bessel(path, "1", 5, 0);
    INFO(r.payload.dump(2));
    CHECK(r.status == Status::ok);
    CHECK(r.payload["N"] == 2);
    CHECK(r.payload["theta"] == "1");
    CHECK(r.payload["order"] == 5);
    const json& coeffs = r.payload["series"]["coeffs"];
    REQUIRE(coeffs.size() == 6);
    CHECK(coeffs[0] == "1");
    CHECK(coeffs[1] == "1/2");
    CHECK(coeffs[2] == "1/6");
    CHECK(coeffs[3] == "1/24");
    CHECK(coeffs[4] == "1/120");
    CHECK(coeffs[5] == "1/720");
    CHECK(r.payload["log_derivs"].size() == 5);
    CHECK(r.payload["log_derivs"][0] == "1/2");

    // Decimal entries are parsed exactly; derivs limits the log output.
    std::string dec = write_temp("spec_dec.txt", "0.5\n-0.25\n");
    cli::CommandResult r2 = cli::cmd_bessel(dec, "1/2", 6, 2);
    CHECK(r2.status == Status::ok);
    CHECK(r2.payload["log_derivs"].size() == 2);
    CHECK(r2.payload["log_derivs"][0] == "1/8");  // theta-weighted mean (0.5 - 0.25)/2

    CHECK(cli::cmd_bessel("/tmp/gcum_test_no_such_file.txt", "1", 4, 0).status == Status::error);
    CHECK(cli::cmd_bessel(write_temp("spec_empty.txt", "# nothing\n"), "1", 4, 0).status ==
          Status::error);
    CHECK(cli::cmd_bessel(path, "0", 4, 0).status == Status::error);
    CHECK(cli::cmd_bessel(path, "1", 0, 0).status == Status::error);
    CHECK(cli::cmd_bessel(path, "1", 4, 5).status == Status::error);
}

TEST_CASE("numeric tokens parse to exact rationals") {
    CHECK(cli::parse_number("3") == rat(3));
    CHECK(cli::parse_number("-2") == rat(-2));
    CHECK(cli::parse_number("5/7") == rat(5, 7));
    CHECK(cli::parse_number("0.25") == rat(1, 4));
    CHECK(cli::parse_number("-1.5") == rat(-3, 2));
    CHECK(cli::parse_number("1e-3") == rat(1, 1000));
    CHECK(cli::parse_number("2.5e2") == rat(250));
    CHECK(cli::parse_number("  3 ") == rat(3));
    CHECK(cli::parse_number("0.0") == rat(0));

    CHECK_THROWS_AS(cli::parse_number("abc"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_number("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_number(""), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_number("1e"), std::invalid_argument);
}

TEST_CASE("spectrum files skip comments and report the offending line") {
    std::string path = write_temp("spec_mixed.txt", "# header\n1/3\n\n-2\n0.5\n");
    std::vector<Rational> vals = cli::read_spectrum_file(path);
    CHECK(vals == std::vector<Rational>{rat(1, 3), rat(-2), rat(1, 2)});

    std::string bad = write_temp("spec_bad.txt", "1\n2\nnot-a-number\n");
    try {
        cli::read_spectrum_file(bad);
        FAIL("expected a parse failure");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }
}

TEST_CASE("value serialization round trips bit-exactly") {
    Rational r = rat(-22, 7);
    CHECK(io::rational_from_json(io::to_json(r)) == r);
    CHECK(io::rational_from_json(json(5)) == rat(5));
    CHECK_THROWS_AS(io::rational_from_json(json(2.5)), std::invalid_argument);

    GammaPoly p = (GammaPoly::gamma() + GammaPoly(1)) * (GammaPoly::gamma() + GammaPoly(-2));
    CHECK(io::gamma_poly_from_json(io::to_json(p)) == p);

    GammaRat q = (GammaRat::gamma() + GammaRat(1)) / (GammaRat::gamma() + GammaRat(3));
    CHECK(io::gamma_rat_from_json(io::to_json(q)) == q);

    algebra::Series<Rational> s(5);
    s.set(1, rat(1, 2));
    s.set(3, rat(-7, 3));
    algebra::Series<Rational> back = io::rational_series_from_json(io::to_json(s));
    CHECK(back == s);
    CHECK(back.truncation() == 5);
}
