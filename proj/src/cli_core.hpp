#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcum/rational.hpp"

namespace gcum::cli {

enum class Status { ok, mismatch, error };

const char* status_name(Status s);

struct CommandResult {
    Status status = Status::ok;
    nlohmann::json payload;
    long elapsed_ms = 0;
};

/// ok -> 0, mismatch -> 1, error -> 2.
int exit_code(const CommandResult& r);

/// Moment/cumulant transition. direction is "k2m" or "m2k"; input carries
/// "gamma" ("p/q" or "symbolic"), "K", and "kappa" or "moments" (arrays of
/// rationals, zero-padded to K); route is operator|partitions|genfun|all.
CommandResult cmd_transform(const std::string& direction, const nlohmann::json& input,
                            const std::string& route);

/// Named self-check suites: routes, descent, weights, limits, dunkl, bessel, appendix.
CommandResult cmd_verify(const std::string& suite, std::uint64_t seed);

/// Monte-Carlo moments of the Gaussian beta ensemble at theta = gamma/N.
CommandResult cmd_run_lln(int N, const std::string& gamma, long samples, std::uint64_t seed,
                          const std::vector<int>& orders);

/// One-variable Bessel series and log-derivatives for a spectrum file.
CommandResult cmd_bessel(const std::string& spectrum_path, const std::string& theta, int order,
                         int derivs);

/// Exact rational from "p/q", integer, or decimal text (optional exponent).
algebra::Rational parse_number(const std::string& token);

/// One number per line; blank lines and lines starting with '#' are skipped.
std::vector<algebra::Rational> read_spectrum_file(const std::string& path);

}  // namespace gcum::cli
