#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli_core.hpp"

namespace {

int emit(const gcum::cli::CommandResult& r) {
    if (r.payload.contains("notes"))
        for (const auto& n : r.payload.at("notes"))
            std::cerr << "note: " << n.get<std::string>() << "\n";
    if (r.payload.contains("error"))
        std::cerr << "error: " << r.payload.at("error").get<std::string>() << "\n";
    std::cout << r.payload.dump(2) << std::endl;
    return gcum::cli::exit_code(r);
}

nlohmann::json read_input_json(const std::string& path) {
    try {
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) return nlohmann::json{{"__input_error", "cannot open input file: " + path}};
            return nlohmann::json::parse(in, nullptr, true, true);
        }
        if (isatty(fileno(stdin))) return nlohmann::json::object();
        std::stringstream buf;
        buf << std::cin.rdbuf();
        std::string text = buf.str();
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            return nlohmann::json::object();
        return nlohmann::json::parse(text, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
        return nlohmann::json{{"__input_error", std::string("invalid JSON input: ") + e.what()}};
    }
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        orders.push_back(std::stoi(tok));
    }
    return orders;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact gamma-cumulant calculus for random-matrix ensembles"};
    app.require_subcommand(1);

    auto* t = app.add_subcommand("transform",
                                 "Convert between cumulant and moment sequences (JSON on stdin)");
    std::string direction, route = "all", gamma_flag, input_path;
    int k_flag = 0;
    t->add_option("direction", direction, "k2m or m2k")->required();
    t->add_option("--route", route, "operator|partitions|genfun|all (default all)");
    t->add_option("--gamma", gamma_flag, "rational p/q, or 'symbolic' (overrides JSON)");
    t->add_option("--K", k_flag, "truncation order (overrides JSON)");
    t->add_option("--input", input_path, "JSON input file (default: stdin)");

    auto* v = app.add_subcommand("verify", "Run a named self-check suite");
    std::string suite_pos, suite_flag;
    std::uint64_t vseed = 7;
    v->add_option("suite_name", suite_pos,
                  "routes|descent|weights|limits|dunkl|bessel|appendix");
    v->add_option("--suite", suite_flag, "suite name (alternative to the positional)");
    v->add_option("--seed", vseed, "seed for the randomized checks (default 7)");

    auto* e = app.add_subcommand("ensembles", "Stochastic matrix-ensemble experiments");
    e->require_subcommand(1);
    auto* lln = e->add_subcommand("run-lln", "Empirical Gaussian-ensemble moments vs targets");
    int lln_n = 100;
    std::string lln_gamma = "1", lln_orders = "2,4";
    long lln_samples = 2000;
    std::uint64_t lln_seed = 7;
    lln->add_option("--N", lln_n, "matrix size (default 100)");
    lln->add_option("--gamma", lln_gamma, "target gamma, rational p/q (theta = gamma/N)");
    lln->add_option("--samples", lln_samples, "number of draws (default 2000)");
    lln->add_option("--seed", lln_seed, "master seed (default 7)");
    lln->add_option("--orders", lln_orders, "comma-separated moment orders (default 2,4)");

    auto* b = app.add_subcommand("bessel", "One-variable Bessel series for a spectrum file");
    std::string spectrum, theta;
    int order = 8, derivs = 0;
    b->add_option("--spectrum", spectrum, "spectrum file, one number per line")->required();
    b->add_option("--theta", theta, "positive rational p/q")->required();
    b->add_option("--order", order, "series truncation order (default 8)");
    b->add_option("--derivs", derivs, "log-derivative count (default: order)");

    CLI11_PARSE(app, argc, argv);

    if (t->parsed()) {
        nlohmann::json input = read_input_json(input_path);
        if (input.contains("__input_error")) {
            gcum::cli::CommandResult r;
            r.status = gcum::cli::Status::error;
            r.payload["status"] = "error";
            r.payload["error"] = input.at("__input_error").get<std::string>();
            return emit(r);
        }
        if (!gamma_flag.empty()) input["gamma"] = gamma_flag;
        if (k_flag > 0) input["K"] = k_flag;
        return emit(gcum::cli::cmd_transform(direction, input, route));
    }
    if (v->parsed()) {
        std::string suite = !suite_flag.empty() ? suite_flag : suite_pos;
        return emit(gcum::cli::cmd_verify(suite, vseed));
    }
    if (lln->parsed()) {
        return emit(gcum::cli::cmd_run_lln(lln_n, lln_gamma, lln_samples, lln_seed,
                                           parse_orders(lln_orders)));
    }
    if (b->parsed()) {
        return emit(gcum::cli::cmd_bessel(spectrum, theta, order, derivs));
    }
    return 2;
}
