#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli_core.hpp"
#include "gcum/rational.hpp"

using gcum::algebra::Rational;

/// Emits an exact rational spectrum, one value per line, for piping into the
/// spectrum-file commands.
int main(int argc, char** argv) {
    CLI::App app{"Generate a spectrum file on stdout"};
    int n = 0;
    std::string kind = "equispaced";
    std::string value = "1/2";
    app.add_option("--n", n, "number of points")->required()->check(CLI::PositiveNumber);
    app.add_option("--kind", kind, "equispaced|geometric|constant (default equispaced)")
        ->check(CLI::IsMember({"equispaced", "geometric", "constant"}));
    app.add_option("--value", value,
                   "ratio (geometric) or value (constant), exact rational or decimal");
    CLI11_PARSE(app, argc, argv);

    Rational v;
    try {
        v = gcum::cli::parse_number(value);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<Rational> out;
    if (kind == "equispaced") {
        // n points filling [-1, 1]; a single point sits at 0.
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? Rational(0)
                                 : Rational(-1) + Rational(2 * i) / Rational(n - 1));
    } else if (kind == "geometric") {
        Rational p(1);
        for (int i = 0; i < n; ++i) {
            out.push_back(p);
            p *= v;
        }
    } else {
        out.assign(static_cast<size_t>(n), v);
    }

    for (const Rational& r : out) std::cout << r.str() << "\n";
    return 0;
}
