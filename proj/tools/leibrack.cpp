#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leibrack/cli.hpp"
#include "leibrack/interchange.hpp"

using namespace leibrack;

int main(int argc, char** argv) {
    CLI::App app{"Verification suites for Leibniz algebras, racks and their quantization"};
    app.set_version_flag("--version", cli::kVersion);

    std::string command, path, mode = "exact", xi, x, y, json_out;
    std::optional<int> order;
    cli::RunConfig cfg;

    std::string names;
    for (const auto& c : cli::commands()) names += (names.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + names + " (quantize = quantize-check)")->required();
    app.add_option("algebra", path, "algebra JSON file")->required();
    app.add_option("--mode", mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--order", order, "truncation order (command specific default)");
    app.add_option("--samples", cfg.samples, "number of random samples")->capture_default_str();
    app.add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
    app.add_option("--step", cfg.step, "finite-difference step for tangent")->capture_default_str();
    app.add_option("--xi", xi, "covector for hessian, comma-separated fractions");
    app.add_option("--x", x, "X for bch, comma-separated fractions");
    app.add_option("--y", y, "Y for bch, comma-separated fractions");
    app.add_option("--json", json_out, "write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cli::canonical_command(command)) throw PreconditionFailed("unknown command '" + command + "'");
        cfg.mode = mode == "exact" ? ScalarMode::exact : ScalarMode::floating;
        cfg.order = order;
        if (!xi.empty()) cfg.xi = cli::parse_vector(xi);
        if (!x.empty()) cfg.x = cli::parse_vector(x);
        if (!y.empty()) cfg.y = cli::parse_vector(y);
        LeibnizAlgebra alg = load_algebra(path);
        cli::RunReport report = cli::run(command, alg, cfg);
        std::cout << report.to_text();
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            if (!out) throw Error(json_out + ": cannot write");
            out << report.to_json();
        }
        return report.exit_code();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const PreconditionFailed& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
