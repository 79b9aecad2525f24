#ifndef LEIBRACK_CLI_HPP
#define LEIBRACK_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibrack/algebra.hpp"

namespace leibrack::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string residual = "0";
    std::string details;
};

struct RunConfig {
    ScalarMode mode = ScalarMode::exact;
    // Command-specific default when unset: exponential truncation order
    // for rack/quantize/tangent, BCH order for bch, series order for cocycle.
    std::optional<int> order;
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    double step = 1e-3;
    std::optional<Vector<Rational>> xi;
    std::optional<Vector<Rational>> x;
    std::optional<Vector<Rational>> y;
};

struct RunReport {
    std::string command;
    std::string algebra_name;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    RunConfig config;
    // Command-specific settings echoed into the config object, e.g. the
    // cocycle series sign.
    std::vector<std::pair<std::string, std::string>> config_extra;

    bool ok() const;
    // 0 when every check passed or was skipped, 1 otherwise.
    int exit_code() const { return ok() ? 0 : 1; }
    // Deterministic: a pure function of the report contents.
    std::string to_json() const;
    std::string to_text() const;
};

// Canonical command names; "quantize" is accepted for "quantize-check".
const std::vector<std::string>& commands();
std::optional<std::string> canonical_command(const std::string& name);

// Throws PreconditionFailed for an unknown command or a flag out of range,
// DimensionMismatch for vectors of the wrong length.
RunReport run(const std::string& command, const LeibnizAlgebra& alg, const RunConfig& cfg);

// "1,1/2,-3" -> exact vector. Throws ParseError.
Vector<Rational> parse_vector(const std::string& csv);

// Residual as printed in reports: "0" or six significant digits.
std::string format_residual(double r);

}  // namespace leibrack::cli

#endif
