#ifndef LEIBRACK_INTERCHANGE_HPP
#define LEIBRACK_INTERCHANGE_HPP

#include <filesystem>
#include <string>

#include "leibrack/algebra.hpp"

namespace leibrack {

// JSON algebra files:
//   { "name": str, "dim": int, "basis": [str],
//     "brackets": [ { "i": int, "j": int, "value": [[num, den], ...] } ] }
// Indices are 1-based, "value" lists the coordinates of [e_i, e_j], and
// omitted pairs are zero. Fractions must be in lowest terms with a positive
// denominator. Errors are ParseError with the offending field in the message.
LeibnizAlgebra parse_algebra(const std::string& text);
LeibnizAlgebra load_algebra(const std::filesystem::path& path);

// Inverse of parse_algebra; brackets in (i, j) order, two-space indent,
// trailing newline.
std::string serialize_algebra(const LeibnizAlgebra& alg);
void save_algebra(const LeibnizAlgebra& alg, const std::filesystem::path& path);

}  // namespace leibrack

#endif
