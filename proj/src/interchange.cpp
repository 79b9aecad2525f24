#include "leibrack/interchange.hpp"

#include <fmt/format.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace leibrack {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError(field + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

mpz_class integer(const json& v, const std::string& field) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<std::int64_t>()));
    fail(field, "expected an integer");
}

std::size_t index_field(const json& v, const std::string& field, std::size_t dim) {
    if (!v.is_number_integer()) fail(field, "expected an integer");
    auto x = v.get<std::int64_t>();
    if (x < 1 || static_cast<std::uint64_t>(x) > dim) fail(field, fmt::format("index {} outside 1..{}", x, dim));
    return static_cast<std::size_t>(x - 1);
}

Rational fraction(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [num, den]");
    mpz_class num = integer(v[0], field + "[0]");
    mpz_class den = integer(v[1], field + "[1]");
    if (den == 0) fail(field, "zero denominator");
    if (!is_canonical_fraction(num, den))
        fail(field, fmt::format("{}/{} is not in lowest terms with a positive denominator", num.get_str(),
                                den.get_str()));
    return Rational(num, den);
}

long numeral(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    throw Error("coefficient " + z.get_str() + " does not fit a JSON integer");
}

}  // namespace

LeibnizAlgebra parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document", "expected an object");

    const json& name = member(doc, "name", "");
    if (!name.is_string()) fail("name", "expected a string");
    const json& dim_j = member(doc, "dim", "");
    if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() < 1) fail("dim", "expected a positive integer");
    const auto dim = static_cast<std::size_t>(dim_j.get<std::int64_t>());

    const json& basis_j = member(doc, "basis", "");
    if (!basis_j.is_array() || basis_j.size() != dim)
        fail("basis", fmt::format("expected {} names", dim));
    std::vector<std::string> basis;
    std::set<std::string> seen_names;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!basis_j[i].is_string()) fail(fmt::format("basis[{}]", i), "expected a string");
        basis.push_back(basis_j[i].get<std::string>());
        if (!seen_names.insert(basis.back()).second) fail(fmt::format("basis[{}]", i), "duplicate name");
    }

    AlgebraBuilder builder(name.get<std::string>(), dim);
    builder.basis_names(basis);
    const json& brackets = member(doc, "brackets", "");
    if (!brackets.is_array()) fail("brackets", "expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const std::string where = fmt::format("brackets[{}]", b);
        const json& entry = brackets[b];
        if (!entry.is_object()) fail(where, "expected an object");
        std::size_t i = index_field(member(entry, "i", where), where + ".i", dim);
        std::size_t j = index_field(member(entry, "j", where), where + ".j", dim);
        if (!seen.emplace(i, j).second) fail(where, fmt::format("duplicate entry for ({}, {})", i + 1, j + 1));
        const json& value = member(entry, "value", where);
        if (!value.is_array() || value.size() != dim)
            fail(where + ".value", fmt::format("expected {} coordinates", dim));
        Vector<Rational> v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = fraction(value[k], fmt::format("{}.value[{}]", where, k));
        builder.set_bracket(i, j, v);
    }
    return builder.build();
}

LeibnizAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_algebra(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_algebra(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    ordered_json doc;
    doc["name"] = alg.name();
    doc["dim"] = n;
    doc["basis"] = alg.basis_names();
    ordered_json brackets = ordered_json::array();
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        ordered_json value = ordered_json::array();
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = alg.c(i, j, k);
            value.push_back({numeral(c.get_num()), numeral(c.get_den())});
        }
        ordered_json entry;
        entry["i"] = i + 1;
        entry["j"] = j + 1;
        entry["value"] = std::move(value);
        brackets.push_back(std::move(entry));
    }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

void save_algebra(const LeibnizAlgebra& alg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(path.string() + ": cannot write");
    out << serialize_algebra(alg);
}

}  // namespace leibrack
