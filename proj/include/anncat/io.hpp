#pragma once

// JSON file formats.
//
//   ring       {"order": n, "add": [[...]], "mul": [[...]], "one": 1}     ("one" optional, default 1)
//   bimodule   {"invariant_factors": [...]} or {"group_add": [[...]]},
//              plus "left_action" (n x m) and "right_action" (m x n);
//              or {"regular": true} for R acting on itself
//   cochain    {"kind": "xi", "ring_order": n, "module_order": m, "values": [...]}
//   structure  {"ring": {...}, "module": {...}, "xi": [...], "eta": [...], "alpha": [...],
//               "lambda": [...], "rho": [...]}
//   quadruple  same, with "sigma", "alpha", "lambda", "rho"
//   pair       same, with "mu", "nu"
//
// Syntax errors carry line and column; schema errors carry a JSON pointer.

#include "anncat/bimodule.hpp"
#include "anncat/cochain.hpp"
#include "anncat/ring.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace anncat {

using json = nlohmann::json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] inline void field_error(const std::string& path, const std::string& what) {
    throw FormatError("field " + (path.empty() ? std::string("/") : path) + ": " + what);
}

inline const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) field_error(path + "/" + key, "missing");
    return *it;
}

inline long long as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) field_error(path, "expected an integer");
    return j.get<long long>();
}

inline std::vector<long long> as_int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline std::vector<std::vector<long long>> as_table(const json& j, const std::string& path) {
    if (!j.is_array()) field_error(path, "expected an array of rows");
    std::vector<std::vector<long long>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int_vector(j[i], path + "/" + std::to_string(i)));
    return out;
}

}  // namespace detail

/// Parse JSON text; syntax errors become FormatError with line and column.
inline json parse_json(const std::string& text, const std::string& source = "<input>") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// --- rings -----------------------------------------------------------------

inline RawRing raw_ring_from_json(const json& j, const std::string& path = "") {
    RawRing r;
    const long long n = detail::as_int(detail::require(j, "order", path), path + "/order");
    r.add = detail::as_table(detail::require(j, "add", path), path + "/add");
    r.mul = detail::as_table(detail::require(j, "mul", path), path + "/mul");
    if (j.contains("one")) r.one = detail::as_int(j["one"], path + "/one");
    if (n < 2) detail::field_error(path + "/order", "a ring needs at least 2 elements");
    if (r.add.size() != static_cast<std::size_t>(n))
        detail::field_error(path + "/add", "has " + std::to_string(r.add.size()) + " rows, order is " + std::to_string(n));
    return r;
}

inline json ring_to_json(const FiniteRing& r) {
    const RawRing raw = r.raw();
    json j{{"order", r.order()}, {"add", raw.add}, {"mul", raw.mul}};
    if (r.one() != 1) j["one"] = r.one();
    return j;
}

// --- bimodules -------------------------------------------------------------

/// Raw bimodule data; "regular": true expands to R acting on itself.
inline RawBimodule raw_bimodule_from_json(const json& j, const FiniteRing& ring, const std::string& path = "") {
    if (j.is_object() && j.contains("regular")) {
        if (!j["regular"].is_boolean() || !j["regular"].get<bool>()) detail::field_error(path + "/regular", "expected true");
        return regular_bimodule(ring).raw();
    }
    RawBimodule b;
    if (j.is_object() && j.contains("invariant_factors")) {
        auto f = detail::as_int_vector(j["invariant_factors"], path + "/invariant_factors");
        b.invariant_factors = std::vector<std::int64_t>(f.begin(), f.end());
    }
    if (j.is_object() && j.contains("group_add")) b.group_add = detail::as_table(j["group_add"], path + "/group_add");
    if (b.invariant_factors.has_value() == b.group_add.has_value())
        detail::field_error(path, "exactly one of invariant_factors or group_add is required");
    b.left_action = detail::as_table(detail::require(j, "left_action", path), path + "/left_action");
    b.right_action = detail::as_table(detail::require(j, "right_action", path), path + "/right_action");
    return b;
}

inline json bimodule_to_json(const Bimodule& m) {
    const RawBimodule raw = m.raw();
    json j;
    if (raw.invariant_factors)
        j["invariant_factors"] = *raw.invariant_factors;
    else
        j["group_add"] = *raw.group_add;
    j["left_action"] = raw.left_action;
    j["right_action"] = raw.right_action;
    return j;
}

/// Ring and module from an object with "ring" and "module" members.
inline Ambient ambient_from_json(const json& j, const std::string& path = "") {
    const FiniteRing ring(raw_ring_from_json(detail::require(j, "ring", path), path + "/ring"));
    return make_ambient(Bimodule(ring, raw_bimodule_from_json(detail::require(j, "module", path), ring, path + "/module")));
}

// --- cochains --------------------------------------------------------------

inline json cochain_to_json(const Cochain& c) {
    return {{"kind", kind_name(c.kind())},
            {"ring_order", c.ambient()->ring_order()},
            {"module_order", c.ambient()->order()},
            {"values", c.values()}};
}

inline Kind kind_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) detail::field_error(path, "expected a kind name");
    try {
        return parse_kind(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        detail::field_error(path, e.what());
    }
}

/// A cochain file read against a known ambient. Orders must match.
inline Cochain cochain_from_json(const json& j, const Ambient& amb, const std::string& path = "") {
    const Kind kind = kind_from_json(detail::require(j, "kind", path), path + "/kind");
    const long long n = detail::as_int(detail::require(j, "ring_order", path), path + "/ring_order");
    const long long m = detail::as_int(detail::require(j, "module_order", path), path + "/module_order");
    if (static_cast<std::size_t>(n) != amb->ring_order())
        detail::field_error(path + "/ring_order", "is " + std::to_string(n) + ", ring has " + std::to_string(amb->ring_order()));
    if (static_cast<std::size_t>(m) != amb->order())
        detail::field_error(path + "/module_order", "is " + std::to_string(m) + ", module has " + std::to_string(amb->order()));
    auto values = detail::as_int_vector(detail::require(j, "values", path), path + "/values");
    try {
        return make_cochain(kind, amb, values);
    } catch (const FormatError& e) {
        detail::field_error(path + "/values", e.what());
    }
}

// --- bundles ---------------------------------------------------------------

template <class B>
json bundle_to_json(const B& b, bool with_ambient = true) {
    json j;
    if (with_ambient) {
        j["ring"] = ring_to_json(b.ambient->ring());
        j["module"] = bimodule_to_json(*b.ambient);
    }
    for (const auto& c : b.parts) j[kind_name(c.kind())] = c.values();
    return j;
}

/// Tables read against `amb`; a table of the wrong length or with an
/// out-of-range entry is a FormatError, a normalization failure a
/// NormalizationError.
template <class B>
B bundle_from_json(const json& j, const Ambient& amb, const std::string& path = "") {
    B b = zero_bundle<B>(amb);
    for (std::size_t i = 0; i < B::kinds().size(); ++i) {
        const Kind k = B::kinds()[i];
        const std::string key(kind_name(k));
        auto values = detail::as_int_vector(detail::require(j, key, path), path + "/" + key);
        try {
            b.parts[i] = make_cochain(k, amb, values);
        } catch (const FormatError& e) {
            detail::field_error(path + "/" + key, e.what());
        }
    }
    return b;
}

/// Bundle with embedded "ring" and "module".
template <class B>
B bundle_from_json(const json& j) {
    return bundle_from_json<B>(j, ambient_from_json(j));
}

enum class FileKind : std::uint8_t { ring, bimodule, cochain, structure, quadruple, pair, unknown };

inline const char* file_kind_name(FileKind k) {
    switch (k) {
        case FileKind::ring: return "ring";
        case FileKind::bimodule: return "bimodule";
        case FileKind::cochain: return "cochain";
        case FileKind::structure: return "structure";
        case FileKind::quadruple: return "quadruple";
        case FileKind::pair: return "pair";
        default: return "unknown";
    }
}

/// Guess what a parsed file holds from its keys.
inline FileKind detect_file_kind(const json& j) {
    if (!j.is_object()) return FileKind::unknown;
    if (j.contains("kind") && j.contains("values")) return FileKind::cochain;
    if (j.contains("xi")) return FileKind::structure;
    if (j.contains("sigma")) return FileKind::quadruple;
    if (j.contains("mu")) return FileKind::pair;
    if (j.contains("add") && j.contains("mul")) return FileKind::ring;
    if (j.contains("left_action") || j.contains("regular")) return FileKind::bimodule;
    return FileKind::unknown;
}

}  // namespace anncat
