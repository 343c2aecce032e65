#pragma once

// PolyJson: {"n":int, "a":int, "delta":0|1, "degree":int, "coeffs":[string...]}
// with the stride-3 coefficients as exact decimal strings, ascending j.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "yv_engine.hpp"

namespace yvlab {

using Json = nlohmann::ordered_json;

inline Json to_poly_json(const YvPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    Json j;
    j["n"] = p.n();
    j["a"] = p.a();
    j["delta"] = p.delta();
    j["degree"] = p.degree();
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline std::string dump_poly_json(const YvPolynomial& p) { return to_poly_json(p).dump(); }

namespace detail {

inline bool is_decimal(const std::string& s) {
    std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace detail

/// Parses and validates a PolyJson document.  Throws InvalidArgument on any
/// schema or consistency violation.
inline YvPolynomial from_poly_json(const Json& j) {
    auto field = [&](const char* key) -> const Json& {
        if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("PolyJson: missing field ") + key);
        return j.at(key);
    };
    const Json& n = field("n");
    const Json& a = field("a");
    const Json& delta = field("delta");
    const Json& degree = field("degree");
    const Json& coeffs = field("coeffs");
    if (!n.is_number_integer() || !a.is_number_integer() || !delta.is_number_integer() || !degree.is_number_integer())
        throw InvalidArgument("PolyJson: n, a, delta and degree must be integers");
    if (!coeffs.is_array()) throw InvalidArgument("PolyJson: coeffs must be an array");
    const auto idx = n.get<std::int64_t>();
    if (delta.get<std::int64_t>() != yv_delta(idx)) throw InvalidArgument("PolyJson: delta inconsistent with n");
    if (degree.get<std::int64_t>() != yv_degree(idx)) throw InvalidArgument("PolyJson: degree inconsistent with n");
    std::vector<Integer> values;
    for (const auto& c : coeffs) {
        if (!c.is_string() || !detail::is_decimal(c.get<std::string>()))
            throw InvalidArgument("PolyJson: coefficients must be decimal strings");
        values.emplace_back(c.get<std::string>(), 10);
    }
    if (values.size() != yv_length(idx)) throw InvalidArgument("PolyJson: wrong number of coefficients");
    if (values.back() != 1) throw InvalidArgument("PolyJson: polynomial is not monic");
    return YvPolynomial(idx, a.get<std::int64_t>(), std::move(values));
}

inline YvPolynomial parse_poly_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("PolyJson: ") + e.what());
    }
    return from_poly_json(j);
}

/// Descending-degree text, e.g. "x^6 - 5x^3 - 5".
inline std::string render_text(const YvPolynomial& p) { return to_string(yv_expand(p)); }

}  // namespace yvlab
