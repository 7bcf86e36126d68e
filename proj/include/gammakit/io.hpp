#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gammakit/algebra.hpp"
#include "gammakit/analytic.hpp"
#include "gammakit/bipoly.hpp"
#include "gammakit/bvp.hpp"
#include "gammakit/errors.hpp"
#include "gammakit/theorems.hpp"

namespace gammakit {

using json = nlohmann::ordered_json;

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

namespace detail {
inline double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("missing or non-numeric field \"") + key + "\"");
    return j[key].get<double>();
}
} // namespace detail

inline json algebra_to_json(const AlgebraParams& alg) {
    return {{"l1", alg.l1()},
            {"l2", alg.l2()},
            {"discriminant", alg.discriminant()},
            {"kind", kind_name(alg.kind())}};
}

inline json hnum_to_json(const HNum& z) {
    return {{"re", z.re}, {"im", z.im}, {"l1", z.algebra.l1()}, {"l2", z.algebra.l2()}};
}

inline HNum hnum_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("number must be a JSON object");
    const AlgebraParams alg(detail::number_field(j, "l1"), detail::number_field(j, "l2"));
    return HNum(detail::number_field(j, "re"), detail::number_field(j, "im"), alg);
}

inline json bipoly_to_json(const BiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({m.i, m.j, c});
    return {{"vars", {"x", "y"}}, {"terms", std::move(terms)}};
}

inline BiPoly bipoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || j["vars"] != json({"x", "y"}))
        throw ParseError("polynomial must declare vars [\"x\", \"y\"]");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial must carry a terms array");
    BiPoly p;
    for (const json& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() ||
            !t[1].is_number_unsigned() || !t[2].is_number())
            throw ParseError("each term must be [i, j, coefficient]");
        p.add_term(t[0].get<unsigned>(), t[1].get<unsigned>(), t[2].get<double>());
    }
    return p;
}

inline json apoly_to_json(const APoly& F) {
    json coeffs = json::array();
    for (const HNum& c : F.coeffs()) coeffs.push_back({c.re, c.im});
    return {{"l1", F.algebra().l1()}, {"l2", F.algebra().l2()}, {"coeffs", std::move(coeffs)}};
}

inline APoly apoly_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("z-polynomial must be a JSON object");
    const AlgebraParams alg(detail::number_field(j, "l1"), detail::number_field(j, "l2"));
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("z-polynomial must carry a coeffs array");
    std::vector<std::pair<double, double>> pairs;
    for (const json& c : j["coeffs"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ParseError("each coefficient must be [re, im]");
        pairs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return APoly::from_pairs(alg, pairs);
}

/// Symbolic reports embed the residual polynomial; numeric reports carry
/// the largest absolute stencil value. Same key either way.
inline json report_to_json(const ResidualReport& r) {
    json j;
    j["passed"] = r.passed;
    if (r.residual)
        j["max_abs_or_residual"] = bipoly_to_json(*r.residual);
    else
        j["max_abs_or_residual"] = r.max_abs;
    j["tolerance"] = r.tolerance;
    j["scale"] = r.scale;
    return j;
}

inline json fit_to_json(const CollocationFit& fit) {
    json degrees = json::array();
    for (const BiPoly& p : fit.basis) degrees.push_back(p.total_degree());
    json j;
    j["basis_degrees"] = std::move(degrees);
    j["coefficients"] = fit.coefficients;
    j["boundary_rms"] = fit.boundary_rms;
    j["condition_estimate"] = fit.condition_estimate;
    j["dropped_columns"] = fit.dropped_columns;
    j["warning"] = fit.warning;
    return j;
}

inline void write_boundary_csv(std::ostream& os, const BoundarySample& sample) {
    if (sample.values.size() != sample.points.size())
        throw std::invalid_argument("boundary sample has mismatched points and values");
    os << "x,y,value\n";
    for (std::size_t i = 0; i < sample.points.size(); ++i)
        os << format_double(sample.points[i].first) << ','
           << format_double(sample.points[i].second) << ','
           << format_double(sample.values[i]) << '\n';
}

namespace detail {
inline double parse_csv_number(std::string_view field, std::size_t line_no) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || p != field.data() + field.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad number \"" +
                         std::string(field) + "\"");
    return v;
}
} // namespace detail

/// Strict reader for the writer's format: header line x,y,value then one
/// sample per line. Blank lines are ignored; anything else is an error.
/// The result carries a custom shape tag since the geometry is unknown.
inline BoundarySample read_boundary_csv(std::istream& is) {
    BoundarySample out;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "x,y,value")
                throw ParseError("expected header x,y,value, got \"" + line + "\"");
            saw_header = true;
            continue;
        }
        std::string_view rest(line);
        double vals[3];
        for (int k = 0; k < 3; ++k) {
            const std::size_t comma = rest.find(',');
            if ((k < 2) != (comma != std::string_view::npos))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected three comma-separated values");
            const std::string_view field = rest.substr(0, comma);
            vals[k] = detail::parse_csv_number(field, line_no);
            if (k < 2) rest.remove_prefix(comma + 1);
        }
        out.points.emplace_back(vals[0], vals[1]);
        out.values.push_back(vals[2]);
    }
    if (!saw_header) throw ParseError("missing x,y,value header");
    if (out.points.empty()) throw ParseError("boundary file has no samples");
    return out;
}

} // namespace gammakit
