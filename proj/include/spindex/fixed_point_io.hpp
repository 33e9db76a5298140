#ifndef SPINDEX_FIXED_POINT_IO_HPP
#define SPINDEX_FIXED_POINT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "spindex/localization.hpp"
#include "spindex/report.hpp"

namespace spindex {

// Parse/validation failure with the offending field's path.
struct ParseError : std::runtime_error {
    std::string field;
    ParseError(std::string field_, const std::string& message)
        : std::runtime_error(field_ + ": " + message), field(std::move(field_)) {}
};

struct LocalizationInput {
    int version = 1;
    std::string variable = "z";
    std::vector<FixedPointDatum> fixed_points;
};

// Fixed-point data file: JSON with exact-rational exponent strings.
//
//   {
//     "version": 1,
//     "variable": "z",
//     "fixed_points": [
//       { "name": "N", "tangent_exponents": ["1", "1"], "twist_exponents": [] },
//       { "name": "S", "tangent_exponents": ["1", "-1"], "twist_exponents": [] }
//     ]
//   }
inline LocalizationInput parse_fixed_point_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("document", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) throw ParseError("document", "top level must be an object");

    LocalizationInput input;
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw ParseError("version", "required integer field");
    input.version = j["version"].get<int>();
    if (input.version != 1) throw ParseError("version", "unsupported version " + std::to_string(input.version));

    if (!j.contains("variable") || !j["variable"].is_string())
        throw ParseError("variable", "required string field");
    input.variable = j["variable"].get<std::string>();
    if (input.variable != "z") throw ParseError("variable", "must be \"z\"");

    if (!j.contains("fixed_points") || !j["fixed_points"].is_array())
        throw ParseError("fixed_points", "required array field");

    auto parse_exponents = [](const nlohmann::json& arr, const std::string& path) {
        std::vector<Rational> out;
        if (!arr.is_array()) throw ParseError(path, "must be an array of rational strings");
        for (size_t i = 0; i < arr.size(); ++i) {
            const auto& v = arr[i];
            std::string item = path + "[" + std::to_string(i) + "]";
            if (!v.is_string())
                throw ParseError(item, "exponents are exact-rational strings like \"3/2\"");
            try {
                out.push_back(Rational::parse(v.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(item, e.what());
            }
        }
        return out;
    };

    for (size_t i = 0; i < j["fixed_points"].size(); ++i) {
        const auto& fp = j["fixed_points"][i];
        std::string path = "fixed_points[" + std::to_string(i) + "]";
        if (!fp.is_object()) throw ParseError(path, "must be an object");
        FixedPointDatum d;
        d.name = fp.contains("name") && fp["name"].is_string() ? fp["name"].get<std::string>()
                                                               : "P" + std::to_string(i + 1);
        if (!fp.contains("tangent_exponents"))
            throw ParseError(path + ".tangent_exponents", "required field");
        d.tangent_exponents = parse_exponents(fp["tangent_exponents"], path + ".tangent_exponents");
        if (fp.contains("twist_exponents"))
            d.twist_exponents = parse_exponents(fp["twist_exponents"], path + ".twist_exponents");
        for (size_t q = 0; q < d.tangent_exponents.size(); ++q)
            if (d.tangent_exponents[q].is_zero())
                throw ParseError(path + ".tangent_exponents[" + std::to_string(q) + "]",
                                 "tangent exponent is zero: fixed points must be isolated");
        input.fixed_points.push_back(std::move(d));
    }
    return input;
}

struct LocalizeOutcome {
    EquivariantIndex index;
    std::vector<std::string> lines; // human-readable, one block per fixed point
    std::string verdict;
    Report report;
};

inline LocalizeOutcome localize(const LocalizationInput& input) {
    LocalizeOutcome out;
    out.report.suite = "localize";
    for (const auto& fp : input.fixed_points) {
        auto mu = contribution(fp); // throws LocalizationDataError on bad data
        auto [l0, linf] = limits(mu);
        auto ineq = satisfies_inequality(fp);
        std::string line = fp.name + ": mu = " + mu.str();
        line += "\n  limits: z->0: " + l0.str() + ", z->inf: " + linf.str();
        line += "\n  fundamental inequality: strict " + std::string(ineq.all_strict ? "yes" : "no") +
                ", non-strict " + std::string(ineq.all_non_strict ? "yes" : "no") +
                " (half q-norm " + ineq.half_q_norm.str() + ")";
        out.lines.push_back(line);
        out.report.add("contribution-" + fp.name, "4.3", true,
                       "limits (" + l0.str() + ", " + linf.str() + ")");
    }
    out.index = equivariant_index(input.fixed_points);
    switch (out.index.classification) {
        case IndexClassification::Zero:
            out.verdict = "vanishes: ind(z) = 0";
            break;
        case IndexClassification::RigidConstant:
            out.verdict = "rigid constant " + out.index.laurent->str_z();
            break;
        case IndexClassification::LaurentNonConstant:
            out.verdict = "ind(z) = " + out.index.laurent->str_z() + " (not rigid)";
            break;
        default:
            out.verdict = "inconsistent: sum is not a Laurent polynomial";
            break;
    }
    out.report.add("global-sum", "4.3", out.index.classification != IndexClassification::NotLaurent,
                   out.verdict);
    return out;
}

} // namespace spindex

#endif
