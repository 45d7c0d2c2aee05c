#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings for the record types. Rationals are
 *        carried as decimal-string numerator/denominator pairs so
 *        round-trips are bit-exact; doubles use shortest-round-trip form.
 */

#include "anticon/bounds.hpp"
#include "anticon/constants.hpp"
#include "anticon/distribution.hpp"
#include "anticon/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace anticon {

using Json = nlohmann::ordered_json;

/// Full description of a CLI run, embedded in every output for
/// reproducibility.
struct RunConfig {
    std::string version;
    std::string command;  // exact | bound | certify | scan | bench
    std::map<std::string, std::string> parameters;
    std::string output_format = "table";  // json | csv | table
    std::optional<std::uint64_t> seed;
    std::string precision = "exact";  // exact | float64

    bool operator==(const RunConfig&) const = default;
};

inline Json to_json(const Rational& q) {
    return Json{{"num", num(q).str()}, {"den", den(q).str()}};
}

inline Rational rational_from_json(const Json& j) {
    return Rational(parse_integer(j.at("num").get<std::string>()),
                    parse_integer(j.at("den").get<std::string>()));
}

template <class S>
Json to_json(const ConcentrationResult<S>& r) {
    Json j;
    if constexpr (is_exact_backend<S>) {
        j["max_probability"] = to_json(r.max_probability);
        j["max_probability_approx"] = to_double(r.max_probability);
    } else {
        j["max_probability"] = r.max_probability;
    }
    j["argmax_points"] = r.argmax_points;
    return j;
}

template <class S>
ConcentrationResult<S> concentration_from_json(const Json& j) {
    ConcentrationResult<S> r;
    if constexpr (is_exact_backend<S>) {
        r.max_probability = rational_from_json(j.at("max_probability"));
    } else {
        r.max_probability = j.at("max_probability").get<double>();
    }
    r.argmax_points = j.at("argmax_points").get<std::vector<std::int64_t>>();
    return r;
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["bound_name"] = r.bound_name;
    j["value"] = r.value;
    j["exact"] = r.exact_value ? to_json(*r.exact_value) : Json(nullptr);
    j["applicable"] = r.applicable;
    j["reason_if_not"] = r.reason_if_not;
    j["intermediates"] = r.intermediates;
    return j;
}

inline BoundReport bound_report_from_json(const Json& j) {
    BoundReport r;
    r.bound_name = j.at("bound_name").get<std::string>();
    r.value = j.at("value").get<double>();
    if (!j.at("exact").is_null()) r.exact_value = rational_from_json(j.at("exact"));
    r.applicable = j.at("applicable").get<bool>();
    r.reason_if_not = j.at("reason_if_not").get<std::string>();
    r.intermediates = j.at("intermediates").get<std::map<std::string, std::string>>();
    return r;
}

inline Json to_json(const CertifiedConstant& c) {
    Json witnesses = Json::object();
    for (const auto& [name, value] : c.witnesses) witnesses[name] = to_json(value);
    return Json{{"name", c.name},
                {"value_numerator", num(c.value).str()},
                {"value_denominator", den(c.value).str()},
                {"witnesses", witnesses},
                {"residual", to_json(c.residual)},
                {"verified", c.verified},
                {"depends_on", c.depends_on}};
}

inline CertifiedConstant certificate_from_json(const Json& j) {
    CertifiedConstant c;
    c.name = j.at("name").get<std::string>();
    c.value = Rational(parse_integer(j.at("value_numerator").get<std::string>()),
                       parse_integer(j.at("value_denominator").get<std::string>()));
    for (const auto& [key, value] : j.at("witnesses").items())
        c.witnesses.emplace_back(key, rational_from_json(value));
    c.residual = rational_from_json(j.at("residual"));
    c.verified = j.at("verified").get<bool>();
    c.depends_on = j.at("depends_on").get<std::vector<std::string>>();
    return c;
}

inline Json to_json(const ScanRecord& r) {
    Json j;
    j["experiment"] = r.experiment;
    j["instance"] = r.instance;
    j["exact"] = to_json(r.exact_value);
    j["bound"] = to_json(r.bound_value);
    j["pass"] = r.pass;
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    return j;
}

inline ScanRecord scan_record_from_json(const Json& j) {
    ScanRecord r;
    r.experiment = j.at("experiment").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.exact_value = rational_from_json(j.at("exact"));
    r.bound_value = rational_from_json(j.at("bound"));
    r.pass = j.at("pass").get<bool>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

inline Json to_json(const RunConfig& c) {
    Json j;
    j["version"] = c.version;
    j["command"] = c.command;
    j["parameters"] = c.parameters;
    j["output_format"] = c.output_format;
    j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
    j["precision"] = c.precision;
    return j;
}

inline RunConfig run_config_from_json(const Json& j) {
    RunConfig c;
    c.version = j.at("version").get<std::string>();
    c.command = j.at("command").get<std::string>();
    c.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    c.output_format = j.at("output_format").get<std::string>();
    if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
    c.precision = j.at("precision").get<std::string>();
    return c;
}

// ---------------------------------------------------------------------------
// CSV (header row, UTF-8, LF line endings)
// ---------------------------------------------------------------------------

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string scan_records_csv_header() {
    return "experiment,instance,exact_num,exact_den,bound_num,bound_den,pass,seed\n";
}

inline std::string to_csv_row(const ScanRecord& r) {
    return csv_escape(r.experiment) + "," + csv_escape(r.instance) + "," +
           num(r.exact_value).str() + "," + den(r.exact_value).str() + "," +
           num(r.bound_value).str() + "," + den(r.bound_value).str() + "," +
           (r.pass ? "true" : "false") + "," + (r.seed ? std::to_string(*r.seed) : "") + "\n";
}

}  // namespace anticon
