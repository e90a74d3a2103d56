#ifndef ATKIN_JSON_IO_HPP
#define ATKIN_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "series.hpp"

namespace atkin
{

using json = nlohmann::ordered_json;

// Rationals travel as strings ("-1536/5", "720") so nothing is lost to doubles.
inline json to_json(const rat &x)
{
    return to_string(x);
}

inline json to_json(const std::vector<rat> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(to_string(x));
    }
    return a;
}

inline json to_json(const poly &p)
{
    return json{{"coefficients", to_json(p.coeffs())}};
}

inline json to_json(const qseries &s)
{
    return json{{"variable", s.variable()},
                {"valuation", s.valuation()},
                {"precision", s.precision()},
                {"coefficients", to_json(s.coeffs())}};
}

inline rat rat_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return rat(integer(j.dump()));
    }
    if (!j.is_string()) {
        throw domain_error("rational must be a string or an integer, got " + j.dump());
    }
    return parse_rat(j.get<std::string>());
}

// Accepts {"coefficients": [...]} or a bare array, ascending degree.
inline poly poly_from_json(const json &j)
{
    const json &arr = j.is_object() ? j.at("coefficients") : j;
    if (!arr.is_array()) {
        throw domain_error("polynomial must be an array of coefficients");
    }
    std::vector<rat> c;
    for (const auto &x : arr) {
        c.push_back(rat_from_json(x));
    }
    return poly(std::move(c));
}

inline poly poly_from_json_text(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw domain_error(std::string("bad polynomial json: ") + e.what());
    }
    return poly_from_json(j);
}

inline qseries series_from_json(const json &j)
{
    std::vector<rat> c;
    for (const auto &x : j.at("coefficients")) {
        c.push_back(rat_from_json(x));
    }
    return qseries(j.at("variable").get<std::string>(), j.at("valuation").get<long>(), j.at("precision").get<long>(),
                   std::move(c));
}

inline json to_json(const check_entry &e)
{
    json j{{"id", e.id}, {"status", e.passed ? "pass" : "fail"}, {"order", e.order}};
    if (!e.detail.empty()) {
        j["detail"] = e.detail;
    }
    return j;
}

} // namespace atkin

#endif
