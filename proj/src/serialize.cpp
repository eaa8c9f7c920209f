#include "overq/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace overq {

namespace {

std::string monomial_text(const BigInt& c, const std::string& vars, bool lead)
{
    // caller has split off the sign
    std::string mag = c.is_negative() ? (-c).str() : c.str();
    std::string body;
    if (vars.empty())
        body = mag;
    else if (mag == "1")
        body = vars;
    else
        body = mag + "*" + vars;
    std::string sign = c.is_negative() ? (lead ? "-" : " - ") : (lead ? "" : " + ");
    return sign + body;
}

std::string power_text(const char* var, std::size_t e)
{
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

} // namespace

nlohmann::json to_json(const QSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t e = 0; e <= s.trunc(); ++e)
        if (!s.coeff(e).is_zero()) coeffs[std::to_string(e)] = s.coeff(e).str();
    return {{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const nlohmann::json& j)
{
    QSeries s(j.at("trunc").get<std::size_t>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        std::size_t e = std::stoull(key);
        s.set_coeff(e, BigInt::from_string(val.get<std::string>()));
    }
    return s;
}

nlohmann::json to_json(const XQSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [m, v] : s.terms()) {
        if (v.is_zero()) continue;
        coeffs[std::to_string(m.first) + "," + std::to_string(m.second)] = v.str();
    }
    return {{"xtrunc", s.xtrunc()}, {"qtrunc", s.qtrunc()}, {"coeffs", coeffs}};
}

XQSeries xqseries_from_json(const nlohmann::json& j)
{
    XQSeries s(j.at("xtrunc").get<std::size_t>(), j.at("qtrunc").get<std::size_t>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("XQSeries JSON: bad monomial key '" + key + "'");
        std::size_t a = std::stoull(key.substr(0, comma));
        std::size_t b = std::stoull(key.substr(comma + 1));
        s.set_coeff(a, b, BigInt::from_string(val.get<std::string>()));
    }
    return s;
}

std::string to_text(const QSeries& s)
{
    std::string out;
    for (std::size_t e = 0; e <= s.trunc(); ++e) {
        const BigInt& c = s.coeff(e);
        if (c.is_zero()) continue;
        out += monomial_text(c, power_text("q", e), out.empty());
    }
    return out.empty() ? "0" : out;
}

std::string to_text(const XQSeries& s)
{
    std::string out;
    for (const auto& [m, c] : s.terms()) {
        if (c.is_zero()) continue;
        std::string vars = power_text("x", m.first);
        std::string qp = power_text("q", m.second);
        if (!vars.empty() && !qp.empty()) vars += "*";
        vars += qp;
        out += monomial_text(c, vars, out.empty());
    }
    return out.empty() ? "0" : out;
}

} // namespace overq
