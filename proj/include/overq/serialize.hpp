#pragma once

#include <string>

#include <json.hpp>

#include "overq/qseries.hpp"
#include "overq/xqseries.hpp"

namespace overq {

/* {"trunc": T, "coeffs": {"<exp>": "<decimal>"}}; zeros are dropped,
 * coefficients travel as decimal strings so arbitrary precision survives. */
nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

/* {"xtrunc": X, "qtrunc": T, "coeffs": {"<a>,<b>": "<decimal>"}} */
nlohmann::json to_json(const XQSeries& s);
XQSeries xqseries_from_json(const nlohmann::json& j);

/* Ascending powers, "c*q^e" terms joined by " + "/" - ", unit coefficients
 * elided, matching the usual display order of q-series. */
std::string to_text(const QSeries& s);
std::string to_text(const XQSeries& s);

} // namespace overq
