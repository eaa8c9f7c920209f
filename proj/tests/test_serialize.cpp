#include <doctest.h>

#include "overq/qbinomial.hpp"
#include "overq/serialize.hpp"

using namespace overq;

TEST_CASE("qseries json round-trip")
{
    QSeries s(5);
    s.set_coeff(0, 1);
    s.set_coeff(3, BigInt::from_string("123456789123456789123456789"));
    s.set_coeff(5, -2);
    nlohmann::json j = to_json(s);
    CHECK(j["trunc"] == 5);
    CHECK(j["coeffs"]["3"] == "123456789123456789123456789");
    CHECK_FALSE(j["coeffs"].contains("1")); // zeros dropped
    QSeries back = qseries_from_json(j);
    CHECK(back.trunc() == 5);
    CHECK(canonically_equal(back, s));
    // a second trip is identical
    CHECK(to_json(back) == j);
}

TEST_CASE("xqseries json round-trip")
{
    XQSeries s(4, 7);
    s.set_coeff(0, 0, 1);
    s.set_coeff(2, 5, BigInt::from_string("-9999999999999999999999"));
    nlohmann::json j = to_json(s);
    CHECK(j["xtrunc"] == 4);
    CHECK(j["qtrunc"] == 7);
    CHECK(j["coeffs"]["2,5"] == "-9999999999999999999999");
    XQSeries back = xqseries_from_json(j);
    CHECK(canonically_equal(back, s));
    CHECK(to_json(back) == j);
}

TEST_CASE("text rendering")
{
    CHECK(to_text(QSeries(4)) == "0");
    CHECK(to_text(QSeries::constant(7, 2)) == "7");
    CHECK(to_text(QSeries::from_coeffs({1, 2, 0, -1}))
          == "1 + 2*q - q^3");
    CHECK(to_text(QSeries::from_coeffs({-1, 1})) == "-1 + q");
    CHECK(to_text(over_qbinomial(3, 3))
          == "1 + 2*q + 4*q^2 + 8*q^3 + 10*q^4 + 12*q^5 + 12*q^6 + 8*q^7 "
             "+ 4*q^8 + 2*q^9");

    XQSeries s(2, 3);
    s.set_coeff(0, 0, 1);
    s.set_coeff(1, 1, -1);
    s.set_coeff(2, 3, 5);
    CHECK(to_text(s) == "1 - x*q + 5*x^2*q^3");
}
