#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "overq/bigint.hpp"
#include "overq/errors.hpp"
#include "overq/qseries.hpp"

namespace overq {

/* (x-exponent, q-exponent) */
using XQMonomial = std::pair<std::size_t, std::size_t>;

/**
 * Truncated bivariate formal series in x and q, sparse in x.
 *
 * Coefficients are exact for every monomial x^a q^b with a <= xtrunc and
 * b <= qtrunc; binary operations take the componentwise minimum of the two
 * validity pairs. Stored zero coefficients are tolerated; iteration and
 * comparison treat absent and zero identically.
 */
class XQSeries {
public:
    XQSeries(std::size_t xtrunc, std::size_t qtrunc)
        : xt_(xtrunc), qt_(qtrunc) {}

    static XQSeries constant(BigInt v, std::size_t xtrunc, std::size_t qtrunc);
    /* c * x^a q^b, dropped when outside the window. */
    static XQSeries monomial(BigInt v, std::size_t a, std::size_t b,
                             std::size_t xtrunc, std::size_t qtrunc);
    /* A univariate series as the x-degree-0 layer; exact in x to any order. */
    static XQSeries embed(const QSeries& u, std::size_t xtrunc);

    std::size_t xtrunc() const { return xt_; }
    std::size_t qtrunc() const { return qt_; }

    /* Zero for absent monomials; throws OutOfRange outside the window. */
    const BigInt& coeff(std::size_t a, std::size_t b) const;
    void set_coeff(std::size_t a, std::size_t b, BigInt v);

    const std::map<XQMonomial, BigInt>& terms() const { return c_; }

    XQSeries truncated(std::size_t xt, std::size_t qt) const;
    /* Validity widening for exact polynomials only (see QSeries::extended). */
    XQSeries extended(std::size_t xt, std::size_t qt) const;

    /* Multiplication by x^da q^db; terms leaving the window are dropped. */
    XQSeries shifted(std::size_t da, std::size_t db) const;

    XQSeries scaled(const BigInt& v) const;

    /* The substitution x -> x q^m: x^a q^b becomes x^a q^{b + m a}.
     * Monomials pushed past the q-window are dropped; the validity pair is
     * unchanged (exponents only move upward in q). */
    XQSeries substitute_scale(std::size_t m) const;

    /* Multiplicative inverse on the window; NonUnitConstantTerm unless the
     * (0,0) coefficient is +1 or -1. */
    XQSeries inverse() const;

    /* Coefficient of x^a as a q-series valid through qtrunc. */
    QSeries x_slice(std::size_t a) const;

    bool is_zero() const;

    XQSeries operator-() const;
    friend XQSeries operator+(const XQSeries& a, const XQSeries& b);
    friend XQSeries operator-(const XQSeries& a, const XQSeries& b);
    friend XQSeries operator*(const XQSeries& a, const XQSeries& b);

private:
    std::size_t xt_, qt_;
    std::map<XQMonomial, BigInt> c_;
};

bool agrees(const XQSeries& a, const XQSeries& b, std::size_t xwindow,
            std::size_t qwindow);

/* Lexicographically smallest (a, b) <= the window where the sides differ. */
std::optional<XQMonomial> first_difference(const XQSeries& a, const XQSeries& b,
                                           std::size_t xwindow,
                                           std::size_t qwindow);

bool canonically_equal(const XQSeries& a, const XQSeries& b);

/* (sign x q; q)_length = prod (1 - sign x q^k) truncated; requires spec.in_x. */
XQSeries pochhammer_xq(const PochSpec& spec, std::size_t xtrunc,
                       std::size_t qtrunc);

} // namespace overq
