#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "overq/bigint.hpp"
#include "overq/errors.hpp"

namespace overq {

/**
 * Truncated formal power series in q with exact integer coefficients.
 *
 * A QSeries is valid through its truncation order: coeff(e) is the exact
 * coefficient of q^e for every e <= trunc(); nothing is known beyond that.
 * Binary operations produce the componentwise minimum of the operands'
 * truncation orders. Values are immutable once built (set_coeff is a
 * construction helper only) and safe to share across threads.
 */
class QSeries {
public:
    /* Zero series valid through `trunc`. */
    explicit QSeries(std::size_t trunc) : trunc_(trunc), c_(trunc + 1) {}

    static QSeries constant(BigInt v, std::size_t trunc);
    /* c * q^exp; the monomial is dropped when exp > trunc. */
    static QSeries monomial(BigInt v, std::size_t exp, std::size_t trunc);
    /* Polynomial from low-order coefficients, trunc = coeffs.size() - 1. */
    static QSeries from_coeffs(const std::vector<long long>& coeffs);

    std::size_t trunc() const { return trunc_; }

    /* Throws OutOfRange beyond the validity window. */
    const BigInt& coeff(std::size_t e) const;
    void set_coeff(std::size_t e, BigInt v);

    /* Restriction to a smaller window. */
    QSeries truncated(std::size_t t) const;

    /* Declares validity through a larger window. Only correct when the value
     * is an exact polynomial (all coefficients beyond trunc are zero); used
     * to embed exact q-binomials into wider series arithmetic. */
    QSeries extended(std::size_t t) const;

    /* Multiplication by q^e; terms leaving the window are dropped. */
    QSeries shifted(std::size_t e) const;

    QSeries scaled(const BigInt& v) const;

    /* Multiplicative inverse on the window by the standard coefficient
     * recursion; throws NonUnitConstantTerm unless coeff(0) is +1 or -1. */
    QSeries inverse() const;

    /* Largest exponent with a nonzero coefficient, nullopt for zero. */
    std::optional<std::size_t> degree() const;

    BigInt eval_at_one() const;
    bool is_zero() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

private:
    std::size_t trunc_;
    std::vector<BigInt> c_;
};

/* Coefficient-wise equality on an explicit window; `window` must not exceed
 * either validity order (window honesty). */
bool agrees(const QSeries& a, const QSeries& b, std::size_t window);

/* Smallest exponent <= window where the two sides differ. */
std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b,
                                            std::size_t window);

/* Canonical equality: coefficient-wise over the common validity window. */
bool canonically_equal(const QSeries& a, const QSeries& b);

/**
 * Description of a q-Pochhammer product: factors (1 - sign*q^k) or, with
 * in_x set, (1 - sign*x*q^k), for k = 1..length; no length means the
 * infinite product, realized at evaluation time by omitting every factor
 * whose lowest exponent exceeds the truncation window.
 */
struct PochSpec {
    int sign = +1;                      // +1 -> (q;q)-type, -1 -> (-q;q)-type
    std::optional<std::size_t> length;  // nullopt = infinite
    bool in_x = false;

    static PochSpec q(int sign, std::size_t n) { return {sign, n, false}; }
    static PochSpec q_inf(int sign) { return {sign, std::nullopt, false}; }
    static PochSpec xq(int sign, std::size_t n) { return {sign, n, true}; }
    static PochSpec xq_inf(int sign) { return {sign, std::nullopt, true}; }
};

/* (sign q; q)_length truncated; requires !spec.in_x. */
QSeries pochhammer(const PochSpec& spec, std::size_t trunc);

/* Product over i >= 1 with (i mod modulus) in residues of (1 - q^i),
 * truncated; residues use representatives 1..modulus (modulus stands for 0).
 * This is the numerator form; callers invert for the usual 1/(...) products. */
QSeries product_modular(const std::vector<int>& residues, int modulus,
                        std::size_t trunc);

} // namespace overq
