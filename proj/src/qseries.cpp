#include "overq/qseries.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace overq {

QSeries QSeries::constant(BigInt v, std::size_t trunc)
{
    QSeries r(trunc);
    r.c_[0] = std::move(v);
    return r;
}

QSeries QSeries::monomial(BigInt v, std::size_t exp, std::size_t trunc)
{
    QSeries r(trunc);
    if (exp <= trunc) r.c_[exp] = std::move(v);
    return r;
}

QSeries QSeries::from_coeffs(const std::vector<long long>& coeffs)
{
    QSeries r(coeffs.empty() ? 0 : coeffs.size() - 1);
    for (std::size_t e = 0; e < coeffs.size(); ++e) r.c_[e] = coeffs[e];
    return r;
}

const BigInt& QSeries::coeff(std::size_t e) const
{
    if (e > trunc_)
        throw OutOfRange("QSeries::coeff: exponent " + std::to_string(e)
                         + " beyond validity order " + std::to_string(trunc_));
    return c_[e];
}

void QSeries::set_coeff(std::size_t e, BigInt v)
{
    if (e > trunc_)
        throw OutOfRange("QSeries::set_coeff: exponent " + std::to_string(e)
                         + " beyond validity order " + std::to_string(trunc_));
    c_[e] = std::move(v);
}

QSeries QSeries::truncated(std::size_t t) const
{
    if (t > trunc_)
        throw OutOfRange("QSeries::truncated: cannot widen validity from "
                         + std::to_string(trunc_) + " to " + std::to_string(t));
    QSeries r(t);
    std::copy(c_.begin(), c_.begin() + t + 1, r.c_.begin());
    return r;
}

QSeries QSeries::extended(std::size_t t) const
{
    if (t < trunc_) return truncated(t);
    QSeries r(t);
    std::copy(c_.begin(), c_.end(), r.c_.begin());
    return r;
}

QSeries QSeries::shifted(std::size_t e) const
{
    QSeries r(trunc_);
    for (std::size_t i = 0; i + e <= trunc_ && i <= trunc_; ++i) r.c_[i + e] = c_[i];
    return r;
}

QSeries QSeries::scaled(const BigInt& v) const
{
    QSeries r(trunc_);
    for (std::size_t i = 0; i <= trunc_; ++i) r.c_[i] = c_[i] * v;
    return r;
}

QSeries QSeries::inverse() const
{
    const BigInt& c0 = c_[0];
    if (!(c0 == BigInt(1) || c0 == BigInt(-1)))
        throw NonUnitConstantTerm("QSeries::inverse: constant term " + c0.str()
                                  + " is not +1 or -1");
    QSeries b(trunc_);
    b.c_[0] = c0; // c0 is its own inverse
    for (std::size_t n = 1; n <= trunc_; ++n) {
        BigInt s;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!c_[k].is_zero()) s += c_[k] * b.c_[n - k];
        }
        b.c_[n] = -(c0 * s);
    }
    return b;
}

std::optional<std::size_t> QSeries::degree() const
{
    for (std::size_t i = c_.size(); i-- > 0;)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

BigInt QSeries::eval_at_one() const
{
    BigInt s;
    for (const BigInt& v : c_) s += v;
    return s;
}

bool QSeries::is_zero() const
{
    return !degree().has_value();
}

QSeries QSeries::operator-() const
{
    QSeries r(trunc_);
    for (std::size_t i = 0; i <= trunc_; ++i) r.c_[i] = -c_[i];
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (std::size_t i = 0; i <= r.trunc_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b)
{
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (std::size_t i = 0; i <= r.trunc_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (std::size_t i = 0; i <= r.trunc_ && i <= a.trunc_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= r.trunc_ && j <= b.trunc_; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool agrees(const QSeries& a, const QSeries& b, std::size_t window)
{
    return !first_difference(a, b, window).has_value();
}

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b,
                                            std::size_t window)
{
    if (window > a.trunc() || window > b.trunc())
        throw OutOfRange("first_difference: window " + std::to_string(window)
                         + " exceeds a validity order");
    for (std::size_t e = 0; e <= window; ++e)
        if (!(a.coeff(e) == b.coeff(e))) return e;
    return std::nullopt;
}

bool canonically_equal(const QSeries& a, const QSeries& b)
{
    return agrees(a, b, std::min(a.trunc(), b.trunc()));
}

QSeries pochhammer(const PochSpec& spec, std::size_t trunc)
{
    if (spec.in_x)
        throw OutOfRange("pochhammer: univariate evaluation of an x-variable product");
    QSeries r = QSeries::constant(1, trunc);
    std::size_t kmax = spec.length ? std::min(*spec.length, trunc) : trunc;
    // multiply by (1 - sign q^k) in place; factors with k > trunc cannot
    // affect exponents <= trunc and are omitted
    for (std::size_t k = 1; k <= kmax; ++k) {
        for (std::size_t e = trunc; e >= k; --e) {
            BigInt t = r.coeff(e - k);
            if (t.is_zero()) continue;
            if (spec.sign > 0)
                r.set_coeff(e, r.coeff(e) - t);
            else
                r.set_coeff(e, r.coeff(e) + t);
        }
    }
    return r;
}

QSeries product_modular(const std::vector<int>& residues, int modulus,
                        std::size_t trunc)
{
    if (modulus <= 0)
        throw OutOfRange("product_modular: modulus must be positive");
    std::set<int> rs(residues.begin(), residues.end());
    for (int r : rs)
        if (r < 1 || r > modulus)
            throw OutOfRange("product_modular: residue " + std::to_string(r)
                             + " outside 1.." + std::to_string(modulus));
    QSeries r = QSeries::constant(1, trunc);
    for (std::size_t i = 1; i <= trunc; ++i) {
        int res = static_cast<int>(i % static_cast<std::size_t>(modulus));
        if (res == 0) res = modulus;
        if (!rs.count(res)) continue;
        for (std::size_t e = trunc; e >= i; --e) {
            BigInt t = r.coeff(e - i);
            if (!t.is_zero()) r.set_coeff(e, r.coeff(e) - t);
        }
    }
    return r;
}

} // namespace overq
