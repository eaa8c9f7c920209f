#include "overq/xqseries.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace overq {

namespace {
const BigInt kZero{};

std::string window_str(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
} // namespace

XQSeries XQSeries::constant(BigInt v, std::size_t xtrunc, std::size_t qtrunc)
{
    XQSeries r(xtrunc, qtrunc);
    if (!v.is_zero()) r.c_[{0, 0}] = std::move(v);
    return r;
}

XQSeries XQSeries::monomial(BigInt v, std::size_t a, std::size_t b,
                            std::size_t xtrunc, std::size_t qtrunc)
{
    XQSeries r(xtrunc, qtrunc);
    if (a <= xtrunc && b <= qtrunc && !v.is_zero()) r.c_[{a, b}] = std::move(v);
    return r;
}

XQSeries XQSeries::embed(const QSeries& u, std::size_t xtrunc)
{
    XQSeries r(xtrunc, u.trunc());
    for (std::size_t e = 0; e <= u.trunc(); ++e)
        if (!u.coeff(e).is_zero()) r.c_[{0, e}] = u.coeff(e);
    return r;
}

const BigInt& XQSeries::coeff(std::size_t a, std::size_t b) const
{
    if (a > xt_ || b > qt_)
        throw OutOfRange("XQSeries::coeff: monomial " + window_str(a, b)
                         + " beyond validity " + window_str(xt_, qt_));
    auto it = c_.find({a, b});
    return it == c_.end() ? kZero : it->second;
}

void XQSeries::set_coeff(std::size_t a, std::size_t b, BigInt v)
{
    if (a > xt_ || b > qt_)
        throw OutOfRange("XQSeries::set_coeff: monomial " + window_str(a, b)
                         + " beyond validity " + window_str(xt_, qt_));
    if (v.is_zero())
        c_.erase({a, b});
    else
        c_[{a, b}] = std::move(v);
}

XQSeries XQSeries::truncated(std::size_t xt, std::size_t qt) const
{
    if (xt > xt_ || qt > qt_)
        throw OutOfRange("XQSeries::truncated: cannot widen validity "
                         + window_str(xt_, qt_) + " to " + window_str(xt, qt));
    XQSeries r(xt, qt);
    for (const auto& [m, v] : c_)
        if (m.first <= xt && m.second <= qt && !v.is_zero()) r.c_[m] = v;
    return r;
}

XQSeries XQSeries::extended(std::size_t xt, std::size_t qt) const
{
    XQSeries r(std::max(xt, xt_), std::max(qt, qt_));
    r.c_ = c_;
    return r.truncated(xt, qt);
}

XQSeries XQSeries::shifted(std::size_t da, std::size_t db) const
{
    XQSeries r(xt_, qt_);
    for (const auto& [m, v] : c_) {
        if (v.is_zero()) continue;
        std::size_t a = m.first + da, b = m.second + db;
        if (a <= xt_ && b <= qt_) r.c_[{a, b}] = v;
    }
    return r;
}

XQSeries XQSeries::scaled(const BigInt& v) const
{
    XQSeries r(xt_, qt_);
    if (v.is_zero()) return r;
    for (const auto& [m, c] : c_)
        if (!c.is_zero()) r.c_[m] = c * v;
    return r;
}

XQSeries XQSeries::substitute_scale(std::size_t m) const
{
    XQSeries r(xt_, qt_);
    for (const auto& [mono, v] : c_) {
        if (v.is_zero()) continue;
        std::size_t b = mono.second + m * mono.first;
        if (b <= qt_) r.c_[{mono.first, b}] = v;
    }
    return r;
}

XQSeries XQSeries::inverse() const
{
    const BigInt& c0 = coeff(0, 0);
    if (!(c0 == BigInt(1) || c0 == BigInt(-1)))
        throw NonUnitConstantTerm("XQSeries::inverse: constant term " + c0.str()
                                  + " is not +1 or -1");
    // dense working grid; windows in use are small
    std::vector<std::vector<BigInt>> g(xt_ + 1, std::vector<BigInt>(qt_ + 1));
    g[0][0] = c0;
    for (std::size_t a = 0; a <= xt_; ++a) {
        for (std::size_t b = 0; b <= qt_; ++b) {
            if (a == 0 && b == 0) continue;
            BigInt s;
            for (const auto& [m, v] : c_) {
                if (m.first == 0 && m.second == 0) continue;
                if (m.first > a || m.second > b) continue;
                if (v.is_zero()) continue;
                s += v * g[a - m.first][b - m.second];
            }
            g[a][b] = -(c0 * s);
        }
    }
    XQSeries r(xt_, qt_);
    for (std::size_t a = 0; a <= xt_; ++a)
        for (std::size_t b = 0; b <= qt_; ++b)
            if (!g[a][b].is_zero()) r.c_[{a, b}] = std::move(g[a][b]);
    return r;
}

QSeries XQSeries::x_slice(std::size_t a) const
{
    if (a > xt_)
        throw OutOfRange("XQSeries::x_slice: x-degree " + std::to_string(a)
                         + " beyond validity " + std::to_string(xt_));
    QSeries r(qt_);
    for (auto it = c_.lower_bound({a, 0}); it != c_.end() && it->first.first == a; ++it)
        r.set_coeff(it->first.second, it->second);
    return r;
}

bool XQSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

XQSeries XQSeries::operator-() const
{
    XQSeries r(xt_, qt_);
    for (const auto& [m, v] : c_)
        if (!v.is_zero()) r.c_[m] = -v;
    return r;
}

XQSeries operator+(const XQSeries& a, const XQSeries& b)
{
    XQSeries r(std::min(a.xt_, b.xt_), std::min(a.qt_, b.qt_));
    for (const auto& [m, v] : a.c_)
        if (m.first <= r.xt_ && m.second <= r.qt_ && !v.is_zero()) r.c_[m] = v;
    for (const auto& [m, v] : b.c_) {
        if (m.first > r.xt_ || m.second > r.qt_ || v.is_zero()) continue;
        auto [it, inserted] = r.c_.try_emplace(m, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

XQSeries operator-(const XQSeries& a, const XQSeries& b)
{
    return a + (-b);
}

XQSeries operator*(const XQSeries& a, const XQSeries& b)
{
    XQSeries r(std::min(a.xt_, b.xt_), std::min(a.qt_, b.qt_));
    for (const auto& [ma, va] : a.c_) {
        if (ma.first > r.xt_ || ma.second > r.qt_ || va.is_zero()) continue;
        for (const auto& [mb, vb] : b.c_) {
            std::size_t xa = ma.first + mb.first;
            std::size_t qb = ma.second + mb.second;
            if (xa > r.xt_ || qb > r.qt_ || vb.is_zero()) continue;
            auto [it, inserted] = r.c_.try_emplace(XQMonomial{xa, qb}, BigInt{});
            it->second += va * vb;
        }
    }
    // drop cancellations
    for (auto it = r.c_.begin(); it != r.c_.end();) {
        if (it->second.is_zero())
            it = r.c_.erase(it);
        else
            ++it;
    }
    return r;
}

bool agrees(const XQSeries& a, const XQSeries& b, std::size_t xwindow,
            std::size_t qwindow)
{
    return !first_difference(a, b, xwindow, qwindow).has_value();
}

std::optional<XQMonomial> first_difference(const XQSeries& a, const XQSeries& b,
                                           std::size_t xwindow,
                                           std::size_t qwindow)
{
    if (xwindow > a.xtrunc() || xwindow > b.xtrunc() || qwindow > a.qtrunc()
        || qwindow > b.qtrunc())
        throw OutOfRange("first_difference: window exceeds a validity pair");
    std::optional<XQMonomial> worst;
    auto check = [&](const XQMonomial& m) {
        if (m.first > xwindow || m.second > qwindow) return;
        if (worst && *worst <= m) return;
        if (!(a.coeff(m.first, m.second) == b.coeff(m.first, m.second)))
            worst = m;
    };
    for (const auto& [m, v] : a.terms()) check(m);
    for (const auto& [m, v] : b.terms()) check(m);
    return worst;
}

bool canonically_equal(const XQSeries& a, const XQSeries& b)
{
    return agrees(a, b, std::min(a.xtrunc(), b.xtrunc()),
                  std::min(a.qtrunc(), b.qtrunc()));
}

XQSeries pochhammer_xq(const PochSpec& spec, std::size_t xtrunc,
                       std::size_t qtrunc)
{
    if (!spec.in_x)
        throw OutOfRange("pochhammer_xq: bivariate evaluation of a q-only product");
    XQSeries r = XQSeries::constant(1, xtrunc, qtrunc);
    if (xtrunc == 0) return r; // no factor touches the x-degree-0 layer
    std::size_t kmax = spec.length ? std::min(*spec.length, qtrunc) : qtrunc;
    for (std::size_t k = 1; k <= kmax; ++k) {
        XQSeries factor = XQSeries::constant(1, xtrunc, qtrunc);
        factor.set_coeff(1, k, BigInt(-spec.sign));
        r = r * factor;
    }
    return r;
}

} // namespace overq
