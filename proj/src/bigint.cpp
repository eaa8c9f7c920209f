#include "overq/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace overq {

namespace {

using Mag = std::vector<std::uint32_t>;

void trim(Mag& m)
{
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Mag mag_from_u64(std::uint64_t v)
{
    Mag m;
    while (v) {
        m.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return m;
}

/* |v| of an int64 as uint64, INT64_MIN included. */
std::uint64_t abs_u64(long long v)
{
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

int mag_cmp(const Mag& a, const Mag& b)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Mag mag_add(const Mag& a, const Mag& b)
{
    const Mag& hi = a.size() >= b.size() ? a : b;
    const Mag& lo = a.size() >= b.size() ? b : a;
    Mag r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    trim(r);
    return r;
}

/* a - b, requires |a| >= |b| */
Mag mag_sub(const Mag& a, const Mag& b)
{
    Mag r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow
                       - (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    trim(r);
    return r;
}

Mag mag_mul(const Mag& a, const Mag& b)
{
    if (a.empty() || b.empty()) return {};
    Mag r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j]
                              + static_cast<std::uint64_t>(a[i]) * b[j]
                              + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
}

/* In-place division by a small divisor, returns the remainder. */
std::uint32_t mag_divmod_small(Mag& m, std::uint32_t d)
{
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim(m);
    return static_cast<std::uint32_t>(rem);
}

} // namespace

void BigInt::promote()
{
    if (!small()) return;
    sign_ = small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
    mag_ = mag_from_u64(abs_u64(small_));
    if (mag_.empty()) mag_.push_back(0); // keep "promoted" state distinct until normalize()
    small_ = 0;
}

void BigInt::normalize()
{
    if (small()) return;
    trim(mag_);
    if (mag_.empty()) {
        small_ = 0;
        sign_ = 0;
        return;
    }
    if (mag_.size() <= 2) {
        std::uint64_t v = mag_[0];
        if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
        if (sign_ > 0 && v <= static_cast<std::uint64_t>(INT64_MAX)) {
            small_ = static_cast<long long>(v);
            mag_.clear();
            return;
        }
        if (sign_ < 0 && v <= abs_u64(INT64_MIN)) {
            small_ = v == abs_u64(INT64_MIN) ? INT64_MIN
                                             : -static_cast<long long>(v);
            mag_.clear();
            return;
        }
    }
}

int BigInt::signum() const
{
    if (small()) return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
    return sign_;
}

BigInt BigInt::from_string(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt r;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("BigInt: invalid character '") + c + "' in decimal string");
        r *= BigInt(10);
        r += BigInt(c - '0');
    }
    return neg ? -r : r;
}

std::string BigInt::str() const
{
    if (small()) return std::to_string(small_);
    Mag m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint32_t rem = mag_divmod_small(m, 1'000'000'000u);
        std::string chunk = std::to_string(rem);
        if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        digits.insert(0, chunk);
    }
    if (digits.empty()) digits = "0";
    return sign_ < 0 ? "-" + digits : digits;
}

long long BigInt::to_int64() const
{
    if (!small()) throw std::overflow_error("BigInt: value " + str() + " does not fit in int64");
    return small_;
}

std::uint32_t BigInt::mod(std::uint32_t m) const
{
    if (m == 0) throw std::invalid_argument("BigInt::mod: zero modulus");
    std::uint64_t r;
    if (small()) {
        r = abs_u64(small_) % m;
    } else {
        r = 0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            r = ((r << 32) | mag_[i]) % m;
    }
    if (is_negative() && r != 0) r = m - r;
    return static_cast<std::uint32_t>(r);
}

BigInt BigInt::operator-() const
{
    BigInt r = *this;
    if (r.small()) {
        if (r.small_ == INT64_MIN) {
            r.promote();
            r.sign_ = 1;
            r.normalize();
        } else {
            r.small_ = -r.small_;
        }
    } else {
        r.sign_ = -r.sign_;
    }
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o)
{
    if (small() && o.small()) {
        long long r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    BigInt b = o;
    promote();
    b.promote();
    if (sign_ == 0) {
        *this = b;
        normalize();
        return *this;
    }
    if (b.sign_ == 0) {
        normalize();
        return *this;
    }
    if (sign_ == b.sign_) {
        mag_ = mag_add(mag_, b.mag_);
    } else {
        int c = mag_cmp(mag_, b.mag_);
        if (c == 0) {
            mag_.clear();
            sign_ = 0;
            small_ = 0;
            return *this;
        }
        if (c > 0) {
            mag_ = mag_sub(mag_, b.mag_);
        } else {
            mag_ = mag_sub(b.mag_, mag_);
            sign_ = b.sign_;
        }
    }
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o)
{
    if (small() && o.small()) {
        long long r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    return *this += -o;
}

BigInt& BigInt::operator*=(const BigInt& o)
{
    if (small() && o.small()) {
        long long r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    BigInt b = o;
    promote();
    b.promote();
    sign_ *= b.sign_;
    mag_ = mag_mul(mag_, b.mag_);
    if (mag_.empty()) sign_ = 0;
    normalize();
    return *this;
}

bool operator==(const BigInt& a, const BigInt& b)
{
    if (a.small() != b.small()) return false; // canonical: promoted iff outside int64
    if (a.small()) return a.small_ == b.small_;
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b)
{
    int sa = a.signum(), sb = b.signum();
    if (sa != sb) return sa <=> sb;
    if (a.small() && b.small()) return a.small_ <=> b.small_;
    if (a.small() != b.small()) {
        // the promoted operand has the larger magnitude
        bool a_big = !a.small();
        if (sa >= 0) return a_big ? std::strong_ordering::greater : std::strong_ordering::less;
        return a_big ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int c = mag_cmp(a.mag_, b.mag_);
    if (sa < 0) c = -c;
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v)
{
    return os << v.str();
}

} // namespace overq
