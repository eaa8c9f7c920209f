#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace overq {

/**
 * Arbitrary-precision signed integer with an int64 fast path.
 *
 * Values stay in a single int64 until an operation overflows, at which point
 * they are promoted to a sign + base-2^32 magnitude. Results are demoted back
 * to the fast path whenever they fit, so the representation is canonical:
 * the limb vector is non-empty only for |v| > INT64_MAX.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : small_(v) {}
    BigInt(long v) : small_(v) {}
    BigInt(long long v) : small_(v) {}

    /* Parses an optionally signed decimal string; throws std::invalid_argument. */
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return mag_.empty() && small_ == 0; }
    bool is_one() const { return mag_.empty() && small_ == 1; }
    bool is_negative() const { return mag_.empty() ? small_ < 0 : sign_ < 0; }

    /* -1, 0 or +1 */
    int signum() const;

    std::string str() const;

    /* Value as int64; throws std::overflow_error when promoted. */
    long long to_int64() const;

    /* Mathematical residue in [0, m); m must be positive. */
    std::uint32_t mod(std::uint32_t m) const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    bool small() const { return mag_.empty(); }
    void promote();
    void normalize();

    long long small_ = 0;
    int sign_ = 0;                    // used only when mag_ is non-empty
    std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limb
};

} // namespace overq
