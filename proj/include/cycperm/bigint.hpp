#ifndef CYCPERM_BIGINT_HPP
#define CYCPERM_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cycperm {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Supports exactly the ring operations the polynomial engine needs; there is
// no general division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    // Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    // Value if it fits in a signed 64-bit integer.
    std::optional<long long> to_int64() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { lhs += rhs; return lhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { lhs -= rhs; return lhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    bool operator==(const BigInt& rhs) const { return sign_ == rhs.sign_ && mag_ == rhs.mag_; }
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    static BigInt factorial(int n);
    static BigInt pow(const BigInt& base, int exp);

private:
    int sign_ = 0;                  // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // In-place magnitude division by a small divisor; returns the remainder.
    std::uint32_t div_mag_small(std::uint32_t d);
    void mul_add_small(std::uint32_t mul, std::uint32_t add);
};

// Rows 0..n of the binomial triangle, exact.
std::vector<std::vector<BigInt>> binomial_triangle(int n);

} // namespace cycperm

#endif
