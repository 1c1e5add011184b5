#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpk/errors.hpp"

namespace mpk {

using Limb = std::uint64_t;
inline constexpr unsigned limb_bits = 64;

/**
 * Arbitrary-precision non-negative integer.
 *
 * Stored as 64-bit limbs, least significant first. The most significant limb
 * is never zero, and zero is the empty limb sequence, so two equal values
 * always have identical representations.
 */
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

    // Trailing zero limbs are stripped.
    static Natural from_limbs(std::vector<Limb> limbs);
    // Little-endian bytes; trailing zero bytes are allowed.
    static Natural from_bytes_le(std::span<const std::uint8_t> bytes);
    static Natural power_of_two(std::size_t exponent);

    std::span<const Limb> limbs() const noexcept { return limbs_; }
    std::vector<std::uint8_t> to_bytes_le() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_even() const noexcept { return limbs_.empty() || (limbs_[0] & 1U) == 0; }
    bool is_odd() const noexcept { return !is_even(); }
    bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool fits_u64() const noexcept { return limbs_.size() <= 1; }
    // Lowest 64 bits of the value.
    std::uint64_t low_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }

    // Position of the highest set bit plus one; zero for zero.
    std::size_t bit_length() const noexcept;
    bool bit(std::size_t index) const noexcept;
    std::size_t trailing_zeros() const noexcept;

    // Representation invariant; holds for every value produced by this class.
    bool is_normalized() const noexcept { return limbs_.empty() || limbs_.back() != 0; }

    // Radix 2, 10 or 16. Hex digits are lowercase, no prefix, no leading zeros.
    std::string to_string(unsigned radix = 10) const;

    Natural& operator+=(const Natural& rhs);
    Natural& operator-=(const Natural& rhs);  // throws Underflow
    Natural& operator*=(const Natural& rhs);
    Natural& operator/=(const Natural& rhs);
    Natural& operator%=(const Natural& rhs);
    Natural& operator<<=(std::size_t bits);
    Natural& operator>>=(std::size_t bits);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
    friend Natural operator*(const Natural& lhs, const Natural& rhs);
    friend Natural operator/(const Natural& lhs, const Natural& rhs);
    friend Natural operator%(const Natural& lhs, const Natural& rhs);
    friend Natural operator<<(Natural lhs, std::size_t bits) { return lhs <<= bits; }
    friend Natural operator>>(Natural lhs, std::size_t bits) { return lhs >>= bits; }

    friend bool operator==(const Natural&, const Natural&) = default;
    friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) noexcept;

private:
    void normalize() noexcept;

    std::vector<Limb> limbs_;
};

struct DivRem {
    Natural quotient;
    Natural remainder;
};

// x = quotient * y + remainder, 0 <= remainder < y. Throws DivisionByZero.
DivRem div_rem(const Natural& x, const Natural& y);

struct DivRemWord {
    Natural quotient;
    Limb remainder;
};

DivRemWord div_rem(const Natural& x, Limb y);

// Schoolbook product. Always available regardless of what operator* uses.
Natural multiply_schoolbook(const Natural& x, const Natural& y);

enum class ShiftDirection { left, right };

inline Natural shift(const Natural& x, std::size_t bits, ShiftDirection direction)
{
    return direction == ShiftDirection::left ? x << bits : x >> bits;
}

}  // namespace mpk
