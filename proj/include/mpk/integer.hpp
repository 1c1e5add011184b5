#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "mpk/natural.hpp"

namespace mpk {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

/// Sign-magnitude integer. Zero always carries Sign::zero and an empty magnitude.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t value);     // NOLINT(google-explicit-constructor)
    Integer(Natural magnitude);      // NOLINT(google-explicit-constructor)
    // Throws std::invalid_argument for Sign::zero with a nonzero magnitude.
    Integer(Sign sign, Natural magnitude);

    Sign sign() const noexcept { return sign_; }
    const Natural& magnitude() const noexcept { return magnitude_; }
    bool is_zero() const noexcept { return sign_ == Sign::zero; }
    bool is_negative() const noexcept { return sign_ == Sign::negative; }
    bool is_even() const noexcept { return magnitude_.is_even(); }

    bool is_valid() const noexcept;

    std::string to_string() const;

    Integer operator-() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    // Divides the magnitude by 2^bits, truncating toward zero.
    Integer& operator>>=(std::size_t bits);

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Integer operator>>(Integer lhs, std::size_t bits) { return lhs >>= bits; }

    friend bool operator==(const Integer&, const Integer&) = default;
    friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) noexcept;

private:
    Sign sign_ = Sign::zero;
    Natural magnitude_;
};

Integer add(const Integer& x, const Integer& y);
Integer subtract(const Integer& x, const Integer& y);
Integer multiply(const Integer& x, const Integer& y);
std::strong_ordering compare(const Integer& x, const Integer& y) noexcept;

// Least non-negative residue of x modulo m. Throws DivisionByZero for m = 0.
Natural floor_mod(const Integer& x, const Natural& m);

struct Structure {
    std::size_t bit_length = 0;
    bool is_even = true;
    bool is_zero = true;
    Sign sign = Sign::zero;
};

Structure structure(const Integer& x) noexcept;

}  // namespace mpk
