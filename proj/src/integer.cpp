#include "mpk/integer.hpp"

#include <stdexcept>
#include <utility>

namespace mpk {

namespace {

Sign flip(Sign s) noexcept
{
    return static_cast<Sign>(-static_cast<int>(s));
}

Sign product_sign(Sign a, Sign b) noexcept
{
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

}  // namespace

Integer::Integer(std::int64_t value)
{
    if (value == 0)
        return;
    sign_ = value < 0 ? Sign::negative : Sign::positive;
    // Negate in unsigned space so INT64_MIN is handled.
    const auto raw = static_cast<std::uint64_t>(value);
    magnitude_ = Natural(value < 0 ? ~raw + 1 : raw);
}

Integer::Integer(Natural magnitude) : Integer(Sign::positive, std::move(magnitude)) {}

Integer::Integer(Sign sign, Natural magnitude) : sign_(sign), magnitude_(std::move(magnitude))
{
    if (magnitude_.is_zero())
        sign_ = Sign::zero;
    else if (sign_ == Sign::zero)
        throw std::invalid_argument("zero sign with nonzero magnitude");
}

bool Integer::is_valid() const noexcept
{
    return magnitude_.is_normalized() && ((sign_ == Sign::zero) == magnitude_.is_zero());
}

std::string Integer::to_string() const
{
    std::string digits = magnitude_.to_string(10);
    return sign_ == Sign::negative ? "-" + digits : digits;
}

Integer Integer::operator-() const
{
    Integer out = *this;
    out.sign_ = flip(sign_);
    return out;
}

Integer& Integer::operator+=(const Integer& rhs)
{
    if (rhs.is_zero())
        return *this;
    if (is_zero())
        return *this = rhs;
    if (sign_ == rhs.sign_) {
        magnitude_ += rhs.magnitude_;
        return *this;
    }
    const auto order = magnitude_ <=> rhs.magnitude_;
    if (order == 0) {
        *this = Integer{};
    } else if (order > 0) {
        magnitude_ -= rhs.magnitude_;
    } else {
        magnitude_ = rhs.magnitude_ - magnitude_;
        sign_ = rhs.sign_;
    }
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs)
{
    return *this += -rhs;
}

Integer& Integer::operator*=(const Integer& rhs)
{
    return *this = Integer(product_sign(sign_, rhs.sign_), magnitude_ * rhs.magnitude_);
}

Integer& Integer::operator>>=(std::size_t bits)
{
    magnitude_ >>= bits;
    if (magnitude_.is_zero())
        sign_ = Sign::zero;
    return *this;
}

std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) noexcept
{
    if (lhs.sign_ != rhs.sign_)
        return static_cast<int>(lhs.sign_) <=> static_cast<int>(rhs.sign_);
    if (lhs.sign_ == Sign::negative)
        return rhs.magnitude_ <=> lhs.magnitude_;
    return lhs.magnitude_ <=> rhs.magnitude_;
}

Integer add(const Integer& x, const Integer& y)
{
    return x + y;
}

Integer subtract(const Integer& x, const Integer& y)
{
    return x - y;
}

Integer multiply(const Integer& x, const Integer& y)
{
    return x * y;
}

std::strong_ordering compare(const Integer& x, const Integer& y) noexcept
{
    return x <=> y;
}

Natural floor_mod(const Integer& x, const Natural& m)
{
    Natural r = x.magnitude() % m;
    if (x.is_negative() && !r.is_zero())
        return m - r;
    return r;
}

Structure structure(const Integer& x) noexcept
{
    return {x.magnitude().bit_length(), x.is_even(), x.is_zero(), x.sign()};
}

}  // namespace mpk
