#include "mpk/natural.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace mpk {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr Limb decimal_chunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int decimal_chunk_digits = 19;

std::vector<Limb> shifted_left(std::span<const Limb> src, unsigned bits, std::size_t extra)
{
    std::vector<Limb> out(src.size() + extra, 0);
    if (bits == 0) {
        std::copy(src.begin(), src.end(), out.begin());
        return out;
    }
    Limb carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        out[i] = (src[i] << bits) | carry;
        carry = src[i] >> (limb_bits - bits);
    }
    if (extra > 0)
        out[src.size()] = carry;
    return out;
}

}  // namespace

Natural::Natural(std::uint64_t value)
{
    if (value != 0)
        limbs_.push_back(value);
}

Natural Natural::from_limbs(std::vector<Limb> limbs)
{
    Natural n;
    n.limbs_ = std::move(limbs);
    n.normalize();
    return n;
}

Natural Natural::from_bytes_le(std::span<const std::uint8_t> bytes)
{
    std::vector<Limb> limbs((bytes.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        limbs[i / 8] |= Limb{bytes[i]} << (8 * (i % 8));
    return from_limbs(std::move(limbs));
}

Natural Natural::power_of_two(std::size_t exponent)
{
    return Natural(1) << exponent;
}

std::vector<std::uint8_t> Natural::to_bytes_le() const
{
    std::vector<std::uint8_t> out((bit_length() + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(limbs_[i / 8] >> (8 * (i % 8)));
    return out;
}

void Natural::normalize() noexcept
{
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

std::size_t Natural::bit_length() const noexcept
{
    if (limbs_.empty())
        return 0;
    return limbs_.size() * limb_bits - static_cast<std::size_t>(std::countl_zero(limbs_.back()));
}

bool Natural::bit(std::size_t index) const noexcept
{
    const std::size_t word = index / limb_bits;
    if (word >= limbs_.size())
        return false;
    return ((limbs_[word] >> (index % limb_bits)) & 1U) != 0;
}

std::size_t Natural::trailing_zeros() const noexcept
{
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] != 0)
            return i * limb_bits + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    }
    return 0;
}

std::string Natural::to_string(unsigned radix) const
{
    if (is_zero())
        return "0";
    std::string out;
    switch (radix) {
    case 2:
        for (std::size_t i = bit_length(); i-- > 0;)
            out.push_back(bit(i) ? '1' : '0');
        return out;
    case 16: {
        static constexpr char digits[] = "0123456789abcdef";
        const std::size_t nibbles = (bit_length() + 3) / 4;
        for (std::size_t i = nibbles; i-- > 0;)
            out.push_back(digits[(limbs_[i / 16] >> (4 * (i % 16))) & 0xF]);
        return out;
    }
    case 10: {
        std::vector<Limb> chunks;
        Natural rest = *this;
        while (!rest.is_zero()) {
            auto [q, r] = div_rem(rest, decimal_chunk);
            chunks.push_back(r);
            rest = std::move(q);
        }
        out = std::to_string(chunks.back());
        for (std::size_t i = chunks.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunks[i]);
            out.append(decimal_chunk_digits - part.size(), '0');
            out += part;
        }
        return out;
    }
    default:
        throw std::invalid_argument("unsupported radix " + std::to_string(radix));
    }
}

std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) noexcept
{
    if (lhs.limbs_.size() != rhs.limbs_.size())
        return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
        if (lhs.limbs_[i] != rhs.limbs_[i])
            return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& rhs)
{
    if (limbs_.size() < rhs.limbs_.size())
        limbs_.resize(rhs.limbs_.size(), 0);
    Limb carry = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
        const Wide sum = Wide{limbs_[i]} + rhs.limbs_[i] + carry;
        limbs_[i] = static_cast<Limb>(sum);
        carry = static_cast<Limb>(sum >> limb_bits);
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
        limbs_[i] += 1;
        carry = limbs_[i] == 0 ? 1 : 0;
    }
    if (carry != 0)
        limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs)
{
    if (*this < rhs)
        throw Underflow();
    Limb borrow = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
        const Limb sub = rhs.limbs_[i] + borrow;
        const Limb next_borrow = (sub < borrow) || (limbs_[i] < sub) ? 1 : 0;
        limbs_[i] -= sub;
        borrow = next_borrow;
    }
    for (; borrow != 0; ++i) {
        borrow = limbs_[i] == 0 ? 1 : 0;
        limbs_[i] -= 1;
    }
    normalize();
    return *this;
}

Natural multiply_schoolbook(const Natural& x, const Natural& y)
{
    const auto a = x.limbs();
    const auto b = y.limbs();
    if (a.empty() || b.empty())
        return {};
    std::vector<Limb> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Limb carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Wide t = Wide{a[i]} * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<Limb>(t);
            carry = static_cast<Limb>(t >> limb_bits);
        }
        out[i + b.size()] = carry;
    }
    return Natural::from_limbs(std::move(out));
}

Natural operator*(const Natural& lhs, const Natural& rhs)
{
    return multiply_schoolbook(lhs, rhs);
}

Natural& Natural::operator*=(const Natural& rhs)
{
    return *this = *this * rhs;
}

Natural operator/(const Natural& lhs, const Natural& rhs)
{
    return div_rem(lhs, rhs).quotient;
}

Natural operator%(const Natural& lhs, const Natural& rhs)
{
    return div_rem(lhs, rhs).remainder;
}

Natural& Natural::operator/=(const Natural& rhs)
{
    return *this = *this / rhs;
}

Natural& Natural::operator%=(const Natural& rhs)
{
    return *this = *this % rhs;
}

Natural& Natural::operator<<=(std::size_t bits)
{
    if (is_zero() || bits == 0)
        return *this;
    const std::size_t words = bits / limb_bits;
    const auto rem = static_cast<unsigned>(bits % limb_bits);
    std::vector<Limb> out = shifted_left(limbs_, rem, 1);
    out.insert(out.begin(), words, 0);
    limbs_ = std::move(out);
    normalize();
    return *this;
}

Natural& Natural::operator>>=(std::size_t bits)
{
    const std::size_t words = bits / limb_bits;
    if (words >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    const auto rem = static_cast<unsigned>(bits % limb_bits);
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(words));
    if (rem != 0) {
        for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
            limbs_[i] = (limbs_[i] >> rem) | (limbs_[i + 1] << (limb_bits - rem));
        limbs_.back() >>= rem;
    }
    normalize();
    return *this;
}

DivRemWord div_rem(const Natural& x, Limb y)
{
    if (y == 0)
        throw DivisionByZero();
    const auto a = x.limbs();
    std::vector<Limb> q(a.size(), 0);
    Wide rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        const Wide cur = (rem << limb_bits) | a[i];
        q[i] = static_cast<Limb>(cur / y);
        rem = cur % y;
    }
    return {Natural::from_limbs(std::move(q)), static_cast<Limb>(rem)};
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D on 64-bit limbs.
DivRem div_rem(const Natural& x, const Natural& y)
{
    if (y.is_zero())
        throw DivisionByZero();
    if (x < y)
        return {Natural{}, x};
    if (y.limbs().size() == 1) {
        auto [q, r] = div_rem(x, y.limbs()[0]);
        return {std::move(q), Natural(r)};
    }

    const auto shift_bits = static_cast<unsigned>(std::countl_zero(y.limbs().back()));
    const std::vector<Limb> v = shifted_left(y.limbs(), shift_bits, 0);
    std::vector<Limb> u = shifted_left(x.limbs(), shift_bits, 1);
    const std::size_t n = v.size();
    const std::size_t m = x.limbs().size() - n;
    std::vector<Limb> q(m + 1, 0);

    const Limb v_top = v[n - 1];
    const Limb v_next = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        const Wide numerator = (Wide{u[j + n]} << limb_bits) | u[j + n - 1];
        Wide qhat = numerator / v_top;
        Wide rhat = numerator % v_top;
        while ((qhat >> limb_bits) != 0 || qhat * v_next > ((rhat << limb_bits) | u[j + n - 2])) {
            --qhat;
            rhat += v_top;
            if ((rhat >> limb_bits) != 0)
                break;
        }

        Limb carry = 0;
        Limb borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Wide product = qhat * v[i] + carry;
            carry = static_cast<Limb>(product >> limb_bits);
            const auto low = static_cast<Limb>(product);
            const Limb sub = low + borrow;
            const Limb next_borrow = (sub < low) || (u[i + j] < sub) ? 1 : 0;
            u[i + j] -= sub;
            borrow = next_borrow;
        }
        const Wide top_sub = Wide{carry} + borrow;
        const bool negative = Wide{u[j + n]} < top_sub;
        u[j + n] = static_cast<Limb>(u[j + n] - static_cast<Limb>(top_sub));

        if (negative) {
            --qhat;
            Limb add_carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const Wide sum = Wide{u[i + j]} + v[i] + add_carry;
                u[i + j] = static_cast<Limb>(sum);
                add_carry = static_cast<Limb>(sum >> limb_bits);
            }
            u[j + n] += add_carry;
        }
        q[j] = static_cast<Limb>(qhat);
    }

    u.resize(n);
    Natural remainder = Natural::from_limbs(std::move(u));
    remainder >>= shift_bits;
    return {Natural::from_limbs(std::move(q)), std::move(remainder)};
}

}  // namespace mpk
