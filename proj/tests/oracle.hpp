#pragma once

// Reference arithmetic used only by the tests. Numbers are little-endian
// base-256 digit vectors and every routine works one digit at a time, so none
// of it shares code or limb width with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Digits = std::vector<std::uint8_t>;

inline void trim(Digits& d)
{
    while (!d.empty() && d.back() == 0)
        d.pop_back();
}

inline Digits random_digits(std::mt19937_64& gen, std::size_t bits)
{
    Digits d((bits + 7) / 8);
    for (auto& b : d)
        b = static_cast<std::uint8_t>(gen());
    if (bits % 8 != 0 && !d.empty())
        d.back() &= static_cast<std::uint8_t>((1U << (bits % 8)) - 1);
    trim(d);
    return d;
}

inline int compare(const Digits& a, const Digits& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline Digits add(const Digits& a, const Digits& b)
{
    Digits out(std::max(a.size(), b.size()) + 1, 0);
    unsigned carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const unsigned s = (i < a.size() ? a[i] : 0U) + (i < b.size() ? b[i] : 0U) + carry;
        out[i] = static_cast<std::uint8_t>(s & 0xFF);
        carry = s >> 8;
    }
    trim(out);
    return out;
}

// Requires a >= b.
inline Digits sub(const Digits& a, const Digits& b)
{
    Digits out(a.size(), 0);
    int borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = int{a[i]} - (i < b.size() ? int{b[i]} : 0) - borrow;
        borrow = d < 0 ? 1 : 0;
        out[i] = static_cast<std::uint8_t>(d + (borrow != 0 ? 256 : 0));
    }
    trim(out);
    return out;
}

inline Digits mul(const Digits& a, const Digits& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<std::uint32_t> acc(a.size() + b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::uint32_t t = acc[i + j] + std::uint32_t{a[i]} * b[j] + carry;
            acc[i + j] = t & 0xFF;
            carry = t >> 8;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            const std::uint32_t t = acc[k] + carry;
            acc[k++] = t & 0xFF;
            carry = t >> 8;
        }
    }
    Digits out(acc.begin(), acc.end());
    trim(out);
    return out;
}

inline bool bit(const Digits& d, std::size_t i)
{
    return i / 8 < d.size() && ((d[i / 8] >> (i % 8)) & 1U) != 0;
}

inline Digits shl1_or(const Digits& d, bool low)
{
    Digits out(d.size() + 1, 0);
    unsigned carry = low ? 1U : 0U;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(((d[i] << 1) | carry) & 0xFF);
        carry = d[i] >> 7;
    }
    out[d.size()] = static_cast<std::uint8_t>(carry);
    trim(out);
    return out;
}

struct QuotRem {
    Digits q;
    Digits r;
};

// Restoring binary long division, one bit per step.
inline QuotRem divmod(const Digits& a, const Digits& b)
{
    Digits q(a.size(), 0);
    Digits r;
    for (std::size_t i = a.size() * 8; i-- > 0;) {
        r = shl1_or(r, bit(a, i));
        if (compare(r, b) >= 0) {
            r = sub(r, b);
            q[i / 8] |= static_cast<std::uint8_t>(1U << (i % 8));
        }
    }
    trim(q);
    return {q, r};
}

}  // namespace oracle
