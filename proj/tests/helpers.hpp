#pragma once

#include <cstdint>
#include <random>

#include "mpk/integer.hpp"
#include "mpk/natural.hpp"
#include "oracle.hpp"

namespace testing {

inline mpk::Natural to_natural(const oracle::Digits& d)
{
    return mpk::Natural::from_bytes_le(d);
}

inline oracle::Digits to_digits(const mpk::Natural& n)
{
    return n.to_bytes_le();
}

// Up to `max_bits` bits, with the length itself random so that small and
// unequal operand sizes are exercised too.
inline mpk::Natural random_natural(std::mt19937_64& gen, std::size_t max_bits)
{
    const std::size_t bits = gen() % (max_bits + 1);
    return to_natural(oracle::random_digits(gen, bits));
}

inline mpk::Integer random_integer(std::mt19937_64& gen, std::size_t max_bits)
{
    mpk::Natural mag = random_natural(gen, max_bits);
    return mpk::Integer(gen() % 2 == 0 ? mpk::Sign::positive : mpk::Sign::negative, std::move(mag));
}

}  // namespace testing
