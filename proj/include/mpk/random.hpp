#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mpk/natural.hpp"

namespace mpk {

/// Deterministic random stream. The same seed yields the same sequence on
/// every platform (mt19937_64 output is fixed by the standard, and no
/// implementation-defined distributions are used). Not thread-safe: give each
/// thread its own stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform value with at most `bits` bits.
    Natural random_bits(std::size_t bits);
    // Uniform value in [0, bound). Throws std::invalid_argument for bound = 0.
    Natural random_below(const Natural& bound);
    // Uniform value in [low, high]. Requires low <= high.
    Natural random_range(const Natural& low, const Natural& high);

private:
    std::mt19937_64 engine_;
};

}  // namespace mpk
