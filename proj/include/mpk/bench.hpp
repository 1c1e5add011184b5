#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mpk/gcd_inverse.hpp"
#include "mpk/natural.hpp"

namespace mpk::bench {

struct InverseInput {
    Natural modulus;  // odd, exactly `bits` bits
    Natural element;  // uniform in [1, modulus)
};

std::vector<InverseInput> make_inverse_inputs(std::size_t bits, std::size_t count, std::uint64_t seed);

// FNV-1a over the limbs of every value, for comparing input sets and results.
std::uint64_t fingerprint(const std::vector<InverseInput>& inputs);
std::uint64_t fingerprint(const std::vector<Natural>& values);

struct InverseBenchResult {
    GcdAlgorithm algorithm = GcdAlgorithm::binary;
    std::size_t iterations = 0;
    double median_us = 0;
    double total_ms = 0;
    std::size_t invertible = 0;
    std::size_t bezout_passed = 0;
    std::vector<Natural> gcds;
};

/// Times one mod_inverse per input, sequentially. The extended GCD is then
/// re-run outside the timed region to check a*m + b*e = g for every input.
InverseBenchResult run_inverse_bench(GcdAlgorithm algorithm, const std::vector<InverseInput>& inputs);

std::string algorithm_name(GcdAlgorithm algorithm);

}  // namespace mpk::bench
