#include "mpk/bench.hpp"

#include <algorithm>
#include <chrono>

#include "mpk/random.hpp"

namespace mpk::bench {

namespace {

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;

void mix(std::uint64_t& h, const Natural& value)
{
    for (const Limb limb : value.limbs()) {
        for (int i = 0; i < 8; ++i) {
            h ^= (limb >> (8 * i)) & 0xFF;
            h *= fnv_prime;
        }
    }
    // Separator so that value boundaries are part of the hash.
    h ^= 0xFF;
    h *= fnv_prime;
}

}  // namespace

std::vector<InverseInput> make_inverse_inputs(std::size_t bits, std::size_t count, std::uint64_t seed)
{
    Rng rng(seed);
    const Natural top = Natural::power_of_two(bits - 1);
    std::vector<InverseInput> inputs;
    inputs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Natural m = rng.random_bits(bits);
        if (!m.bit(bits - 1))
            m += top;
        if (m.is_even())
            m += 1;
        Natural e = rng.random_range(Natural(1), m - 1);
        inputs.push_back({std::move(m), std::move(e)});
    }
    return inputs;
}

std::uint64_t fingerprint(const std::vector<InverseInput>& inputs)
{
    std::uint64_t h = fnv_offset;
    for (const auto& in : inputs) {
        mix(h, in.modulus);
        mix(h, in.element);
    }
    return h;
}

std::uint64_t fingerprint(const std::vector<Natural>& values)
{
    std::uint64_t h = fnv_offset;
    for (const auto& v : values)
        mix(h, v);
    return h;
}

InverseBenchResult run_inverse_bench(GcdAlgorithm algorithm, const std::vector<InverseInput>& inputs)
{
    using clock = std::chrono::steady_clock;
    InverseBenchResult result;
    result.algorithm = algorithm;
    result.iterations = inputs.size();

    std::vector<double> samples;
    samples.reserve(inputs.size());
    const auto start = clock::now();
    for (const auto& in : inputs) {
        const auto t0 = clock::now();
        try {
            const Natural d = mod_inverse(in.element, in.modulus, algorithm);
            ++result.invertible;
            (void)d;
        } catch (const NotCoprime&) {
        }
        samples.push_back(std::chrono::duration<double, std::micro>(clock::now() - t0).count());
    }
    result.total_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();

    if (!samples.empty()) {
        std::sort(samples.begin(), samples.end());
        const std::size_t mid = samples.size() / 2;
        result.median_us = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    }

    for (const auto& in : inputs) {
        ExtGcdResult r = ext_gcd(in.modulus, in.element, algorithm);
        if (r.a * Integer(in.modulus) + r.b * Integer(in.element) == Integer(r.g))
            ++result.bezout_passed;
        result.gcds.push_back(std::move(r.g));
    }
    return result;
}

std::string algorithm_name(GcdAlgorithm algorithm)
{
    return algorithm == GcdAlgorithm::binary ? "binary" : "euclid";
}

}  // namespace mpk::bench
