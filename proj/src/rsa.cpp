#include "mpk/rsa.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "mpk/gcd_inverse.hpp"

namespace mpk::rsa {

namespace {

constexpr Limb trial_division_limit = 2000;

const std::vector<Limb>& small_primes()
{
    static const std::vector<Limb> primes = [] {
        std::array<bool, trial_division_limit> composite{};
        std::vector<Limb> out;
        for (Limb i = 2; i < trial_division_limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (Limb j = i * i; j < trial_division_limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Fixed seed for Miller-Rabin bases used during key validation.
constexpr std::uint64_t validation_seed = 0x5eed'0f'ba5e'c0deULL;

}  // namespace

bool is_probable_prime(const Natural& n, unsigned rounds, Rng& rng)
{
    if (rounds == 0)
        throw std::invalid_argument("is_probable_prime: rounds must be at least 1");
    if (n < Natural(2))
        return false;
    for (const Limb p : small_primes()) {
        if (n == Natural(p))
            return true;
        if (div_rem(n, p).remainder == 0)
            return false;
    }
    // Every composite below limit^2 has a prime factor below the limit.
    if (n < Natural(trial_division_limit * trial_division_limit))
        return true;

    const Natural n_minus_one = n - 1;
    const std::size_t twos = n_minus_one.trailing_zeros();
    const Natural odd_part = n_minus_one >> twos;
    const Natural two{2};
    const Natural max_base = n - 2;

    for (unsigned round = 0; round < rounds; ++round) {
        const Natural base = rng.random_range(two, max_base);
        Natural x = mod_exp(base, odd_part, n);
        if (x.is_one() || x == n_minus_one)
            continue;
        bool witness = true;
        for (std::size_t i = 1; i < twos; ++i) {
            x = (x * x) % n;
            if (x == n_minus_one) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

Natural generate_prime(std::size_t bits, Rng& rng, const PrimeOptions& options)
{
    if (bits < 4)
        throw std::invalid_argument("generate_prime: bits must be at least 4");
    const Natural top_bit = Natural::power_of_two(bits - 1);
    std::size_t tested = 0;
    for (;;) {
        Natural candidate = rng.random_bits(bits);
        if (!candidate.bit(bits - 1))
            candidate += top_bit;
        if (candidate.is_even())
            candidate += 1;
        for (; candidate.bit_length() == bits; candidate += 2) {
            if (++tested > options.max_candidates)
                throw ExhaustedCandidates("no " + std::to_string(bits) + "-bit prime found");
            if (is_probable_prime(candidate, options.rounds, rng))
                return candidate;
        }
    }
}

KeyPair keypair_from_primes(const Natural& p, const Natural& q, const Natural& e)
{
    KeyPair key;
    key.p = p;
    key.q = q;
    key.n = p * q;
    key.phi = (p - 1) * (q - 1);
    if (e.is_even() || e < Natural(3) || e >= key.phi)
        throw BadPublicExponent();
    key.e = e;
    key.d = mod_inverse(e, key.phi);
    return key;
}

KeyPair keygen(std::size_t bits, const Natural& e, Rng& rng, const KeygenOptions& options)
{
    if (bits < 8)
        throw std::invalid_argument("keygen: modulus must be at least 8 bits");
    if (!options.random_e && (e.is_even() || e < Natural(3)))
        throw BadPublicExponent();

    const std::size_t prime_bits = (bits + 1) / 2;
    for (std::size_t pair = 0; pair < options.max_prime_pairs; ++pair) {
        Natural p = generate_prime(prime_bits, rng, options.prime);
        Natural q = generate_prime(prime_bits, rng, options.prime);
        if (p == q)
            continue;
        const Natural phi = (p - 1) * (q - 1);

        Natural exponent = e;
        if (options.random_e) {
            // Any odd prime below phi that does not divide it qualifies, so
            // rejection sampling terminates.
            do {
                exponent = rng.random_range(Natural(3), phi - 1);
            } while (exponent.is_even() || !gcd(exponent, phi).is_one());
        } else if (exponent >= phi || !gcd(exponent, phi).is_one()) {
            continue;
        }
        return keypair_from_primes(p, q, exponent);
    }
    throw ExhaustedCandidates("no prime pair compatible with the public exponent");
}

std::optional<std::string> validate(const KeyPair& key, unsigned rounds)
{
    Rng rng(validation_seed);
    if (!is_probable_prime(key.p, rounds, rng))
        return "p is not prime";
    if (!is_probable_prime(key.q, rounds, rng))
        return "q is not prime";
    if (key.p == key.q)
        return "p equals q";
    if (key.n != key.p * key.q)
        return "n != p*q";
    if (key.phi != (key.p - 1) * (key.q - 1))
        return "phi != (p-1)*(q-1)";
    if (key.e <= Natural(1) || key.e >= key.phi)
        return "e outside (1, phi)";
    if (!gcd(key.e, key.phi).is_one())
        return "gcd(e, phi) != 1";
    if (key.d >= key.phi)
        return "d outside (1, phi)";
    if (!((key.e * key.d) % key.phi).is_one())
        return "e*d != 1 mod phi";
    if (key.d <= Natural(1))
        return "degenerate d <= 1";
    return std::nullopt;
}

Natural mod_exp(const Natural& base, const Natural& exponent, const Natural& modulus)
{
    if (modulus < Natural(2))
        throw BadModulus();
    const Natural b = base % modulus;
    Natural result{1};
    for (std::size_t i = exponent.bit_length(); i-- > 0;) {
        result = (result * result) % modulus;
        if (exponent.bit(i))
            result = (result * b) % modulus;
    }
    return result;
}

Natural sign_raw(const KeyPair& key, const Natural& message)
{
    if (message >= key.n)
        throw MessageTooLarge();
    return mod_exp(message, key.d, key.n);
}

bool verify_raw(const Natural& n, const Natural& e, const Natural& message, const Natural& signature)
{
    if (n < Natural(2) || message >= n || signature >= n)
        return false;
    return mod_exp(signature, e, n) == message;
}

}  // namespace mpk::rsa
