#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mpk/errors.hpp"
#include "mpk/natural.hpp"
#include "mpk/random.hpp"

namespace mpk::rsa {

inline constexpr unsigned default_rounds = 40;
inline constexpr std::uint64_t default_public_exponent = 65537;

class ExhaustedCandidates : public Error {
public:
    explicit ExhaustedCandidates(const std::string& what) : Error("exhausted candidates: " + what) {}
};

class BadPublicExponent : public Error {
public:
    BadPublicExponent() : Error("public exponent must be odd and at least 3") {}
};

class MessageTooLarge : public Error {
public:
    MessageTooLarge() : Error("message must be smaller than the modulus") {}
};

struct KeyPair {
    Natural p;
    Natural q;
    Natural n;
    Natural phi;
    Natural e;
    Natural d;

    friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

// Trial division by the primes below 2000, then Miller-Rabin with `rounds`
// random bases. A false result is always correct; a composite passes with
// probability at most 4^-rounds. Values below 2000^2 are decided exactly.
bool is_probable_prime(const Natural& n, unsigned rounds, Rng& rng);

struct PrimeOptions {
    unsigned rounds = default_rounds;
    // Total number of candidates tested before giving up.
    std::size_t max_candidates = 100'000;
};

/// Random prime with exactly `bits` significant bits. A candidate is drawn
/// with its top and bottom bits forced, then stepped by 2 until a prime is
/// found or the step would change the bit length, in which case a fresh
/// candidate is drawn. Throws std::invalid_argument for bits < 4 and
/// ExhaustedCandidates when the candidate budget runs out.
Natural generate_prime(std::size_t bits, Rng& rng, const PrimeOptions& options = {});

struct KeygenOptions {
    PrimeOptions prime;
    // Draw e uniformly from the odd values in [3, phi) coprime to phi instead
    // of using the fixed exponent.
    bool random_e = false;
    std::size_t max_prime_pairs = 1000;
};

/**
 * Generates p and q of ceil(bits/2) bits each, then n = p*q,
 * phi = (p-1)(q-1) and d = e^-1 mod phi. Prime pairs whose phi is not coprime
 * to e (or not larger than e) are discarded and redrawn.
 *
 * Throws std::invalid_argument for bits < 8, BadPublicExponent when the
 * fixed e is even or below 3, ExhaustedCandidates when no usable pair is
 * found within the retry budget.
 */
KeyPair keygen(std::size_t bits, const Natural& e, Rng& rng, const KeygenOptions& options = {});

// Key from caller-chosen primes. Primality is not re-checked here; use
// validate() for that. Throws BadPublicExponent if e is even, below 3, or not
// below phi, and NotCoprime if gcd(e, phi) != 1.
KeyPair keypair_from_primes(const Natural& p, const Natural& q, const Natural& e);

// Name of the first violated key invariant, or nullopt when the key is sound.
// Reports a degenerate d <= 1 rather than repairing it.
std::optional<std::string> validate(const KeyPair& key, unsigned rounds = default_rounds);

// base^exponent mod modulus by left-to-right square-and-multiply.
// Throws BadModulus for modulus < 2.
Natural mod_exp(const Natural& base, const Natural& exponent, const Natural& modulus);

// Textbook m^d mod n with no padding. Throws MessageTooLarge when m >= n.
Natural sign_raw(const KeyPair& key, const Natural& message);

// s^e mod n == m. Out-of-range m or s never verify.
bool verify_raw(const Natural& n, const Natural& e, const Natural& message, const Natural& signature);

}  // namespace mpk::rsa
