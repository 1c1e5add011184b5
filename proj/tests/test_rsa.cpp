#include <doctest.h>

#include <cstdint>
#include <vector>

#include "mpk/gcd_inverse.hpp"
#include "mpk/rsa.hpp"

using mpk::Natural;
using mpk::Rng;
namespace rsa = mpk::rsa;

namespace {

bool trial_division_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

std::uint64_t repeated_mul_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t r = 1 % mod;
    for (std::uint64_t i = 0; i < exp; ++i)
        r = (r * (base % mod)) % mod;
    return r;
}

}  // namespace

TEST_CASE("is_probable_prime small cases")
{
    Rng rng(1);
    CHECK(rsa::is_probable_prime(2, 40, rng));
    CHECK_FALSE(rsa::is_probable_prime(1, 40, rng));
    CHECK_FALSE(rsa::is_probable_prime(0, 40, rng));
    // 561 = 3 * 11 * 17, the smallest Carmichael number.
    CHECK(561 == 3 * 11 * 17);
    CHECK_FALSE(rsa::is_probable_prime(561, 40, rng));
    CHECK_THROWS_AS(rsa::is_probable_prime(7, 0, rng), std::invalid_argument);
}

TEST_CASE("is_probable_prime matches trial division below 10^5")
{
    Rng rng(2);
    for (std::uint64_t n = 0; n < 100'000; ++n)
        REQUIRE(rsa::is_probable_prime(n, 40, rng) == trial_division_prime(n));
}

TEST_CASE("Miller-Rabin path on values past the trial-division range")
{
    Rng rng(3);
    // Mersenne primes 2^61 - 1 and 2^89 - 1; 2^67 - 1 = 193707721 * 761838257287.
    CHECK(rsa::is_probable_prime(Natural::power_of_two(61) - 1, 40, rng));
    CHECK(rsa::is_probable_prime(Natural::power_of_two(89) - 1, 40, rng));
    CHECK(Natural(193707721) * Natural(761838257287ULL) == Natural::power_of_two(67) - 1);
    CHECK_FALSE(rsa::is_probable_prime(Natural::power_of_two(67) - 1, 40, rng));
    // Strong pseudoprime to bases 2, 3, 5 and 7.
    CHECK_FALSE(rsa::is_probable_prime(3215031751ULL, 40, rng));
    // Carmichael numbers above the trial-division bound.
    CHECK_FALSE(rsa::is_probable_prime(9746347772161ULL, 40, rng));
    CHECK_FALSE(rsa::is_probable_prime(Natural(1000003) * Natural(1000033), 40, rng));
}

TEST_CASE("generate_prime")
{
    // 9 = 3*3 and 15 = 3*5 are the only other 4-bit odd candidates.
    std::vector<std::uint64_t> four_bit;
    for (std::uint64_t c = 9; c <= 15; c += 2) {
        if (trial_division_prime(c))
            four_bit.push_back(c);
    }
    CHECK(four_bit == std::vector<std::uint64_t>{11, 13});

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const Natural p = rsa::generate_prime(4, rng);
        REQUIRE((p == Natural(11) || p == Natural(13)));

        Rng rng8(seed);
        const Natural p8 = rsa::generate_prime(8, rng8);
        REQUIRE(p8 >= Natural(128));
        REQUIRE(p8 <= Natural(255));
        REQUIRE(trial_division_prime(p8.low_u64()));
    }

    for (std::size_t bits : {16U, 33U, 64U, 100U, 256U}) {
        Rng a(77), b(77);
        const Natural p = rsa::generate_prime(bits, a);
        CHECK(p == rsa::generate_prime(bits, b));
        CHECK(p.bit_length() == bits);
        CHECK(p.is_odd());
    }

    Rng rng(1);
    CHECK_THROWS_AS(rsa::generate_prime(3, rng), std::invalid_argument);
    rsa::PrimeOptions none;
    none.max_candidates = 0;
    CHECK_THROWS_AS(rsa::generate_prime(64, rng, none), rsa::ExhaustedCandidates);
}

TEST_CASE("key from primes 5 and 11 with e = 3")
{
    std::uint64_t brute_d = 0;
    for (std::uint64_t d = 1; d < 40; ++d) {
        if (3 * d % 40 == 1)
            brute_d = d;
    }
    REQUIRE(brute_d == 27);

    const rsa::KeyPair key = rsa::keypair_from_primes(5, 11, 3);
    CHECK(key.n == Natural(55));
    CHECK(key.phi == Natural(40));
    CHECK(key.d == Natural(brute_d));
    CHECK_FALSE(rsa::validate(key).has_value());

    CHECK_THROWS_AS(rsa::keypair_from_primes(5, 11, 4), rsa::BadPublicExponent);
    CHECK_THROWS_AS(rsa::keypair_from_primes(5, 11, 1), rsa::BadPublicExponent);
    CHECK_THROWS_AS(rsa::keypair_from_primes(5, 11, 41), rsa::BadPublicExponent);
    CHECK_THROWS_AS(rsa::keypair_from_primes(5, 11, 5), mpk::NotCoprime);
}

TEST_CASE("keygen")
{
    Rng a(1234), b(1234);
    const rsa::KeyPair k1 = rsa::keygen(64, 65537, a);
    const rsa::KeyPair k2 = rsa::keygen(64, 65537, b);
    CHECK(k1 == k2);
    CHECK_FALSE(rsa::validate(k1).has_value());
    CHECK(((k1.e * k1.d) % k1.phi) == Natural(1));
    CHECK(k1.p.bit_length() == 32);
    CHECK(k1.q.bit_length() == 32);

    Rng c(9);
    rsa::KeygenOptions random_e;
    random_e.random_e = true;
    const rsa::KeyPair k3 = rsa::keygen(128, 0, c, random_e);
    CHECK_FALSE(rsa::validate(k3).has_value());
    CHECK(k3.e.is_odd());

    Rng d(5);
    CHECK_THROWS_AS(rsa::keygen(64, 65536, d), rsa::BadPublicExponent);
    CHECK_THROWS_AS(rsa::keygen(64, 1, d), rsa::BadPublicExponent);
    CHECK_THROWS_AS(rsa::keygen(7, 3, d), std::invalid_argument);
    // 4-bit primes give phi <= 168 < 65537, so no pair can ever work.
    rsa::KeygenOptions few;
    few.max_prime_pairs = 20;
    CHECK_THROWS_AS(rsa::keygen(8, 65537, d, few), rsa::ExhaustedCandidates);
    // gcd(3, 120) = 3 for the only 4-bit pair, but 7 works.
    Rng e(5);
    CHECK_FALSE(rsa::validate(rsa::keygen(8, 7, e)).has_value());
}

TEST_CASE("validate reports each broken invariant")
{
    const rsa::KeyPair good = rsa::keypair_from_primes(5, 11, 3);
    rsa::KeyPair k = good;
    k.n = 56;
    CHECK(rsa::validate(k) == "n != p*q");
    k = good;
    k.p = 9;
    CHECK(rsa::validate(k) == "p is not prime");
    k = good;
    k.d = 26;
    CHECK(rsa::validate(k) == "e*d != 1 mod phi");
    k = good;
    k.phi = 41;
    CHECK(rsa::validate(k) == "phi != (p-1)*(q-1)");
}

TEST_CASE("mod_exp")
{
    CHECK(rsa::mod_exp(1234, 1, 55) == Natural(1234 % 55));
    CHECK(rsa::mod_exp(2, 10, 1000) == Natural(24));
    CHECK(repeated_mul_pow(8, 27, 55) == 2);
    CHECK(rsa::mod_exp(8, 27, 55) == Natural(2));
    CHECK(rsa::mod_exp(5, 0, 7) == Natural(1));
    CHECK_THROWS_AS(rsa::mod_exp(5, 3, 1), mpk::BadModulus);

    for (std::uint64_t base = 0; base < 40; ++base) {
        for (std::uint64_t exp = 0; exp < 40; ++exp)
            REQUIRE(rsa::mod_exp(base, exp, 97) == Natural(repeated_mul_pow(base, exp, 97)));
    }
}

TEST_CASE("raw sign and verify")
{
    const rsa::KeyPair key = rsa::keypair_from_primes(5, 11, 3);
    CHECK(repeated_mul_pow(8, 27, 55) == 2);
    CHECK(rsa::sign_raw(key, 8) == Natural(2));
    CHECK(rsa::verify_raw(key.n, key.e, 8, 2));
    CHECK(rsa::sign_raw(key, 0) == Natural(0));
    CHECK(rsa::verify_raw(key.n, key.e, 0, 0));
    CHECK(rsa::sign_raw(key, 1) == Natural(1));
    CHECK(rsa::verify_raw(key.n, key.e, 1, 1));
    CHECK_FALSE(rsa::verify_raw(key.n, key.e, 8, 3));
    CHECK_FALSE(rsa::verify_raw(key.n, key.e, 8, 57));
    CHECK_THROWS_AS(rsa::sign_raw(key, 55), rsa::MessageTooLarge);
}

TEST_CASE("textbook RSA is a permutation of Z_55")
{
    const rsa::KeyPair key = rsa::keypair_from_primes(5, 11, 3);
    for (std::uint64_t m = 0; m < 55; ++m)
        REQUIRE(rsa::mod_exp(rsa::mod_exp(m, key.e, key.n), key.d, key.n) == Natural(m));
}

TEST_CASE("sign/verify round trip for 16..512-bit keys")
{
    Rng rng(31337);
    for (std::size_t bits : {16U, 32U, 64U, 128U, 256U, 512U}) {
        // phi < 2^16 for 16-bit moduli, so small keys use a small exponent.
        const rsa::KeyPair key = rsa::keygen(bits, bits < 64 ? 17 : 65537, rng);
        REQUIRE_FALSE(rsa::validate(key).has_value());
        for (int i = 0; i < 100; ++i) {
            const Natural m = rng.random_below(key.n);
            const Natural s = rsa::sign_raw(key, m);
            REQUIRE(rsa::verify_raw(key.n, key.e, m, s));
            if (m > Natural(1))
                REQUIRE_FALSE(rsa::verify_raw(key.n, key.e, m, (s + 1) % key.n));
        }
    }
}
