#pragma once

#include <string>

#include "mpk/errors.hpp"
#include "mpk/integer.hpp"
#include "mpk/natural.hpp"

namespace mpk {

/// Output of an extended GCD on inputs (x, y): a*x + b*y = g.
///
/// The coefficients are returned as the algorithm produced them. Bezout
/// coefficients are not unique, so the binary and Euclidean variants may
/// disagree on (a, b) while agreeing on g.
struct ExtGcdResult {
    Natural g;
    Integer a;
    Integer b;
};

enum class GcdAlgorithm { binary, euclid };

class BothZero : public Error {
public:
    BothZero() : Error("gcd(0, 0) is undefined") {}
};

class BadModulus : public Error {
public:
    BadModulus() : Error("modulus must be at least 2") {}
};

// The element reduces to zero modulo the modulus.
class ZeroElement : public Error {
public:
    ZeroElement() : Error("no inverse element, element is 0 modulo the modulus") {}
};

class NotCoprime : public Error {
public:
    explicit NotCoprime(Natural g)
        : Error("no inverse element, gcd(module,elements)<>1 (gcd = " + g.to_string() + ")"),
          gcd_(std::move(g))
    {
    }

    const Natural& gcd() const noexcept { return gcd_; }

private:
    Natural gcd_;
};

/**
 * Binary extended GCD: only halving, parity tests, additions and
 * subtractions. Shared factors of two are stripped first and folded back
 * into g at the end.
 *
 * Throws BothZero when x = y = 0.
 */
ExtGcdResult binary_ext_gcd(const Natural& x, const Natural& y);

// Classical remainder-sequence extended Euclid; independent cross-check.
ExtGcdResult euclid_ext_gcd(const Natural& x, const Natural& y);

ExtGcdResult ext_gcd(const Natural& x, const Natural& y, GcdAlgorithm algorithm);

// Plain binary GCD. Throws BothZero when x = y = 0.
Natural gcd(const Natural& x, const Natural& y);

/**
 * Inverse of e modulo m, in [1, m - 1].
 *
 * e is reduced modulo m first. Throws BadModulus for m < 2, ZeroElement when
 * e = 0 (mod m), and NotCoprime when gcd(e, m) != 1.
 */
Natural mod_inverse(const Natural& e, const Natural& m, GcdAlgorithm algorithm = GcdAlgorithm::binary);

}  // namespace mpk
