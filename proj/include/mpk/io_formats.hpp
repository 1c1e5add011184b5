#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mpk/errors.hpp"
#include "mpk/natural.hpp"
#include "mpk/rsa.hpp"

namespace mpk::io {

class ParseError : public Error {
public:
    enum class Kind { invalid_character, empty_input };

    ParseError(Kind kind, std::size_t position);

    Kind kind() const noexcept { return kind_; }
    // Offset of the offending character; 0 for empty input.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

class KeyFileError : public Error {
public:
    enum class Kind { missing_field, malformed_value, unknown_field, duplicate_field, invariant_violation };

    KeyFileError(Kind kind, std::string detail);

    Kind kind() const noexcept { return kind_; }
    // Field name, or the violated invariant for invariant_violation.
    const std::string& detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::string detail_;
};

// Bit file: ASCII '0'/'1', least significant bit first, optional trailing
// whitespace. Leading characters are the low-order bits, so 23 (binary
// 10111) is stored as "11101".
Natural parse_bitfile(std::string_view text);

// Inverse of parse_bitfile with no trailing (high-order) zeros; zero is "0".
std::string write_bitfile(const Natural& n);

// Decimal, "0x"-prefixed hex, or "0b"-prefixed binary (most significant bit
// first). Hex digits may be upper or lower case.
Natural parse_int(std::string_view text);

// Digits only, no prefix. Radix 2, 10 or 16.
Natural parse_digits(std::string_view digits, unsigned radix);

// Key file: one `field=hex` line per field in the order n, e, d, p, q, phi.
// Hex is lowercase without leading zeros.
std::string serialize_keypair(const rsa::KeyPair& key);

// Accepts fields in any order; rejects unknown, duplicate or missing fields
// and non-canonical hex, then re-validates every key invariant.
rsa::KeyPair parse_keypair(std::string_view document);

}  // namespace mpk::io
