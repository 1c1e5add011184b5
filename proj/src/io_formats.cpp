#include "mpk/io_formats.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

namespace mpk::io {

namespace {

constexpr std::array<std::string_view, 6> key_fields{"n", "e", "d", "p", "q", "phi"};

std::string_view kind_name(ParseError::Kind kind)
{
    return kind == ParseError::Kind::empty_input ? "empty input" : "invalid character";
}

std::string_view kind_name(KeyFileError::Kind kind)
{
    switch (kind) {
    case KeyFileError::Kind::missing_field: return "missing field";
    case KeyFileError::Kind::malformed_value: return "malformed value for";
    case KeyFileError::Kind::unknown_field: return "unknown field";
    case KeyFileError::Kind::duplicate_field: return "duplicate field";
    case KeyFileError::Kind::invariant_violation: return "invariant violation:";
    }
    return "key file error";
}

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

std::optional<unsigned> digit_value(char c, unsigned radix)
{
    unsigned v = 0;
    if (c >= '0' && c <= '9')
        v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
        v = static_cast<unsigned>(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F')
        v = static_cast<unsigned>(c - 'A') + 10;
    else
        return std::nullopt;
    if (v >= radix)
        return std::nullopt;
    return v;
}

Natural parse_digits_at(std::string_view digits, unsigned radix, std::size_t offset)
{
    if (digits.empty())
        throw ParseError(ParseError::Kind::empty_input, offset);

    if (radix == 10) {
        // Accumulate 19-digit chunks to keep the number of bignum ops low.
        Natural value;
        std::size_t i = 0;
        while (i < digits.size()) {
            const std::size_t len = std::min<std::size_t>(19, digits.size() - i);
            std::uint64_t chunk = 0;
            std::uint64_t scale = 1;
            for (std::size_t k = 0; k < len; ++k) {
                const auto d = digit_value(digits[i + k], 10);
                if (!d)
                    throw ParseError(ParseError::Kind::invalid_character, offset + i + k);
                chunk = chunk * 10 + *d;
                scale *= 10;
            }
            value = value * Natural(scale) + Natural(chunk);
            i += len;
        }
        return value;
    }

    const unsigned bits_per_digit = radix == 16 ? 4 : 1;
    std::vector<Limb> limbs((digits.size() * bits_per_digit + limb_bits - 1) / limb_bits, 0);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const auto d = digit_value(digits[i], radix);
        if (!d)
            throw ParseError(ParseError::Kind::invalid_character, offset + i);
        const std::size_t bit = (digits.size() - 1 - i) * bits_per_digit;
        limbs[bit / limb_bits] |= Limb{*d} << (bit % limb_bits);
    }
    return Natural::from_limbs(std::move(limbs));
}

bool is_canonical_hex(std::string_view s)
{
    if (s.empty())
        return false;
    if (s.size() > 1 && s.front() == '0')
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t position)
    : Error(std::string(kind_name(kind)) + " at position " + std::to_string(position)), kind_(kind), position_(position)
{
}

KeyFileError::KeyFileError(Kind kind, std::string detail)
    : Error("key file: " + std::string(kind_name(kind)) + " " + detail), kind_(kind), detail_(std::move(detail))
{
}

Natural parse_bitfile(std::string_view text)
{
    std::size_t end = text.size();
    while (end > 0 && is_space(text[end - 1]))
        --end;
    if (end == 0)
        throw ParseError(ParseError::Kind::empty_input, 0);

    std::vector<Limb> limbs((end + limb_bits - 1) / limb_bits, 0);
    for (std::size_t i = 0; i < end; ++i) {
        const char c = text[i];
        if (c == '1')
            limbs[i / limb_bits] |= Limb{1} << (i % limb_bits);
        else if (c != '0')
            throw ParseError(ParseError::Kind::invalid_character, i);
    }
    return Natural::from_limbs(std::move(limbs));
}

std::string write_bitfile(const Natural& n)
{
    if (n.is_zero())
        return "0";
    std::string out(n.bit_length(), '0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (n.bit(i))
            out[i] = '1';
    }
    return out;
}

Natural parse_digits(std::string_view digits, unsigned radix)
{
    if (radix != 2 && radix != 10 && radix != 16)
        throw std::invalid_argument("unsupported radix " + std::to_string(radix));
    return parse_digits_at(digits, radix, 0);
}

Natural parse_int(std::string_view text)
{
    if (text.size() >= 2 && text[0] == '0') {
        if (text[1] == 'x' || text[1] == 'X')
            return parse_digits_at(text.substr(2), 16, 2);
        if (text[1] == 'b' || text[1] == 'B')
            return parse_digits_at(text.substr(2), 2, 2);
    }
    return parse_digits_at(text, 10, 0);
}

std::string serialize_keypair(const rsa::KeyPair& key)
{
    const std::array<const Natural*, 6> values{&key.n, &key.e, &key.d, &key.p, &key.q, &key.phi};
    std::string out;
    for (std::size_t i = 0; i < key_fields.size(); ++i) {
        out += key_fields[i];
        out += '=';
        out += values[i]->to_string(16);
        out += '\n';
    }
    return out;
}

rsa::KeyPair parse_keypair(std::string_view document)
{
    std::map<std::string, Natural, std::less<>> fields;
    std::size_t pos = 0;
    while (pos < document.size()) {
        std::size_t eol = document.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = document.size();
        std::string_view line = document.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw KeyFileError(KeyFileError::Kind::malformed_value, std::string(line));
        const std::string name(line.substr(0, eq));
        const std::string_view value = line.substr(eq + 1);
        if (std::find(key_fields.begin(), key_fields.end(), name) == key_fields.end())
            throw KeyFileError(KeyFileError::Kind::unknown_field, name);
        if (fields.contains(name))
            throw KeyFileError(KeyFileError::Kind::duplicate_field, name);
        if (!is_canonical_hex(value))
            throw KeyFileError(KeyFileError::Kind::malformed_value, name);
        fields.emplace(name, parse_digits(value, 16));
    }

    for (const auto field : key_fields) {
        if (!fields.contains(field))
            throw KeyFileError(KeyFileError::Kind::missing_field, std::string(field));
    }

    rsa::KeyPair key{fields.find("p")->second, fields.find("q")->second, fields.find("n")->second,
                     fields.find("phi")->second, fields.find("e")->second, fields.find("d")->second};
    if (auto violation = rsa::validate(key))
        throw KeyFileError(KeyFileError::Kind::invariant_violation, *violation);
    return key;
}

}  // namespace mpk::io
