#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "helpers.hpp"
#include "mpk/integer.hpp"

using mpk::Integer;
using mpk::Natural;
using mpk::Sign;

TEST_CASE("signed add and subtract")
{
    CHECK(mpk::add(Integer(0), Integer(-9)) == Integer(-9));
    CHECK(mpk::add(Integer(23), Integer(4)) == Integer(27));
    CHECK(mpk::subtract(Integer(23), Integer(4)) == Integer(19));
    CHECK(mpk::subtract(Integer(4), Integer(23)) == Integer(-19));
    CHECK(mpk::add(Integer(-4), Integer(23)) == Integer(19));
    CHECK(mpk::add(Integer(-4), Integer(-23)) == Integer(-27));

    const Integer x = Integer(Natural::power_of_two(300));
    const Integer zero = mpk::subtract(x, x);
    CHECK(zero.sign() == Sign::zero);
    CHECK(zero.magnitude().limbs().empty());
    CHECK(zero == Integer());
}

TEST_CASE("compare")
{
    CHECK(mpk::compare(Integer(23), Integer(4)) == std::strong_ordering::greater);
    CHECK(mpk::compare(Integer(-77), Integer(-77)) == std::strong_ordering::equal);
    CHECK(mpk::compare(Integer(-1), Integer(0)) == std::strong_ordering::less);
    CHECK(mpk::compare(Integer(-100), Integer(-3)) == std::strong_ordering::less);
}

TEST_CASE("multiply signs")
{
    CHECK(mpk::multiply(Integer(23), Integer(4)) == Integer(92));
    CHECK(mpk::multiply(Integer(-23), Integer(4)) == Integer(-92));
    CHECK(mpk::multiply(Integer(-23), Integer(-4)) == Integer(92));
    CHECK(mpk::multiply(Integer(-23), Integer(0)).sign() == Sign::zero);
}

TEST_CASE("construction")
{
    CHECK(Integer(std::numeric_limits<std::int64_t>::min()).magnitude() == Natural(1ULL << 63));
    CHECK(Integer(Sign::negative, Natural(0)).sign() == Sign::zero);
    CHECK_THROWS_AS(Integer(Sign::zero, Natural(3)), std::invalid_argument);
    CHECK(Integer(-42).to_string() == "-42");
}

TEST_CASE("structure")
{
    auto s = mpk::structure(Integer(23));
    CHECK(s.bit_length == 5);
    CHECK_FALSE(s.is_even);
    CHECK_FALSE(s.is_zero);
    CHECK(s.sign == Sign::positive);

    s = mpk::structure(Integer(0));
    CHECK(s.bit_length == 0);
    CHECK(s.is_even);
    CHECK(s.is_zero);
    CHECK(s.sign == Sign::zero);

    s = mpk::structure(Integer(4));
    CHECK(s.bit_length == 3);
    CHECK(s.is_even);
    CHECK(s.sign == Sign::positive);

    CHECK(mpk::structure(Integer(-4)).sign == Sign::negative);
}

TEST_CASE("floor_mod")
{
    CHECK(mpk::floor_mod(Integer(-1), Natural(23)) == Natural(22));
    CHECK(mpk::floor_mod(Integer(-23), Natural(23)) == Natural(0));
    CHECK(mpk::floor_mod(Integer(-47), Natural(23)) == Natural(22));
    CHECK(mpk::floor_mod(Integer(50), Natural(23)) == Natural(4));
    CHECK_THROWS_AS(mpk::floor_mod(Integer(5), Natural(0)), mpk::DivisionByZero);
}

TEST_CASE("halving truncates toward zero")
{
    CHECK((Integer(-7) >> 1) == Integer(-3));
    CHECK((Integer(-1) >> 1).sign() == Sign::zero);
    CHECK((Integer(9) >> 2) == Integer(2));
}

TEST_CASE("exhaustive signed agreement with native arithmetic")
{
    for (std::int64_t x = -255; x <= 255; x += 1) {
        for (std::int64_t y = -255; y <= 255; y += 3) {
            const Integer a(x), b(y);
            REQUIRE(a + b == Integer(x + y));
            REQUIRE(a - b == Integer(x - y));
            REQUIRE(a * b == Integer(x * y));
            REQUIRE((a <=> b) == (x <=> y));
        }
    }
}

TEST_CASE("ring axioms on random values up to 4096 bits")
{
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 10'000; ++trial) {
        const Integer x = testing::random_integer(gen, 4096);
        const Integer y = testing::random_integer(gen, 4096);
        const Integer z = testing::random_integer(gen, 4096);

        const Integer xy = x * y;
        const Integer sum = x + y;
        const Integer diff = x - y;
        REQUIRE(sum == y + x);
        REQUIRE(xy == y * x);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE(xy * z == x * (y * z));
        REQUIRE(x * (y + z) == xy + x * z);
        REQUIRE(diff + y == x);
        for (const Integer* r : {&xy, &sum, &diff})
            REQUIRE(r->is_valid());
    }
}
