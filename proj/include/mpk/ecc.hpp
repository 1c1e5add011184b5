#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpk/errors.hpp"
#include "mpk/natural.hpp"

namespace mpk::ec {

inline constexpr std::uint64_t default_enumeration_bound = 10'000;

class InvalidCurve : public Error {
public:
    explicit InvalidCurve(const std::string& why) : Error("invalid curve: " + why) {}
};

class NotOnCurve : public Error {
public:
    NotOnCurve() : Error("point is not on the curve") {}
};

class FieldTooLarge : public Error {
public:
    FieldTooLarge() : Error("field too large for point enumeration") {}
};

class Curve;

// Either the point at infinity or an affine point that was validated against
// its curve when it was created.
class Point {
public:
    static Point infinity() { return Point{}; }

    bool is_infinity() const noexcept { return infinity_; }
    // Meaningless for the point at infinity (both zero).
    const Natural& x() const noexcept { return x_; }
    const Natural& y() const noexcept { return y_; }

    // "(x,y)" in decimal, or "infinity".
    std::string to_string() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    friend class Curve;
    Point() = default;
    Point(Natural x, Natural y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool infinity_ = true;
    Natural x_;
    Natural y_;
};

/// Short Weierstrass curve y^2 = x^3 + a*x + b over F_p with p > 3 prime.
class Curve {
public:
    // a and b are reduced mod p. Throws InvalidCurve when p is not a prime
    // greater than 3, or when 4a^3 + 27b^2 = 0 (mod p).
    static Curve make(const Natural& p, const Natural& a, const Natural& b);

    const Natural& p() const noexcept { return p_; }
    const Natural& a() const noexcept { return a_; }
    const Natural& b() const noexcept { return b_; }

    // Raw membership test for coordinates; false when either is >= p.
    bool contains(const Natural& x, const Natural& y) const;

    // Validated affine point. Throws NotOnCurve.
    Point point(const Natural& x, const Natural& y) const;

private:
    Curve(Natural p, Natural a, Natural b) : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)) {}

    Natural p_;
    Natural a_;
    Natural b_;
};

bool is_on_curve(const Curve& curve, const Point& pt);

Point negate(const Curve& curve, const Point& pt);

// Chord rule for distinct x; identity, inverse and doubling cases dispatched.
// Every slope denominator is inverted with mod_inverse.
Point add_points(const Curve& curve, const Point& p, const Point& q);

// Tangent rule: slope (3x^2 + a) / (2y).
Point double_point(const Curve& curve, const Point& p);

// Left-to-right double-and-add.
Point scalar_mul(const Curve& curve, const Natural& k, const Point& p);

// Every point including infinity, infinity first, then ordered by (x, y).
// Throws FieldTooLarge when p exceeds `bound`.
std::vector<Point> enumerate_points(const Curve& curve, std::uint64_t bound = default_enumeration_bound);

}  // namespace mpk::ec
