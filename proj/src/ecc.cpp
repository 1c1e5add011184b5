#include "mpk/ecc.hpp"

#include "mpk/gcd_inverse.hpp"
#include "mpk/random.hpp"
#include "mpk/rsa.hpp"

namespace mpk::ec {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t primality_seed = 0xec'c0'ffee;

// Operands are already reduced mod p.
Natural sub_mod(const Natural& a, const Natural& b, const Natural& p)
{
    return a >= b ? a - b : a + (p - b);
}

Natural mul_mod(const Natural& a, const Natural& b, const Natural& p)
{
    return (a * b) % p;
}

Natural add_mod(const Natural& a, const Natural& b, const Natural& p)
{
    Natural sum = a + b;
    if (sum >= p)
        sum -= p;
    return sum;
}

// Third point of the line with slope `lambda` through P and a second point
// with x-coordinate `other_x`, reflected over the x-axis.
Point complete_line(const Curve& curve, const Natural& lambda, const Point& p, const Natural& other_x)
{
    const Natural& mod = curve.p();
    const Natural xr = sub_mod(sub_mod(mul_mod(lambda, lambda, mod), p.x(), mod), other_x, mod);
    const Natural yr = sub_mod(mul_mod(lambda, sub_mod(p.x(), xr, mod), mod), p.y(), mod);
    return curve.point(xr, yr);
}

}  // namespace

std::string Point::to_string() const
{
    if (infinity_)
        return "infinity";
    return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

Curve Curve::make(const Natural& p, const Natural& a, const Natural& b)
{
    if (p <= Natural(3))
        throw InvalidCurve("field characteristic must be greater than 3");
    Rng rng(primality_seed);
    if (!rsa::is_probable_prime(p, rsa::default_rounds, rng))
        throw InvalidCurve("field characteristic " + p.to_string() + " is not prime");

    Natural ar = a % p;
    Natural br = b % p;
    const Natural cubic = mul_mod(Natural(4), mul_mod(mul_mod(ar, ar, p), ar, p), p);
    const Natural square = mul_mod(Natural(27), mul_mod(br, br, p), p);
    if (add_mod(cubic, square, p).is_zero())
        throw InvalidCurve("singular: 4a^3 + 27b^2 = 0 mod p");
    return Curve(p, std::move(ar), std::move(br));
}

bool Curve::contains(const Natural& x, const Natural& y) const
{
    if (x >= p_ || y >= p_)
        return false;
    const Natural lhs = mul_mod(y, y, p_);
    const Natural x_cubed = mul_mod(mul_mod(x, x, p_), x, p_);
    const Natural rhs = add_mod(add_mod(x_cubed, mul_mod(a_, x, p_), p_), b_, p_);
    return lhs == rhs;
}

Point Curve::point(const Natural& x, const Natural& y) const
{
    if (!contains(x, y))
        throw NotOnCurve();
    return Point(x, y);
}

bool is_on_curve(const Curve& curve, const Point& pt)
{
    return pt.is_infinity() || curve.contains(pt.x(), pt.y());
}

Point negate(const Curve& curve, const Point& pt)
{
    if (pt.is_infinity() || pt.y().is_zero())
        return pt;
    return curve.point(pt.x(), curve.p() - pt.y());
}

Point add_points(const Curve& curve, const Point& p, const Point& q)
{
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    const Natural& mod = curve.p();
    if (p.x() == q.x()) {
        if (add_mod(p.y(), q.y(), mod).is_zero())
            return Point::infinity();
        return double_point(curve, p);
    }
    // p is prime and x_q != x_p, so the inverse always exists.
    const Natural denominator_inv = mod_inverse(sub_mod(q.x(), p.x(), mod), mod);
    const Natural lambda = mul_mod(sub_mod(q.y(), p.y(), mod), denominator_inv, mod);
    return complete_line(curve, lambda, p, q.x());
}

Point double_point(const Curve& curve, const Point& p)
{
    if (p.is_infinity() || p.y().is_zero())
        return Point::infinity();
    const Natural& mod = curve.p();
    const Natural numerator = add_mod(mul_mod(Natural(3), mul_mod(p.x(), p.x(), mod), mod), curve.a(), mod);
    const Natural denominator_inv = mod_inverse(add_mod(p.y(), p.y(), mod), mod);
    return complete_line(curve, mul_mod(numerator, denominator_inv, mod), p, p.x());
}

Point scalar_mul(const Curve& curve, const Natural& k, const Point& p)
{
    Point acc = Point::infinity();
    for (std::size_t i = k.bit_length(); i-- > 0;) {
        acc = double_point(curve, acc);
        if (k.bit(i))
            acc = add_points(curve, acc, p);
    }
    return acc;
}

std::vector<Point> enumerate_points(const Curve& curve, std::uint64_t bound)
{
    if (curve.p() > Natural(bound))
        throw FieldTooLarge();
    const std::uint64_t p = curve.p().low_u64();
    const std::uint64_t a = curve.a().low_u64();
    const std::uint64_t b = curve.b().low_u64();

    // roots[s] lists the y in [0, p) with y^2 = s, ascending.
    std::vector<std::vector<std::uint64_t>> roots(p);
    for (std::uint64_t y = 0; y < p; ++y)
        roots[static_cast<std::uint64_t>(Wide{y} * y % p)].push_back(y);

    std::vector<Point> points{Point::infinity()};
    for (std::uint64_t x = 0; x < p; ++x) {
        const auto x2 = static_cast<std::uint64_t>(Wide{x} * x % p);
        const auto rhs = static_cast<std::uint64_t>((Wide{x2} * x + Wide{a} * x + b) % p);
        for (const std::uint64_t y : roots[rhs])
            points.push_back(curve.point(x, y));
    }
    return points;
}

}  // namespace mpk::ec
