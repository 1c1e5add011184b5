#include "mpk/gcd_inverse.hpp"

#include <algorithm>
#include <utility>

namespace mpk {

namespace {

// One halving step for a coefficient pair (s, t) tracking s*x + t*y = w when
// w is even. If both coefficients are even they halve directly; otherwise
// (s + y, t - x) is an even pair representing the same w.
void halve_pair(Integer& s, Integer& t, const Integer& x, const Integer& y)
{
    if (!s.is_even() || !t.is_even()) {
        s += y;
        t -= x;
    }
    s >>= 1;
    t >>= 1;
}

}  // namespace

ExtGcdResult binary_ext_gcd(const Natural& x, const Natural& y)
{
    if (x.is_zero() && y.is_zero())
        throw BothZero();
    if (x.is_zero())
        return {y, Integer{}, Integer{1}};
    if (y.is_zero())
        return {x, Integer{1}, Integer{}};

    const std::size_t common_twos = std::min(x.trailing_zeros(), y.trailing_zeros());
    const Natural xr = x >> common_twos;
    const Natural yr = y >> common_twos;
    const Integer xs{xr};
    const Integer ys{yr};

    // Invariants: a*xr + b*yr = u, c*xr + d*yr = v.
    Natural u = xr;
    Natural v = yr;
    Integer a{1}, b{0}, c{0}, d{1};
    do {
        while (u.is_even()) {
            u >>= 1;
            halve_pair(a, b, xs, ys);
        }
        while (v.is_even()) {
            v >>= 1;
            halve_pair(c, d, xs, ys);
        }
        if (u >= v) {
            u -= v;
            a -= c;
            b -= d;
        } else {
            v -= u;
            c -= a;
            d -= b;
        }
    } while (!u.is_zero());

    return {v << common_twos, std::move(c), std::move(d)};
}

ExtGcdResult euclid_ext_gcd(const Natural& x, const Natural& y)
{
    if (x.is_zero() && y.is_zero())
        throw BothZero();

    Natural old_r = x;
    Natural r = y;
    Integer old_s{1}, s{0};
    Integer old_t{0}, t{1};
    while (!r.is_zero()) {
        auto [q, rem] = div_rem(old_r, r);
        const Integer qi{std::move(q)};
        old_r = std::exchange(r, std::move(rem));
        old_s = std::exchange(s, old_s - qi * s);
        old_t = std::exchange(t, old_t - qi * t);
    }
    return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

ExtGcdResult ext_gcd(const Natural& x, const Natural& y, GcdAlgorithm algorithm)
{
    return algorithm == GcdAlgorithm::binary ? binary_ext_gcd(x, y) : euclid_ext_gcd(x, y);
}

Natural gcd(const Natural& x, const Natural& y)
{
    if (x.is_zero() && y.is_zero())
        throw BothZero();
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;

    const std::size_t common_twos = std::min(x.trailing_zeros(), y.trailing_zeros());
    Natural u = x >> x.trailing_zeros();
    Natural v = y >> y.trailing_zeros();
    while (!v.is_zero()) {
        v >>= v.trailing_zeros();
        if (u > v)
            std::swap(u, v);
        v -= u;
    }
    return u << common_twos;
}

Natural mod_inverse(const Natural& e, const Natural& m, GcdAlgorithm algorithm)
{
    if (m < Natural(2))
        throw BadModulus();
    const Natural element = e % m;
    if (element.is_zero())
        throw ZeroElement();

    ExtGcdResult r = ext_gcd(m, element, algorithm);
    if (!r.g.is_one())
        throw NotCoprime(std::move(r.g));
    // A negative coefficient -k with k < m maps to m - k.
    return floor_mod(r.b, m);
}

}  // namespace mpk
