#include "mpk/random.hpp"

#include <stdexcept>
#include <vector>

namespace mpk {

Natural Rng::random_bits(std::size_t bits)
{
    std::vector<Limb> limbs((bits + limb_bits - 1) / limb_bits);
    for (auto& limb : limbs)
        limb = engine_();
    if (const std::size_t spare = limbs.size() * limb_bits - bits; spare != 0)
        limbs.back() >>= spare;
    return Natural::from_limbs(std::move(limbs));
}

Natural Rng::random_below(const Natural& bound)
{
    if (bound.is_zero())
        throw std::invalid_argument("random_below: empty range");
    const std::size_t bits = bound.bit_length();
    for (;;) {
        Natural candidate = random_bits(bits);
        if (candidate < bound)
            return candidate;
    }
}

Natural Rng::random_range(const Natural& low, const Natural& high)
{
    return low + random_below(high - low + 1);
}

}  // namespace mpk
