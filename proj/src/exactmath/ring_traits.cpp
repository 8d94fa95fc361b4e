#include "charmod/exactmath/ring_traits.hpp"

#include <numeric>

namespace charmod {

bool RingTraits<ZMod>::is_unit(const ZMod& r) { return std::gcd(r.value(), r.modulus()) == 1; }

ZMod RingTraits<ZMod>::inverse(const ZMod& r)
{
    long long m = r.modulus();
    long long old_r = r.value(), cur_r = m, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        long long q = old_r / cur_r;
        long long t = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = t;
        t = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = t;
    }
    if (old_r != 1)
        throw NotInvertible(r.to_string() + " is not a unit");
    return ZMod(m, old_s);
}

} // namespace charmod
