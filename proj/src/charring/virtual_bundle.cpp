#include "charmod/charring/virtual_bundle.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

VirtualBundle vb_adams(const VirtualBundle& e, int k)
{
    if (k < 1)
        throw ArgumentError("Adams operation needs k >= 1, got " + std::to_string(k));
    return VirtualBundle(e.ch().adams(k));
}

std::pair<VirtualBundle, VirtualBundle> vb_lambda2_sym2(const VirtualBundle& e)
{
    const GradedPoly sq = e.ch() * e.ch();
    const GradedPoly psi2 = e.ch().adams(2);
    const Rat half(1, 2);
    return {VirtualBundle((sq - psi2) * half), VirtualBundle((sq + psi2) * half)};
}

} // namespace charmod
