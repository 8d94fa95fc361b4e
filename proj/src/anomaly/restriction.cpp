#include "charmod/anomaly/restriction.hpp"

#include <string>

#include "charmod/charring/classes.hpp"
#include "charmod/exactmath/errors.hpp"

namespace charmod {

GradedPoly restrict_to_U(const GradedPoly& alpha)
{
    for (std::size_t i = 0; i < kGenCount; ++i) {
        const Gen g = static_cast<Gen>(i);
        if (g == Gen::p1 || g == Gen::p2 || g == Gen::c || g == Gen::x)
            continue;
        if (alpha.uses(g))
            throw UnsupportedGenerator("cannot restrict " + std::string(generator_name(g)) + " to U");
    }
    const int cap = kSubmanifoldCap;
    const GradedPoly e = gen(Gen::e, cap), tP1 = gen(Gen::tP1, cap);
    const std::map<Gen, GradedPoly> images{
        {Gen::p1, tP1 + e * e},
        {Gen::p2, gen(Gen::tP2, cap) + tP1 * e * e},
        {Gen::c, e},
        {Gen::x, gen(Gen::tx, cap)},
    };
    return alpha.substitute(images, cap);
}

GradedPoly tanh_correction(const GradedPoly& ch_e)
{
    const int cap = kSubmanifoldCap;
    const GradedPoly e = gen(Gen::e, cap);
    const GradedPoly e2 = e * e;
    // tanh(e/4) = e/4 - e^3/192 + e^5/7680 - ...
    const GradedPoly th = e * Rat(1, 4) - e * e2 * Rat(1, 192) + e * e2 * e2 * Rat(1, 7680);
    const GradedPoly ahat = multiplicative_class(RootFunction::Ahat, 10, cap);
    return (ahat * ch_e.with_cap(cap) * th * Rat(1, 2)).component(10);
}

} // namespace charmod
