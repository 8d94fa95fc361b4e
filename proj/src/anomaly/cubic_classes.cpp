#include "charmod/anomaly/cubic_classes.hpp"

namespace charmod {

CubicClasses cubic_classes(const GradedPoly& x, const GradedPoly& c)
{
    const int cap = x.cap();
    const GradedPoly p1 = gen(Gen::p1, cap), p2 = gen(Gen::p2, cap);
    const GradedPoly c2 = c * c;
    CubicClasses k;
    k.lambda = p1 * Rat(1, 2);
    k.p = (p2 - k.lambda * k.lambda) * Rat(1, 2);
    k.C = k.lambda + x * Rat(2);
    k.Ct = k.lambda + x;
    k.pt = k.p - k.lambda * k.lambda * Rat(3);
    k.lambda_c = (p1 - c2 * Rat(3)) * Rat(1, 2);
    k.p_c = (p2 * Rat(4) - p1 * p1 - p1 * c2 * Rat(6) + c2 * c2 * Rat(39)) * Rat(1, 8);
    k.pt_c = k.p_c - k.lambda_c * k.lambda_c * Rat(3);
    k.C_c = k.lambda_c + x * Rat(2);
    k.Ct_c = k.lambda_c + x;
    k.D = -p1 + x * Rat(2);
    k.Dt = -p1 + x;
    return k;
}

CubicClasses cubic_classes() { return cubic_classes(gen(Gen::x), gen(Gen::c)); }

} // namespace charmod
