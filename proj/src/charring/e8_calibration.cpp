#include "charmod/charring/e8_calibration.hpp"

#include "charmod/charring/classes.hpp"
#include "charmod/exactmath/errors.hpp"
#include "charmod/thetamod/e8.hpp"

namespace charmod {

E8Roots calibrate_e8_roots(const GradedPoly& x)
{
    if (!x.is_homogeneous(4))
        throw DegreeError("x must be homogeneous of degree 4: " + x.to_string());
    const int cap = x.cap();
    const Gen gens[3] = {Gen::g1, Gen::g2, Gen::g3};
    const E8Roots symbolic{gen(Gen::g1, cap), gen(Gen::g2, cap), gen(Gen::g3, cap)};
    const GradedPoly q1 = e8_character(symbolic, 1).at(1);
    const GradedPoly target = e8_ch(x).ch();

    E8Roots out{GradedPoly(cap), GradedPoly(cap), GradedPoly(cap)};
    GradedPoly* solved[3] = {&out.g1, &out.g2, &out.g3};
    for (int k = 0; k < 3 && 4 * (k + 1) <= cap; ++k) {
        const int degree = 4 * (k + 1);
        std::map<Gen, GradedPoly> images;
        for (int j = 0; j < 3; ++j)
            if (j != k)
                images.emplace(gens[j], *solved[j]);
        const GradedPoly part = q1.substitute(images).component(degree);
        const Monomial gk = Monomial::of(gens[k]);
        const Rat alpha = part.coefficient(gk);
        const GradedPoly rest = part - GradedPoly::monomial(gk, alpha, cap) - target.component(degree);
        if (rest.uses(gens[k]))
            throw CalibrationError("nonlinear dependence on " + std::string(generator_name(gens[k])));
        if (!alpha.is_zero()) {
            *solved[k] = rest * (-alpha.inverse());
            continue;
        }
        // The character does not see g_k in this degree; the g_{<k} part must already match.
        if (!rest.is_zero())
            throw CalibrationError("degree-" + std::to_string(degree) + " mismatch " + rest.to_string());
        out.free[k] = true;
    }
    return out;
}

} // namespace charmod
