#pragma once

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

// The rational images of the named degree-4/8 classes, expanded in p1, p2, c, x.
struct CubicClasses {
    GradedPoly lambda, p, C, Ct, pt;           // spin: lambda = p1/2, p = (p2 - lambda^2)/2, ...
    GradedPoly lambda_c, p_c, pt_c, C_c, Ct_c; // spin^c
    GradedPoly D, Dt;                          // oriented
};

// x and c default to the free generators; pass zero c for the spin case.
CubicClasses cubic_classes(const GradedPoly& x, const GradedPoly& c);
CubicClasses cubic_classes();

} // namespace charmod
