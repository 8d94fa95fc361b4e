#pragma once

#include "charmod/charring/graded_poly.hpp"
#include "charmod/thetamod/eisenstein.hpp"

namespace charmod {

// Returns m = s(q^0) after checking s = m * basis(weight) at every stored order.
Rat match_modular_basis(const RatSeries& s, int weight);
GradedPoly match_modular_basis(const CohomQSeries& s, int weight);

} // namespace charmod
