#pragma once

#include "charmod/charring/e8_calibration.hpp"
#include "charmod/charring/graded_poly.hpp"
#include "charmod/thetamod/eisenstein.hpp"

namespace charmod {

// phi^8 ch(V) = (1/2) sum_{i=1..3} theta_i(0)^8 exp(sum_k c_{i,k} g_k); the odd prod theta term is dropped.
CohomQSeries e8_theta_combination(const E8Roots& g, int order);
// ch(V) of the basic representation.
CohomQSeries e8_character(const E8Roots& g, int order);

// Counts of E8 lattice vectors of norm 2n, n <= order, in the D8 + glue model.
RatSeries e8_lattice_theta(int order);

} // namespace charmod
