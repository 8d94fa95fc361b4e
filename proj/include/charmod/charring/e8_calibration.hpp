#pragma once

#include <array>

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

// Power sums g_k = sum_l y_l^{2k} of the E8 formal roots (degrees 4, 8, 12).
struct E8Roots {
    GradedPoly g1, g2, g3;
    // Components the character does not depend on; set to zero.
    std::array<bool, 3> free{false, false, false};
};

// Solves degree by degree so that the q^1 coefficient of the E8 character is ch V(x).
E8Roots calibrate_e8_roots(const GradedPoly& x);

} // namespace charmod
