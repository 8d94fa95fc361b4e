#pragma once

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

inline constexpr int kSubmanifoldCap = 10;

// Pullback to a characteristic submanifold U with normal bundle of Euler class e:
// p1 -> tP1 + e^2, p2 -> tP2 + tP1 e^2, c -> e, x -> tx, truncated at degree 10.
// Throws UnsupportedGenerator for anything outside {p1, p2, c, x}.
GradedPoly restrict_to_U(const GradedPoly& alpha);

// Degree-10 part of (1/2) A-hat(TU) ch(E) tanh(e/4) on U.
GradedPoly tanh_correction(const GradedPoly& ch_e);

} // namespace charmod
