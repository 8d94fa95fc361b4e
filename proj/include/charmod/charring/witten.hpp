#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "charmod/charring/graded_poly.hpp"
#include "charmod/charring/virtual_bundle.hpp"

namespace charmod {

// Theta(T), Theta(T, xi), Theta_1..3(T), Phi(T) = Theta (x) Theta_1 (x) Theta_2 (x) Theta_3.
enum class WittenSpec { Theta, ThetaTXi, Theta1, Theta2, Theta3, Phi };

WittenSpec parse_witten_spec(std::string_view name);
std::string_view witten_spec_name(WittenSpec spec);

// ch of the bundle-valued q-series. Inputs: {T} or {T, xi_C} for ThetaTXi.
CohomQSeries witten_series(WittenSpec spec, std::span<const VirtualBundle> inputs, int order);

// Coefficients of q^0..q^order as virtual bundles; needs integral exponents.
std::vector<VirtualBundle> witten_coefficients(const CohomQSeries& series);
std::vector<VirtualBundle> witten_expand(WittenSpec spec, std::span<const VirtualBundle> inputs, int order);

} // namespace charmod
