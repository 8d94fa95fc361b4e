#pragma once

#include <string_view>
#include <vector>

#include "charmod/exactmath/taylor.hpp"
#include "charmod/thetamod/eisenstein.hpp"

namespace charmod {

enum class ThetaKind { theta, theta1, theta2, theta3 };

std::string_view theta_kind_name(ThetaKind kind);
ThetaKind parse_theta_kind(std::string_view name);

// Normalized root function as a q-series with coefficients in Q[[y]]:
//   theta:  y theta'(0)/theta(y),  theta_i: theta_i(y)/theta_i(0).
QExpSeries<TaylorSeries> theta_ratio_function(ThetaKind kind, int order, int y_order);

// Coefficients of y^{2k}, k = 1..max_k, in the log of the normalized root function.
std::vector<RatSeries> theta_log_ratio(ThetaKind kind, int order, int max_k = 3);

// Sum over the four kinds; the Lhat-type root function is 2 * exp of this.
std::vector<RatSeries> lhat_log_ratio(int order, int max_k = 3);

// Raw theta_i(0, tau) including the 2 q^{1/8} prefactor of theta_1.
RatSeries theta_zero(ThetaKind kind, int order);

} // namespace charmod
