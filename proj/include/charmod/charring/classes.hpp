#pragma once

#include "charmod/charring/graded_poly.hpp"
#include "charmod/charring/virtual_bundle.hpp"
#include "charmod/exactmath/taylor.hpp"

namespace charmod {

struct PowerSums {
    GradedPoly pi1, pi2, pi3;
};

// Newton identities for the squares of the Chern roots.
PowerSums power_sums_from_pontryagin(const GradedPoly& p1, const GradedPoly& p2, const GradedPoly& p3);

// Power sums of the tangent bundle: p1,p2,p3 in dim 12, tP1,tP2 in dim 10.
PowerSums tangent_power_sums(int dim, int cap);
int default_cap(int dim);

enum class RootFunction { Ahat, Lhat };

// (y/2)/sinh(y/2) or y/tanh(y/2), truncated after y^order.
TaylorSeries root_function_series(RootFunction f, int order);

// prod_j f(x_j) for an even f with f(0) != 0, j = 1..half_dim.
GradedPoly multiplicative_class(const TaylorSeries& f, const PowerSums& pi, int half_dim, int cap);
GradedPoly multiplicative_class(RootFunction f, int dim, int cap);
inline GradedPoly multiplicative_class(RootFunction f, int dim) { return multiplicative_class(f, dim, default_cap(dim)); }

// exp(sum_k a_k pi_k) for a list a_1, a_2, a_3.
GradedPoly exp_power_sums(const std::vector<Rat>& coefficients, const PowerSums& pi, int cap);

VirtualBundle ch_tangent(int dim);
VirtualBundle e8_ch(const GradedPoly& x);
// ch(xi_C) = e^c + e^{-c}
VirtualBundle line_pair_ch(const GradedPoly& c);
// e^{a} truncated, for a of positive degree
GradedPoly exp_class(const GradedPoly& a);
GradedPoly cosh_class(const GradedPoly& a);

} // namespace charmod
