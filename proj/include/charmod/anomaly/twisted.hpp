#pragma once

#include <string_view>

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

enum class TwistedKind { W, Wc, Qc, Rc, QL, RL, LWitten };
// Adams: Witten bundles via Adams operations; ThetaRatio: logarithms of theta quotients.
enum class Route { Adams, ThetaRatio };

std::string_view twisted_kind_name(TwistedKind kind);
TwistedKind parse_twisted_kind(std::string_view name);

struct TwistedParams {
    GradedPoly x_i, x_j, c;
};

// x_i = x_j = x and c symbolic.
TwistedParams symbolic_params();

// The 4-form P in the prefactor exp(E2 P / 24).
GradedPoly twisted_exponent(TwistedKind kind, const TwistedParams& params);

// q^0 part of the class without the E2 factor: A-hat, A-hat cosh(c/2) or L-hat.
GradedPoly twisted_base(TwistedKind kind, const TwistedParams& params);

// Full class before taking the degree-12 component; requires order >= 2.
CohomQSeries build_twisted_class(TwistedKind kind, const TwistedParams& params, int order,
                                 Route route = Route::Adams);

} // namespace charmod
