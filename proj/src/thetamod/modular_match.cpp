#include "charmod/thetamod/modular_match.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

template <class R>
R match(const QExpSeries<R>& s, int weight)
{
    if (s.order() < 2)
        throw ArgumentError("modular matching needs q-order >= 2");
    const RatSeries basis = modular_basis(weight, s.order()).series;
    const R m = s.coefficient(0);
    const QExpSeries<R> expected = lift(basis, m);
    for (int k = 0; k <= s.max_numerator(); ++k) {
        const R diff = s.coefficient(k) - expected.coefficient(k);
        if (!RingTraits<R>::is_zero(diff))
            throw NotProportional(k, RingTraits<R>::to_string(diff));
    }
    return m;
}

} // namespace

Rat match_modular_basis(const RatSeries& s, int weight) { return match(s, weight); }

GradedPoly match_modular_basis(const CohomQSeries& s, int weight) { return match(s, weight); }

} // namespace charmod
