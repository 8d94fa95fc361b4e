#include "charmod/thetamod/e8.hpp"

#include "charmod/exactmath/errors.hpp"
#include "charmod/thetamod/theta.hpp"

namespace charmod {

namespace {

void require_roots(const E8Roots& g)
{
    if (!g.g1.is_homogeneous(4) || !g.g2.is_homogeneous(8) || !g.g3.is_homogeneous(12))
        throw DegreeError("E8 power sums must have degrees 4, 8, 12");
    if (g.g2.cap() != g.g1.cap() || g.g3.cap() != g.g1.cap())
        throw RingMismatch("E8 power sums in different rings");
}

// Doubled coordinates u = 2v: sum u_i^2 = 8n, all u_i of the given parity, sum u_i = 0 mod 4.
void enumerate(int index, int remaining, int sum_mod4, int parity, std::vector<long long>& counts, int used)
{
    if (index == 8) {
        if (sum_mod4 == 0)
            counts[used / 8] += 1;
        return;
    }
    for (int u = -9; u <= 9; ++u) {
        if (((u % 2) + 2) % 2 != parity)
            continue;
        const int sq = u * u;
        if (sq > remaining)
            continue;
        enumerate(index + 1, remaining - sq, ((sum_mod4 + u) % 4 + 4) % 4, parity, counts, used + sq);
    }
}

} // namespace

CohomQSeries e8_theta_combination(const E8Roots& g, int order)
{
    require_roots(g);
    const int cap = g.g1.cap();
    const GradedPoly one(Rat(1), cap);
    CohomQSeries combo(order, GradedPoly(cap));
    for (ThetaKind kind : {ThetaKind::theta1, ThetaKind::theta2, ThetaKind::theta3}) {
        const auto c = theta_log_ratio(kind, order, 3);
        CohomQSeries expo = lift(c[0], g.g1) + lift(c[1], g.g2) + lift(c[2], g.g3);
        combo += lift(qs_pow(theta_zero(kind, order), 8), one) * qs_exp(expo);
    }
    combo = combo.scaled(one * Rat(1, 2));
    if (!combo.integral_exponents())
        throw InternalCancellationError("fractional q-exponents survive in the E8 theta combination");
    return combo;
}

CohomQSeries e8_character(const E8Roots& g, int order)
{
    const GradedPoly one(Rat(1), g.g1.cap());
    return e8_theta_combination(g, order) * lift(qs_inv(qs_pow(phi(order), 8)), one);
}

RatSeries e8_lattice_theta(int order)
{
    if (order < 0 || order > 12)
        throw ArgumentError("E8 enumeration supports orders 0..12");
    std::vector<long long> counts(static_cast<std::size_t>(order) + 1, 0);
    // Norm 2n is 8n in doubled coordinates, so |u| <= sqrt(96) < 10.
    for (int parity : {0, 1})
        enumerate(0, 8 * order, 0, parity, counts, 0);
    RatSeries s(order, Rat(0));
    for (int n = 0; n <= order; ++n)
        s.add_term(RatSeries::kGrid * n, Rat(counts[n]));
    return s;
}

} // namespace charmod
