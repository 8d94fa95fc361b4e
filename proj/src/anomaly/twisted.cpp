#include "charmod/anomaly/twisted.hpp"

#include <array>
#include <string>
#include <vector>

#include "charmod/charring/classes.hpp"
#include "charmod/charring/e8_calibration.hpp"
#include "charmod/charring/witten.hpp"
#include "charmod/exactmath/errors.hpp"
#include "charmod/thetamod/e8.hpp"
#include "charmod/thetamod/theta.hpp"

namespace charmod {

namespace {

constexpr std::array<std::string_view, 7> kNames{"W", "Wc", "Qc", "Rc", "QL", "RL", "LWitten"};

bool uses_c(TwistedKind k) { return k == TwistedKind::Wc || k == TwistedKind::Qc || k == TwistedKind::Rc; }
bool is_lhat(TwistedKind k) { return k == TwistedKind::QL || k == TwistedKind::RL || k == TwistedKind::LWitten; }
int e8_factors(TwistedKind k)
{
    switch (k) {
    case TwistedKind::Qc:
    case TwistedKind::QL:
        return 2;
    case TwistedKind::Rc:
    case TwistedKind::RL:
        return 1;
    default:
        return 0;
    }
}

// sum_k a_k(q) * t_k lifted into cohomology.
CohomQSeries lift_sum(const std::vector<RatSeries>& a, const std::vector<GradedPoly>& t, int order, int cap)
{
    CohomQSeries s(order, GradedPoly(cap));
    for (std::size_t k = 0; k < a.size() && k < t.size(); ++k)
        s += lift(a[k].truncated(order), t[k]);
    return s;
}

CohomQSeries theta_route_base(TwistedKind kind, const TwistedParams& params, int order)
{
    const int cap = params.x_i.cap();
    const PowerSums pi = tangent_power_sums(12, cap);
    const std::vector<GradedPoly> tangent{pi.pi1, pi.pi2, pi.pi3};
    if (is_lhat(kind)) {
        CohomQSeries e = lift_sum(lhat_log_ratio(order), tangent, order, cap);
        return qs_exp(e).scaled(GradedPoly(Rat(64), cap));
    }
    CohomQSeries e = lift_sum(theta_log_ratio(ThetaKind::theta, order), tangent, order, cap);
    if (uses_c(kind)) {
        const GradedPoly c2 = params.c * params.c;
        const std::vector<GradedPoly> line{c2, c2 * c2, c2 * c2 * c2};
        for (ThetaKind k : {ThetaKind::theta1, ThetaKind::theta2, ThetaKind::theta3})
            e += lift_sum(theta_log_ratio(k, order), line, order, cap);
    }
    return qs_exp(e);
}

CohomQSeries adams_route_base(TwistedKind kind, const TwistedParams& params, int order)
{
    const VirtualBundle T = ch_tangent(12);
    CohomQSeries w(order, GradedPoly(params.x_i.cap()));
    if (is_lhat(kind)) {
        std::vector<VirtualBundle> in{T};
        w = witten_series(WittenSpec::Phi, in, order);
    } else if (uses_c(kind)) {
        std::vector<VirtualBundle> in{T, line_pair_ch(params.c)};
        w = witten_series(WittenSpec::ThetaTXi, in, order);
    } else {
        std::vector<VirtualBundle> in{T};
        w = witten_series(WittenSpec::Theta, in, order);
    }
    return w.scaled(twisted_base(kind, params));
}

} // namespace

std::string_view twisted_kind_name(TwistedKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

TwistedKind parse_twisted_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<TwistedKind>(i);
    throw ArgumentError("unknown twisted class '" + std::string(name) + "'");
}

TwistedParams symbolic_params() { return {gen(Gen::x), gen(Gen::x), gen(Gen::c)}; }

GradedPoly twisted_exponent(TwistedKind kind, const TwistedParams& params)
{
    const int cap = params.x_i.cap();
    const GradedPoly p1 = gen(Gen::p1, cap);
    const GradedPoly spinc = p1 - params.c * params.c * Rat(3);
    switch (kind) {
    case TwistedKind::W:
        return p1;
    case TwistedKind::Wc:
        return spinc;
    case TwistedKind::Qc:
        return spinc + (params.x_i + params.x_j) * Rat(2);
    case TwistedKind::Rc:
        return spinc + params.x_i * Rat(2);
    case TwistedKind::QL:
        return p1 * Rat(-2) + (params.x_i + params.x_j) * Rat(2);
    case TwistedKind::RL:
        return p1 * Rat(-2) + params.x_i * Rat(2);
    case TwistedKind::LWitten:
        return p1 * Rat(-2);
    }
    throw InternalCancellationError("unhandled twisted kind");
}

GradedPoly twisted_base(TwistedKind kind, const TwistedParams& params)
{
    const int cap = params.x_i.cap();
    if (is_lhat(kind))
        return multiplicative_class(RootFunction::Lhat, 12, cap);
    GradedPoly a = multiplicative_class(RootFunction::Ahat, 12, cap);
    if (uses_c(kind))
        a = a * cosh_class(params.c * Rat(1, 2));
    return a;
}

CohomQSeries build_twisted_class(TwistedKind kind, const TwistedParams& params, int order, Route route)
{
    if (order < 2)
        throw ArgumentError("twisted classes need q-order >= 2");
    const int cap = params.x_i.cap();
    if (params.x_j.cap() != cap || params.c.cap() != cap)
        throw RingMismatch("twisted class parameters have different degree caps");

    const GradedPoly P = twisted_exponent(kind, params) * Rat(1, 24);
    CohomQSeries result = qs_exp(lift(eisenstein(2, order), P));
    result = result * (route == Route::Adams ? adams_route_base(kind, params, order)
                                             : theta_route_base(kind, params, order));
    const int factors = e8_factors(kind);
    if (factors >= 1)
        result = result * e8_theta_combination(calibrate_e8_roots(params.x_i), order);
    if (factors == 2)
        result = result * e8_theta_combination(calibrate_e8_roots(params.x_j), order);
    return result;
}

} // namespace charmod
