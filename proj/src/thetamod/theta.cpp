#include "charmod/thetamod/theta.hpp"

#include <array>

#include "charmod/charring/classes.hpp"
#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

using YSeries = QExpSeries<TaylorSeries>;

constexpr std::array<std::string_view, 4> kKindNames{"theta", "theta1", "theta2", "theta3"};

// 1 + c q^{k/24}
YSeries binomial_factor(const TaylorSeries& c, int numerator, int order)
{
    YSeries s = YSeries::constant(TaylorSeries::constant(Rat(1), c.order()), order);
    s.add_term(numerator, c);
    return s;
}

} // namespace

std::string_view theta_kind_name(ThetaKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

ThetaKind parse_theta_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name)
            return static_cast<ThetaKind>(i);
    throw ArgumentError("unknown theta kind '" + std::string(name) + "'");
}

QExpSeries<TaylorSeries> theta_ratio_function(ThetaKind kind, int order, int y_order)
{
    const TaylorSeries one = TaylorSeries::constant(Rat(1), y_order);
    const TaylorSeries ey = TaylorSeries::exp_linear(Rat(1), y_order);
    const TaylorSeries emy = TaylorSeries::exp_linear(Rat(-1), y_order);

    TaylorSeries f0 = one;
    if (kind == ThetaKind::theta)
        f0 = root_function_series(RootFunction::Ahat, y_order);
    else if (kind == ThetaKind::theta1)
        f0 = (TaylorSeries::exp_linear(Rat(1, 2), y_order) + TaylorSeries::exp_linear(Rat(-1, 2), y_order)) * Rat(1, 2);

    YSeries num = YSeries::constant(one, order), den = YSeries::constant(one, order);
    const int g = YSeries::kGrid;
    for (int j = 1; j <= order; ++j) {
        const int full = g * j, half = g * j - g / 2;
        switch (kind) {
        case ThetaKind::theta:
            num = num * qs_pow(binomial_factor(-one, full, order), 2);
            den = den * binomial_factor(-ey, full, order) * binomial_factor(-emy, full, order);
            break;
        case ThetaKind::theta1:
            num = num * binomial_factor(ey, full, order) * binomial_factor(emy, full, order);
            den = den * qs_pow(binomial_factor(one, full, order), 2);
            break;
        case ThetaKind::theta2:
            num = num * binomial_factor(-ey, half, order) * binomial_factor(-emy, half, order);
            den = den * qs_pow(binomial_factor(-one, half, order), 2);
            break;
        case ThetaKind::theta3:
            num = num * binomial_factor(ey, half, order) * binomial_factor(emy, half, order);
            den = den * qs_pow(binomial_factor(one, half, order), 2);
            break;
        }
    }
    return (num * qs_inv(den)).scaled(f0);
}

std::vector<RatSeries> theta_log_ratio(ThetaKind kind, int order, int max_k)
{
    const YSeries logf = qs_log(theta_ratio_function(kind, order, 2 * max_k));
    std::vector<RatSeries> out;
    for (int k = 1; k <= max_k; ++k)
        out.push_back(logf.map([k](const TaylorSeries& t) { return t.coefficient(2 * k); }));
    return out;
}

std::vector<RatSeries> lhat_log_ratio(int order, int max_k)
{
    std::vector<RatSeries> sum = theta_log_ratio(ThetaKind::theta, order, max_k);
    for (ThetaKind kind : {ThetaKind::theta1, ThetaKind::theta2, ThetaKind::theta3}) {
        const auto part = theta_log_ratio(kind, order, max_k);
        for (int k = 0; k < max_k; ++k)
            sum[k] += part[k];
    }
    return sum;
}

RatSeries theta_zero(ThetaKind kind, int order)
{
    const int g = RatSeries::kGrid;
    if (kind == ThetaKind::theta)
        return RatSeries(order, Rat(0));
    auto factor = [order](int sign, int numerator) {
        RatSeries s = RatSeries::constant(Rat(1), order);
        s.add_term(numerator, Rat(sign));
        return s;
    };
    RatSeries s = RatSeries::constant(Rat(1), order);
    for (int j = 1; j <= order; ++j) {
        s = s * factor(-1, g * j);
        switch (kind) {
        case ThetaKind::theta1:
            s = s * qs_pow(factor(1, g * j), 2);
            break;
        case ThetaKind::theta2:
            s = s * qs_pow(factor(-1, g * j - g / 2), 2);
            break;
        case ThetaKind::theta3:
            s = s * qs_pow(factor(1, g * j - g / 2), 2);
            break;
        case ThetaKind::theta:
            break;
        }
    }
    if (kind == ThetaKind::theta1)
        s = s * RatSeries::term(Rat(2), g / 8, order);
    return s;
}

} // namespace charmod
