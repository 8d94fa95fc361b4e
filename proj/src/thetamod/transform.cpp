#include "charmod/thetamod/transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);
constexpr int kMaxTerms = 20000;

constexpr std::array<std::string_view, 5> kNames{"theta", "theta1", "theta2", "theta3", "E2"};

Complex qpow(Complex tau, double exponent) { return std::exp(2.0 * kPi * kI * tau * exponent); }

// Bound on |value| * (e^T - 1), T the tail of sum |a_j| for the product factors past `terms`.
double product_tail(Complex v, Complex tau, int terms, double magnitude)
{
    const double r = std::abs(qpow(tau, 1.0));
    const double z = std::abs(std::exp(2.0 * kPi * kI * v));
    const double spread = 1.0 + z + 1.0 / z;
    // Half-integer exponents give the worst case.
    const double first = spread * std::pow(r, terms + 0.5);
    if (r >= 1.0 || first >= 0.5)
        return INFINITY;
    const double t = first / (1.0 - r) / (1.0 - first);
    return magnitude * std::expm1(t);
}

double e2_tail(Complex tau, int terms)
{
    const double r = std::abs(qpow(tau, 1.0));
    if (r >= 1.0)
        return INFINITY;
    const double n = terms + 1;
    const double s = std::pow(r, n) * (n * n / (1 - r) + 2 * n * r / ((1 - r) * (1 - r)) + r * (1 + r) / std::pow(1 - r, 3));
    return 24.0 * s;
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Sides {
    Complex shift_lhs, shift_rhs, invert_lhs, invert_rhs;
};

Sides evaluate(TransformKind kind, Complex v, Complex tau, int n)
{
    if (kind == TransformKind::E2) {
        const Complex inv = -1.0 / tau;
        return {e2_value(tau + 1.0, n), e2_value(tau, n), e2_value(inv, n),
                tau * tau * e2_value(tau, n) - 6.0 * kI * tau / kPi};
    }
    const auto th = [n](ThetaKind k, Complex vv, Complex tt) { return theta_value(k, vv, tt, n); };
    const Complex inv = -1.0 / tau;
    const Complex factor = std::sqrt(tau / kI) * std::exp(kPi * kI * tau * v * v);
    const Complex eighth = std::exp(kPi * kI / 4.0);
    switch (kind) {
    case TransformKind::theta:
        return {th(ThetaKind::theta, v, tau + 1.0), eighth * th(ThetaKind::theta, v, tau),
                th(ThetaKind::theta, v, inv), factor / kI * th(ThetaKind::theta, tau * v, tau)};
    case TransformKind::theta1:
        return {th(ThetaKind::theta1, v, tau + 1.0), eighth * th(ThetaKind::theta1, v, tau),
                th(ThetaKind::theta1, v, inv), factor * th(ThetaKind::theta2, tau * v, tau)};
    case TransformKind::theta2:
        return {th(ThetaKind::theta2, v, tau + 1.0), th(ThetaKind::theta3, v, tau), th(ThetaKind::theta2, v, inv),
                factor * th(ThetaKind::theta1, tau * v, tau)};
    case TransformKind::theta3:
        return {th(ThetaKind::theta3, v, tau + 1.0), th(ThetaKind::theta2, v, tau), th(ThetaKind::theta3, v, inv),
                factor * th(ThetaKind::theta3, tau * v, tau)};
    case TransformKind::E2:
        break;
    }
    throw ArgumentError("unknown transform kind");
}

double tail_bound(TransformKind kind, Complex v, Complex tau, int n, const Sides& s)
{
    const Complex inv = -1.0 / tau;
    if (kind == TransformKind::E2)
        return std::max({e2_tail(tau + 1.0, n) + e2_tail(tau, n), e2_tail(inv, n) + std::norm(tau) * e2_tail(tau, n)});
    const double shift = product_tail(v, tau + 1.0, n, std::abs(s.shift_lhs) + 1) +
                         product_tail(v, tau, n, std::abs(s.shift_rhs) + 1);
    const double invert = product_tail(v, inv, n, std::abs(s.invert_lhs) + 1) +
                          product_tail(tau * v, tau, n, std::abs(s.invert_rhs) + 1);
    return std::max(shift, invert);
}

} // namespace

std::string_view transform_kind_name(TransformKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

TransformKind parse_transform_kind(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<TransformKind>(i);
    throw ArgumentError("unknown transform kind '" + std::string(name) + "'");
}

Complex theta_value(ThetaKind kind, Complex v, Complex tau, int terms)
{
    const Complex z = std::exp(2.0 * kPi * kI * v), zi = 1.0 / z;
    Complex value(1.0, 0.0);
    if (kind == ThetaKind::theta)
        value = 2.0 * qpow(tau, 1.0 / 8.0) * std::sin(kPi * v);
    else if (kind == ThetaKind::theta1)
        value = 2.0 * qpow(tau, 1.0 / 8.0) * std::cos(kPi * v);
    const double sign = (kind == ThetaKind::theta || kind == ThetaKind::theta2) ? -1.0 : 1.0;
    const double shift = (kind == ThetaKind::theta2 || kind == ThetaKind::theta3) ? 0.5 : 0.0;
    for (int j = 1; j <= terms; ++j) {
        const Complex qj = qpow(tau, j), qs = qpow(tau, j - shift);
        value *= (1.0 - qj) * (1.0 + sign * z * qs) * (1.0 + sign * zi * qs);
    }
    return value;
}

Complex e2_value(Complex tau, int terms)
{
    Complex s(1.0, 0.0);
    for (int n = 1; n <= terms; ++n)
        s -= 24.0 * static_cast<double>(divisor_sigma(1, n)) * qpow(tau, n);
    return s;
}

TransformReport numeric_transform_check(TransformKind kind, Complex v, Complex tau, int terms, double tol)
{
    if (!(tau.imag() > 0))
        throw PrecisionError("Im(tau) must be positive");
    if (!(tol > 0))
        throw ArgumentError("tolerance must be positive");
    int n = terms;
    Sides sides{};
    double bound = INFINITY;
    if (n > 0) {
        sides = evaluate(kind, v, tau, n);
        bound = tail_bound(kind, v, tau, n, sides);
    } else {
        for (n = 8; n <= kMaxTerms; n *= 2) {
            sides = evaluate(kind, v, tau, n);
            bound = tail_bound(kind, v, tau, n, sides);
            if (bound < tol / 10)
                break;
        }
    }
    if (!(bound < tol / 10))
        throw PrecisionError("truncation tail " + sci(bound) + " exceeds tol/10 with " + std::to_string(n) +
                             " terms");
    // Residuals cannot resolve below the rounding of the values themselves.
    const double scale = std::max({1.0, std::abs(sides.shift_lhs), std::abs(sides.shift_rhs), std::abs(sides.invert_lhs),
                                   std::abs(sides.invert_rhs)});
    const double floor = 64 * std::numeric_limits<double>::epsilon() * scale;
    if (tol <= floor)
        throw PrecisionError("tolerance " + sci(tol) + " is below the double rounding floor " + sci(floor));
    TransformReport r{kind, std::abs(sides.shift_lhs - sides.shift_rhs), std::abs(sides.invert_lhs - sides.invert_rhs),
                      bound, n, tol, false};
    r.pass = r.residual_shift < tol && r.residual_invert < tol;
    return r;
}

} // namespace charmod
