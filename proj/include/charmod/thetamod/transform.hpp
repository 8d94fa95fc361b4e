#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "charmod/thetamod/theta.hpp"

namespace charmod {

using Complex = std::complex<double>;

enum class TransformKind { theta, theta1, theta2, theta3, E2 };

std::string_view transform_kind_name(TransformKind kind);
TransformKind parse_transform_kind(std::string_view name);

// Raw product formulas (with the q^{1/8} prefactors), j = 1..terms.
Complex theta_value(ThetaKind kind, Complex v, Complex tau, int terms);
Complex e2_value(Complex tau, int terms);

struct TransformReport {
    TransformKind kind;
    double residual_shift;   // tau -> tau + 1
    double residual_invert;  // tau -> -1/tau
    double tail_bound;       // truncation error bound of the evaluations
    int terms;
    double tol;
    bool pass;
};

// terms = 0 picks the smallest count whose tail bound is below tol/10.
TransformReport numeric_transform_check(TransformKind kind, Complex v, Complex tau, int terms = 0, double tol = 1e-8);

} // namespace charmod
