#include "charmod/charring/witten.hpp"

#include <array>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

// One tensor family: prod_{m>=1} S_t or Lambda_t with t = sign * q^{m - shift}.
struct Family {
    bool symmetric;
    int sign;
    bool half_shift;
    int input;
};

constexpr std::array<std::pair<WittenSpec, std::string_view>, 6> kNames{{
    {WittenSpec::Theta, "Theta"},
    {WittenSpec::ThetaTXi, "ThetaTXi"},
    {WittenSpec::Theta1, "Theta1"},
    {WittenSpec::Theta2, "Theta2"},
    {WittenSpec::Theta3, "Theta3"},
    {WittenSpec::Phi, "Phi"},
}};

std::vector<Family> families(WittenSpec spec)
{
    const Family theta{true, 1, false, 0}, theta1{false, 1, false, 0}, theta2{false, -1, true, 0},
        theta3{false, 1, true, 0};
    switch (spec) {
    case WittenSpec::Theta:
        return {theta};
    case WittenSpec::ThetaTXi:
        return {theta, {false, 1, false, 1}, {false, -1, true, 1}, {false, 1, true, 1}};
    case WittenSpec::Theta1:
        return {theta1};
    case WittenSpec::Theta2:
        return {theta2};
    case WittenSpec::Theta3:
        return {theta3};
    case WittenSpec::Phi:
        return {theta, theta1, theta2, theta3};
    }
    throw SpecError("unknown Witten spec");
}

} // namespace

WittenSpec parse_witten_spec(std::string_view name)
{
    for (const auto& [spec, n] : kNames)
        if (n == name)
            return spec;
    throw SpecError("unknown Witten spec '" + std::string(name) + "'");
}

std::string_view witten_spec_name(WittenSpec spec)
{
    for (const auto& [s, n] : kNames)
        if (s == spec)
            return n;
    throw SpecError("unknown Witten spec");
}

// ch S_t(E) = exp(sum t^k/k psi^k E), ch Lambda_t(E) = exp(sum (-1)^{k+1} t^k/k psi^k E).
CohomQSeries witten_series(WittenSpec spec, std::span<const VirtualBundle> inputs, int order)
{
    const std::size_t needed = spec == WittenSpec::ThetaTXi ? 2 : 1;
    if (inputs.size() != needed)
        throw SpecError(std::string(witten_spec_name(spec)) + " takes " + std::to_string(needed) + " input bundle(s)");
    const int cap = inputs[0].cap();
    const int limit = CohomQSeries::kGrid * order;
    const int max_k = 2 * order;

    std::vector<std::vector<GradedPoly>> adams(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const GradedPoly reduced = inputs[i].reduced().ch();
        adams[i].push_back(GradedPoly(cap));
        for (int k = 1; k <= max_k; ++k)
            adams[i].push_back(reduced.adams(k));
    }

    CohomQSeries log_series(order, GradedPoly(cap));
    for (const Family& f : families(spec)) {
        for (int m = 1;; ++m) {
            const int e = CohomQSeries::kGrid * m - (f.half_shift ? CohomQSeries::kGrid / 2 : 0);
            if (e > limit)
                break;
            for (int k = 1; k * e <= limit; ++k) {
                int s = (f.sign < 0 && k % 2 == 1) ? -1 : 1;
                if (!f.symmetric && k % 2 == 0)
                    s = -s;
                log_series.add_term(k * e, adams[f.input][k] * Rat(s, k));
            }
        }
    }
    return qs_exp(log_series);
}

std::vector<VirtualBundle> witten_coefficients(const CohomQSeries& series)
{
    if (!series.integral_exponents())
        throw GridError("series has fractional exponents");
    std::vector<VirtualBundle> out;
    for (int n = 0; n <= series.order(); ++n)
        out.emplace_back(series.at(n));
    return out;
}

std::vector<VirtualBundle> witten_expand(WittenSpec spec, std::span<const VirtualBundle> inputs, int order)
{
    return witten_coefficients(witten_series(spec, inputs, order));
}

} // namespace charmod
