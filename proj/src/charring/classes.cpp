#include "charmod/charring/classes.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

void require_homogeneous(const GradedPoly& p, int degree, const char* what)
{
    if (!p.is_homogeneous(degree))
        throw DegreeError(std::string(what) + " must be homogeneous of degree " + std::to_string(degree) + ": " +
                          p.to_string());
}

void require_dim(int dim)
{
    if (dim != 10 && dim != 12)
        throw DimError("unsupported dimension " + std::to_string(dim));
}

} // namespace

PowerSums power_sums_from_pontryagin(const GradedPoly& p1, const GradedPoly& p2, const GradedPoly& p3)
{
    require_homogeneous(p1, 4, "p1");
    require_homogeneous(p2, 8, "p2");
    require_homogeneous(p3, 12, "p3");
    PowerSums s{p1, p1 * p1 - p2 * Rat(2), p1 * p1 * p1 - p1 * p2 * Rat(3) + p3 * Rat(3)};
    return s;
}

int default_cap(int dim)
{
    require_dim(dim);
    return dim;
}

PowerSums tangent_power_sums(int dim, int cap)
{
    require_dim(dim);
    if (dim == 12)
        return power_sums_from_pontryagin(gen(Gen::p1, cap), gen(Gen::p2, cap), gen(Gen::p3, cap));
    return power_sums_from_pontryagin(gen(Gen::tP1, cap), gen(Gen::tP2, cap), GradedPoly(cap));
}

TaylorSeries root_function_series(RootFunction f, int order)
{
    // sinh(y/2)/(y/2) and cosh(y/2) as even series.
    std::vector<Rat> s, c;
    for (int k = 0; 2 * k <= order; ++k) {
        Rat quarter_pow = Rat(1, 4).pow(k);
        s.resize(2 * k + 1, Rat(0));
        c.resize(2 * k + 1, Rat(0));
        s[2 * k] = quarter_pow / factorial(2 * k + 1);
        c[2 * k] = quarter_pow / factorial(2 * k);
    }
    const TaylorSeries sinhc = TaylorSeries::from_coefficients(s, order);
    const TaylorSeries cosh_half = TaylorSeries::from_coefficients(c, order);
    const TaylorSeries ahat = sinhc.inverse();
    if (f == RootFunction::Ahat)
        return ahat;
    return ahat * cosh_half * Rat(2);
}

GradedPoly exp_power_sums(const std::vector<Rat>& coefficients, const PowerSums& pi, int cap)
{
    const GradedPoly* pis[3] = {&pi.pi1, &pi.pi2, &pi.pi3};
    GradedPoly s(cap);
    for (std::size_t k = 0; k < coefficients.size() && k < 3; ++k)
        s += pis[k]->with_cap(cap) * coefficients[k];
    return s.exp();
}

GradedPoly multiplicative_class(const TaylorSeries& f, const PowerSums& pi, int half_dim, int cap)
{
    if (!f.is_even())
        throw ParityError("root function is not even: " + f.to_string());
    const Rat f0 = f.coefficient(0);
    if (f0.is_zero())
        throw ArgumentError("root function vanishes at 0");
    const TaylorSeries g = (f * f0.inverse()).log();
    std::vector<Rat> a;
    for (int k = 1; k <= 3; ++k)
        a.push_back(g.coefficient(2 * k));
    return exp_power_sums(a, pi, cap) * f0.pow(half_dim);
}

GradedPoly multiplicative_class(RootFunction f, int dim, int cap)
{
    require_dim(dim);
    return multiplicative_class(root_function_series(f, 6), tangent_power_sums(dim, cap), dim / 2, cap);
}

VirtualBundle ch_tangent(int dim)
{
    const int cap = default_cap(dim);
    const PowerSums pi = tangent_power_sums(dim, cap);
    return VirtualBundle(GradedPoly(Rat(dim), cap) + pi.pi1 + pi.pi2 * Rat(1, 12) + pi.pi3 * Rat(1, 360));
}

VirtualBundle e8_ch(const GradedPoly& x)
{
    require_homogeneous(x, 4, "x");
    const int cap = x.cap();
    return VirtualBundle(GradedPoly(Rat(248), cap) - x * Rat(60) + x * x * Rat(6) - x * x * x * Rat(1, 3));
}

GradedPoly exp_class(const GradedPoly& a) { return a.exp(); }

GradedPoly cosh_class(const GradedPoly& a) { return (a.exp() + (-a).exp()) * Rat(1, 2); }

VirtualBundle line_pair_ch(const GradedPoly& c)
{
    require_homogeneous(c, 2, "c");
    return VirtualBundle(cosh_class(c) * Rat(2));
}

} // namespace charmod
