#include "charmod/thetamod/eisenstein.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

long long divisor_sigma(int power, long long n)
{
    long long s = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        long long t = 1;
        for (int i = 0; i < power; ++i)
            t *= d;
        s += t;
    }
    return s;
}

RatSeries eisenstein(int k, int order)
{
    long long scale;
    int power;
    switch (k) {
    case 2:
        scale = -24, power = 1;
        break;
    case 4:
        scale = 240, power = 3;
        break;
    case 6:
        scale = -504, power = 5;
        break;
    default:
        throw ArgumentError("Eisenstein series E" + std::to_string(k) + " not supported");
    }
    RatSeries s = RatSeries::constant(Rat(1), order);
    for (int n = 1; n <= order; ++n)
        s.add_term(RatSeries::kGrid * n, Rat(scale) * Rat(divisor_sigma(power, n)));
    return s;
}

RatSeries phi(int order)
{
    RatSeries s = RatSeries::constant(Rat(1), order);
    for (int n = 1; n <= order; ++n) {
        RatSeries f = RatSeries::constant(Rat(1), order);
        f.add_term(RatSeries::kGrid * n, Rat(-1));
        s = s * f;
    }
    return s;
}

ModularBasis modular_basis(int weight, int order)
{
    const RatSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    if (weight == 10)
        return {10, e4 * e6};
    if (weight == 14)
        return {14, e4 * e4 * e6};
    throw ArgumentError("no modular basis for weight " + std::to_string(weight));
}

} // namespace charmod
