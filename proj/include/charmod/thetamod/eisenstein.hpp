#pragma once

#include "charmod/exactmath/qseries.hpp"

namespace charmod {

using RatSeries = QExpSeries<Rat>;

long long divisor_sigma(int power, long long n);

// E2 = 1 - 24 sum sigma_1, E4 = 1 + 240 sum sigma_3, E6 = 1 - 504 sum sigma_5.
RatSeries eisenstein(int k, int order);

// prod_{n>=1} (1 - q^n)
RatSeries phi(int order);

struct ModularBasis {
    int weight;
    RatSeries series;
};

// E4 E6 for weight 10, E4^2 E6 for weight 14.
ModularBasis modular_basis(int weight, int order);

} // namespace charmod
