#include "charmod/exactmath/taylor.hpp"

#include <sstream>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

TaylorSeries::TaylorSeries(int order)
{
    if (order < 0)
        throw ArgumentError("negative Taylor order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TaylorSeries TaylorSeries::constant(const Rat& c, int order)
{
    TaylorSeries t(order);
    t.c_[0] = c;
    return t;
}

TaylorSeries TaylorSeries::variable(int order)
{
    TaylorSeries t(order);
    if (order >= 1)
        t.c_[1] = Rat(1);
    return t;
}

TaylorSeries TaylorSeries::exp_linear(const Rat& a, int order)
{
    TaylorSeries t(order);
    Rat term(1);
    for (int k = 0; k <= order; ++k) {
        t.c_[k] = term;
        term = term * a / Rat(k + 1);
    }
    return t;
}

TaylorSeries TaylorSeries::from_coefficients(std::vector<Rat> coefficients, int order)
{
    TaylorSeries t(order);
    for (std::size_t k = 0; k < coefficients.size() && k < t.c_.size(); ++k)
        t.c_[k] = coefficients[k];
    return t;
}

Rat TaylorSeries::coefficient(int k) const
{
    if (k < 0 || k > order())
        return Rat(0);
    return c_[k];
}

bool TaylorSeries::is_zero() const
{
    for (const auto& r : c_)
        if (!r.is_zero())
            return false;
    return true;
}

bool TaylorSeries::is_even() const
{
    for (int k = 1; k <= order(); k += 2)
        if (!c_[k].is_zero())
            return false;
    return true;
}

void TaylorSeries::require_same(const TaylorSeries& o) const
{
    if (order() != o.order())
        throw RingMismatch("Taylor orders " + std::to_string(order()) + " vs " + std::to_string(o.order()));
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& o)
{
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& o)
{
    require_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

TaylorSeries TaylorSeries::operator*(const TaylorSeries& o) const
{
    require_same(o);
    TaylorSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= order(); ++j)
            if (!o.c_[j].is_zero())
                r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

TaylorSeries TaylorSeries::operator*(const Rat& s) const
{
    TaylorSeries r(*this);
    for (auto& c : r.c_)
        c *= s;
    return r;
}

TaylorSeries TaylorSeries::inverse() const
{
    if (c_[0].is_zero())
        throw NotInvertible("Taylor series with zero constant term");
    TaylorSeries r(order());
    Rat inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j)
            s += c_[j] * r.c_[k - j];
        r.c_[k] = -s * inv0;
    }
    return r;
}

// Recurrences from y f' = y a' f with f = exp(a).
TaylorSeries TaylorSeries::exp() const
{
    if (!c_[0].is_zero())
        throw NotExponentiable("Taylor exp needs zero constant term");
    TaylorSeries r(order());
    r.c_[0] = Rat(1);
    for (int k = 1; k <= order(); ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j)
            s += Rat(j) * c_[j] * r.c_[k - j];
        r.c_[k] = s / Rat(k);
    }
    return r;
}

TaylorSeries TaylorSeries::log() const
{
    if (c_[0] != Rat(1))
        throw NotExponentiable("Taylor log needs constant term 1");
    TaylorSeries r(order());
    for (int k = 1; k <= order(); ++k) {
        Rat s = Rat(k) * c_[k];
        for (int j = 1; j < k; ++j)
            s -= Rat(j) * r.c_[j] * c_[k - j];
        r.c_[k] = s / Rat(k);
    }
    return r;
}

std::string TaylorSeries::to_string(const std::string& var) const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero())
            continue;
        Rat c = c_[k];
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        Rat a = c.abs();
        if (k == 0)
            os << a;
        else {
            if (a != Rat(1))
                os << a << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

} // namespace charmod
