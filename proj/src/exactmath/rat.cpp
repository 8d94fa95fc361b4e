#include "charmod/exactmath/rat.hpp"

#include "charmod/exactmath/errors.hpp"

#include <climits>

namespace charmod {

Rat::Rat(long long num, long long den)
{
    if (den == 0)
        throw NotInvertible("zero denominator");
    v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ParseError("not a rational: '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw NotInvertible("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

bool Rat::is_integer() const { return v_.get_den() == 1; }

long long Rat::to_int64() const
{
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw ArgumentError("not a 64-bit integer: " + to_string());
    return v_.get_num().get_si();
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw NotInvertible("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw NotInvertible("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(int exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(mpq_class(n, d));
}

std::string Rat::to_string() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(f));
}

Rat binomial(int n, int k)
{
    if (k < 0 || k > n)
        return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(b));
}

} // namespace charmod
