#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace charmod {

// Arbitrary-precision rational in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    template <std::integral I>
    Rat(I n) : v_(static_cast<long>(n)) {}
    Rat(long long num, long long den);
    explicit Rat(mpq_class v);

    // Accepts "n", "-n/d".
    static Rat parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const;
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    // Throws ArgumentError when not an integer or outside int64.
    long long to_int64() const;
    double to_double() const { return v_.get_d(); }

    Rat inverse() const;
    Rat pow(int exponent) const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    std::string to_string() const;
    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat factorial(int n);
Rat binomial(int n, int k);

} // namespace charmod
