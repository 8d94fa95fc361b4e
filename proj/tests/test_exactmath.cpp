#include <doctest.h>

#include <numeric>
#include <random>

#include "charmod/charring/graded_poly.hpp"
#include "charmod/exactmath/errors.hpp"
#include "charmod/exactmath/qseries.hpp"
#include "charmod/exactmath/rat.hpp"
#include "charmod/exactmath/taylor.hpp"
#include "charmod/exactmath/zmod.hpp"

using namespace charmod;

namespace {

// Reduced fraction over __int128; small operands keep it exact.
struct Frac {
    __int128 n, d;
    static __int128 gcd(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    Frac(__int128 num, __int128 den)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd(num, den);
        n = g ? num / g : 0;
        d = g ? den / g : 1;
    }
    Frac operator+(const Frac& o) const { return {n * o.d + o.n * d, d * o.d}; }
    Frac operator-(const Frac& o) const { return {n * o.d - o.n * d, d * o.d}; }
    Frac operator*(const Frac& o) const { return {n * o.n, d * o.d}; }
    Frac operator/(const Frac& o) const { return {n * o.d, d * o.n}; }
};

bool same(const Rat& r, const Frac& f) { return r == Rat(static_cast<long long>(f.n), static_cast<long long>(f.d)); }

using RS = QExpSeries<Rat>;

RS q_power_series(int order, std::initializer_list<std::pair<int, Rat>> terms)
{
    RS s(order, Rat(0));
    for (const auto& [k, c] : terms)
        s.add_term(k, c);
    return s;
}

} // namespace

TEST_CASE("rational arithmetic agrees with an int128 fraction model")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-999, 999), den(1, 999);
    for (int i = 0; i < 2000; ++i) {
        const long long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        const Rat a(an, ad), b(bn, bd);
        const Frac fa(an, ad), fb(bn, bd);
        CHECK(same(a + b, fa + fb));
        CHECK(same(a - b, fa - fb));
        CHECK(same(a * b, fa * fb));
        if (bn != 0)
            CHECK(same(a / b, fa / fb));
    }
}

TEST_CASE("rational normal form, parsing and errors")
{
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(6, -4).to_string() == "-3/2");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat(1, 0), NotInvertible);
    CHECK_THROWS_AS(Rat(0).inverse(), NotInvertible);
    CHECK_THROWS_AS(Rat::parse("1/x"), ParseError);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(factorial(20) == Rat(2432902008176640000LL));
    CHECK(binomial(10, 3) == Rat(120));
    CHECK_THROWS_AS(Rat(1, 2).to_int64(), ArgumentError);
}

TEST_CASE("Fermat's little theorem in Z/p")
{
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 101LL, 1000003LL}) {
        for (long long a = 1; a < std::min(p, 60LL); ++a) {
            CHECK(ZMod(p, a).pow(p - 1) == ZMod(p, 1));
            CHECK(ZMod(p, a).pow(p) == ZMod(p, a));
        }
    }
    CHECK(ZMod(24, -1).value() == 23);
    CHECK(ZMod(24, 5) * ZMod(24, 5) == ZMod(24, 1));
    CHECK_THROWS_AS(ZMod(24, 1) + ZMod(12, 1), RingMismatch);
}

TEST_CASE("q-series exp has coefficients 1/n!")
{
    const int N = 8;
    const RS q = q_power_series(N, {{24, Rat(1)}});
    const RS e = qs_exp(q);
    for (int n = 0; n <= N; ++n)
        CHECK(e.at(n) == factorial(n).inverse());
}

TEST_CASE("q-series exp, log, inverse and power round trips")
{
    const int N = 6;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        RS a(N, Rat(0));
        a.add_term(0, Rat(1));
        for (int k = 1; k <= 24 * N; k += 1 + (trial % 5))
            a.add_term(k, Rat(c(rng), 1 + trial % 4));
        const RS one = RS::constant(Rat(1), N);
        CHECK(a * qs_inv(a) == one);
        CHECK(qs_exp(qs_log(a)) == a);
        CHECK(qs_pow(a, 3) == a * a * a);
        CHECK(qs_pow(a, -2) * a * a == one);
        RS b = a;
        b.add_term(0, Rat(-1));
        CHECK(qs_log(qs_exp(b)) == b);
    }
}

TEST_CASE("q-series exp of a constant uses exp of the coefficient ring")
{
    const GradedPoly x = gen(Gen::x);
    QExpSeries<GradedPoly> s(2, GradedPoly());
    s.add_term(0, x);
    s.add_term(24, x * x);
    const auto e = qs_exp(s);
    CHECK(e.at(0) == x.exp());
    CHECK(e.at(1) == x.exp() * x * x);
    CHECK_THROWS_AS(qs_exp(RS::constant(Rat(1), 3)), NotExponentiable);
}

TEST_CASE("q-series grid and ring errors")
{
    RS frac(2, Rat(0));
    frac.add_term(1, Rat(1));
    CHECK_THROWS_AS(qs_inv(frac), GridError);
    CHECK_THROWS_AS(frac.add_term(-1, Rat(1)), GridError);
    CHECK_THROWS_AS(qs_inv(q_power_series(2, {{24, Rat(1)}})), NotInvertible);
    QExpSeries<GradedPoly> a(2, GradedPoly(12)), b(2, GradedPoly(10));
    a.add_term(0, GradedPoly(Rat(1), 12));
    b.add_term(0, GradedPoly(Rat(1), 10));
    CHECK_THROWS_AS(a * b, RingMismatch);
    // Fractional exponents multiply on the 1/24 grid.
    RS h = q_power_series(1, {{0, Rat(1)}, {12, Rat(1)}});
    CHECK((h * h).coefficient(24) == Rat(1));
    CHECK((h * h).coefficient(12) == Rat(2));
    CHECK(RS::exponent_string(12) == "(1/2)");
}

TEST_CASE("Taylor series closed forms")
{
    const int n = 10;
    const TaylorSeries e = TaylorSeries::exp_linear(Rat(3, 2), n);
    for (int k = 0; k <= n; ++k)
        CHECK(e.coefficient(k) == Rat(3, 2).pow(k) / factorial(k));
    CHECK(e.log() == TaylorSeries::variable(n) * Rat(3, 2));
    CHECK(e * e.inverse() == TaylorSeries::constant(Rat(1), n));
    // log(1 + y) = sum (-1)^{k+1} y^k / k
    const TaylorSeries l = (TaylorSeries::constant(Rat(1), n) + TaylorSeries::variable(n)).log();
    for (int k = 1; k <= n; ++k)
        CHECK(l.coefficient(k) == Rat(k % 2 ? 1 : -1, k));
    CHECK_THROWS_AS(TaylorSeries(3) + TaylorSeries(4), RingMismatch);
}
