#include <doctest.h>

#include <random>

#include "charmod/charring/classes.hpp"
#include "charmod/charring/e8_calibration.hpp"
#include "charmod/charring/graded_poly.hpp"
#include "charmod/charring/virtual_bundle.hpp"
#include "charmod/charring/witten.hpp"
#include "charmod/exactmath/errors.hpp"
#include "charmod/thetamod/e8.hpp"

using namespace charmod;

namespace {

// Polynomial in a grading variable t, truncated after t^3.
using Lam = std::array<Rat, 4>;

Lam lam_mul(const Lam& a, const Lam& b)
{
    Lam r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Elementary symmetric polynomials of s_1..s_6.
std::array<Rat, 4> elementary(const std::vector<Rat>& s)
{
    std::array<Rat, 4> e{Rat(1), Rat(0), Rat(0), Rat(0)};
    for (const Rat& v : s)
        for (int k = 3; k >= 1; --k)
            e[k] += e[k - 1] * v;
    return e;
}

Rat eval_at(const GradedPoly& p, const std::array<Rat, 4>& e)
{
    const int cap = p.cap();
    return p
        .substitute({{Gen::p1, GradedPoly(e[1], cap)}, {Gen::p2, GradedPoly(e[2], cap)}, {Gen::p3, GradedPoly(e[3], cap)}})
        .constant_term();
}

std::vector<Rat> random_roots(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-7, 7);
    std::vector<Rat> s;
    for (int j = 0; j < 6; ++j)
        s.emplace_back(d(rng), 1 + j % 3);
    return s;
}

GradedPoly random_poly(std::mt19937_64& rng, int cap)
{
    std::uniform_int_distribution<int> c(-5, 5), e(0, 2);
    GradedPoly p(Rat(c(rng)), cap);
    for (int t = 0; t < 5; ++t) {
        Monomial m;
        m.exps[static_cast<std::size_t>(Gen::p1)] = static_cast<std::uint8_t>(e(rng));
        m.exps[static_cast<std::size_t>(Gen::c)] = static_cast<std::uint8_t>(e(rng));
        m.exps[static_cast<std::size_t>(Gen::x)] = static_cast<std::uint8_t>(e(rng));
        p.add_term(m, Rat(c(rng), 1 + t));
    }
    return p;
}

// Coefficients of the even root series in y^2: (y/2)/sinh(y/2) and y/tanh(y/2).
const Lam kAhatRoot{Rat(1), Rat(-1, 24), Rat(7, 5760), Rat(-31, 967680)};
const Lam kLhatRoot{Rat(2), Rat(1, 6), Rat(-1, 360), Rat(1, 15120)};

} // namespace

TEST_CASE("multiplicative classes match a six-root splitting computation")
{
    std::mt19937_64 rng(3);
    const GradedPoly ahat = multiplicative_class(RootFunction::Ahat, 12);
    const GradedPoly lhat = multiplicative_class(RootFunction::Lhat, 12);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<Rat> s = random_roots(rng);
        const auto e = elementary(s);
        for (const auto& [cls, root] : {std::pair{&ahat, kAhatRoot}, std::pair{&lhat, kLhatRoot}}) {
            Lam prod{Rat(1), Rat(0), Rat(0), Rat(0)};
            for (const Rat& v : s)
                prod = lam_mul(prod, Lam{root[0], root[1] * v, root[2] * v * v, root[3] * v * v * v});
            for (int k = 0; k <= 3; ++k)
                CHECK(eval_at(cls->component(4 * k), e) == prod[k]);
        }
    }
}

TEST_CASE("A-hat in low degrees")
{
    const GradedPoly a = multiplicative_class(RootFunction::Ahat, 12);
    const GradedPoly p1 = gen(Gen::p1), p2 = gen(Gen::p2), p3 = gen(Gen::p3);
    CHECK(a.component(4) == p1 * Rat(-1, 24));
    CHECK(a.component(8) == (p1 * p1 * Rat(7) - p2 * Rat(4)) * Rat(1, 5760));
    CHECK(a.component(12) == p1 * p1 * p1 * Rat(-31, 967680) + p1 * p2 * Rat(11, 241920) - p3 * Rat(1, 60480));
    const GradedPoly a10 = multiplicative_class(RootFunction::Ahat, 10);
    CHECK(a10.cap() == 10);
    CHECK(a10.component(8) == (gen(Gen::tP1, 10) * gen(Gen::tP1, 10) * Rat(7) - gen(Gen::tP2, 10) * Rat(4)) * Rat(1, 5760));
}

TEST_CASE("Newton identities for the power sums")
{
    std::mt19937_64 rng(5);
    const GradedPoly p1 = gen(Gen::p1), p2 = gen(Gen::p2), p3 = gen(Gen::p3);
    const PowerSums pi = power_sums_from_pontryagin(p1, p2, p3);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<Rat> s = random_roots(rng);
        const auto e = elementary(s);
        Rat direct[4] = {Rat(0), Rat(0), Rat(0), Rat(0)};
        for (const Rat& v : s)
            for (int k = 1; k <= 3; ++k)
                direct[k] += v.pow(k);
        CHECK(eval_at(pi.pi1, e) == direct[1]);
        CHECK(eval_at(pi.pi2, e) == direct[2]);
        CHECK(eval_at(pi.pi3, e) == direct[3]);
    }
}

TEST_CASE("graded polynomial ring axioms and truncation")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const GradedPoly a = random_poly(rng, 12), b = random_poly(rng, 12), c = random_poly(rng, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == GradedPoly(12));
        CHECK(a.adams(3) * b.adams(3) == (a * b).adams(3));
        if (!a.constant_term().is_zero())
            CHECK(a * a.inverse() == GradedPoly(Rat(1), 12));
        GradedPoly n = a;
        n.add_term(Monomial{}, -a.constant_term());
        CHECK(n.exp().log() == n);
        CHECK((n + b - GradedPoly(b.constant_term(), 12)).exp() == n.exp() * (b - GradedPoly(b.constant_term(), 12)).exp());
    }
    const GradedPoly x = gen(Gen::x);
    CHECK((x * x * x * x).is_zero());
    CHECK(x.pow(3).max_degree() == 12);
    CHECK_THROWS_AS(gen(Gen::x, 12) + gen(Gen::x, 10), RingMismatch);
    CHECK_THROWS_AS(GradedPoly(12).inverse(), NotInvertible);
    CHECK_THROWS_AS(GradedPoly(Rat(1), 12).exp(), NotExponentiable);
}

TEST_CASE("rendering follows the fixed monomial order")
{
    const GradedPoly p1 = gen(Gen::p1), c = gen(Gen::c), x = gen(Gen::x);
    CHECK((x + c * c + p1 + GradedPoly(Rat(1), 12)).to_string() == "1 + p1 + c^2 + x");
    CHECK((c * Rat(-1, 2) + p1 * x).to_string() == "-1/2*c + p1*x");
}

TEST_CASE("cosh and line pair Chern characters")
{
    const GradedPoly c = gen(Gen::c);
    const GradedPoly h = cosh_class(c * Rat(1, 2));
    CHECK(h.component(4) == c * c * Rat(1, 8));
    CHECK(h.component(8) == c.pow(4) * Rat(1, 384));
    CHECK(h.component(2).is_zero());
    const VirtualBundle xi = line_pair_ch(c);
    CHECK(xi.rank() == Rat(2));
    const auto [l2, s2] = vb_lambda2_sym2(xi);
    // Lambda^2(L + L^-1) = 1, S^2(L + L^-1) = L^2 + 1 + L^-2.
    CHECK(l2.ch() == GradedPoly(Rat(1), 12));
    CHECK(s2.ch() == line_pair_ch(c * Rat(2)).ch() + GradedPoly(Rat(1), 12));
    CHECK(vb_adams(xi, 3).ch() == line_pair_ch(c * Rat(3)).ch());
}

TEST_CASE("tangent Chern character")
{
    const VirtualBundle t = ch_tangent(12);
    const GradedPoly p1 = gen(Gen::p1), p2 = gen(Gen::p2);
    CHECK(t.rank() == Rat(12));
    CHECK(t.component(4) == p1);
    CHECK(t.component(8) == (p1 * p1 - p2 * Rat(2)) * Rat(1, 12));
    CHECK(ch_tangent(10).cap() == 10);
}

TEST_CASE("Witten series low coefficients")
{
    const VirtualBundle t = ch_tangent(12);
    const VirtualBundle tt = t.reduced();
    const std::vector<VirtualBundle> in{t};
    const auto theta = witten_expand(WittenSpec::Theta, in, 2);
    CHECK(theta[0].ch() == GradedPoly(Rat(1), 12));
    CHECK(theta[1] == tt);
    const auto [l2, s2] = vb_lambda2_sym2(tt);
    CHECK(theta[2] == s2 + tt);
    const auto theta1 = witten_expand(WittenSpec::Theta1, in, 2);
    CHECK(theta1[1] == tt);
    CHECK(theta1[2] == l2 + tt);
    const auto theta2 = witten_series(WittenSpec::Theta2, in, 1);
    CHECK(theta2.coefficient(12) == -tt.ch());
    const auto theta3 = witten_series(WittenSpec::Theta3, in, 1);
    CHECK(theta3.coefficient(12) == tt.ch());
    CHECK_THROWS_AS(witten_expand(WittenSpec::Theta2, in, 1), GridError);
    CHECK_THROWS_AS(witten_series(WittenSpec::ThetaTXi, in, 1), SpecError);
    CHECK_THROWS_AS(parse_witten_spec("Theta9"), SpecError);
}

TEST_CASE("E8 root calibration reproduces ch V at q^1")
{
    const GradedPoly x = gen(Gen::x);
    const E8Roots g = calibrate_e8_roots(x);
    const CohomQSeries ch = e8_character(g, 1);
    CHECK(ch.at(0) == GradedPoly(Rat(1), 12));
    CHECK(ch.at(1) == e8_ch(x).ch());
    CHECK(e8_ch(x).rank() == Rat(248));
    CHECK_THROWS(e8_ch(gen(Gen::c)));
}

TEST_CASE("E8 character does not see the degree 8 and 12 root power sums")
{
    const E8Roots calibrated = calibrate_e8_roots(gen(Gen::x));
    CHECK(calibrated.g1 == gen(Gen::x) * Rat(-2));
    CHECK(calibrated.free[1]);
    CHECK(calibrated.free[2]);
    E8Roots symbolic = calibrated;
    symbolic.g2 = gen(Gen::g2);
    symbolic.g3 = gen(Gen::g3);
    CHECK(e8_character(symbolic, 3) == e8_character(calibrated, 3));
}
