#include "charmod/charring/graded_poly.hpp"

#include <sstream>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

constexpr std::array<int, kGenCount> kDegrees{4, 8, 12, 2, 4, 4, 8, 12, 4, 8, 2, 4, 8, 4};
constexpr std::array<std::string_view, kGenCount> kNames{"p1", "p2", "p3", "c", "x", "g1", "g2",
                                                          "g3", "q1", "q2", "e", "tP1", "tP2", "tx"};

} // namespace

int generator_degree(Gen g) { return kDegrees[static_cast<std::size_t>(g)]; }

std::string_view generator_name(Gen g) { return kNames[static_cast<std::size_t>(g)]; }

std::optional<Gen> parse_generator(std::string_view name)
{
    for (std::size_t i = 0; i < kGenCount; ++i)
        if (kNames[i] == name)
            return static_cast<Gen>(i);
    return std::nullopt;
}

int Monomial::degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < kGenCount; ++i)
        d += exps[i] * kDegrees[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial m;
    for (std::size_t i = 0; i < kGenCount; ++i)
        m.exps[i] = static_cast<std::uint8_t>(exps[i] + o.exps[i]);
    return m;
}

Monomial Monomial::of(Gen g, int power)
{
    Monomial m;
    m.exps[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(power);
    return m;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < kGenCount; ++i) {
        if (exps[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += kNames[i];
        if (exps[i] > 1)
            out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    for (std::size_t i = 0; i < kGenCount; ++i)
        if (a.exps[i] != b.exps[i])
            return a.exps[i] > b.exps[i];
    return false;
}

GradedPoly::GradedPoly(int cap) : cap_(cap)
{
    if (cap < 0)
        throw ArgumentError("negative degree cap");
}

GradedPoly::GradedPoly(const Rat& constant, int cap) : GradedPoly(cap) { add_term(Monomial{}, constant); }

GradedPoly GradedPoly::generator(Gen g, int cap) { return monomial(Monomial::of(g), Rat(1), cap); }

GradedPoly GradedPoly::monomial(const Monomial& m, const Rat& coeff, int cap)
{
    GradedPoly p(cap);
    p.add_term(m, coeff);
    return p;
}

void GradedPoly::add_term(const Monomial& m, const Rat& c)
{
    if (c.is_zero() || m.degree() > cap_)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rat GradedPoly::constant_term() const { return coefficient(Monomial{}); }

Rat GradedPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool GradedPoly::uses(Gen g) const
{
    for (const auto& [m, c] : terms_)
        if (m.exponent(g) > 0)
            return true;
    return false;
}

bool GradedPoly::is_homogeneous(int degree) const
{
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree)
            return false;
    return true;
}

int GradedPoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

GradedPoly GradedPoly::component(int degree) const
{
    GradedPoly r(cap_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            r.terms_.emplace(m, c);
    return r;
}

GradedPoly GradedPoly::truncated(int degree) const
{
    GradedPoly r(cap_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= degree)
            r.terms_.emplace(m, c);
    return r;
}

GradedPoly GradedPoly::with_cap(int cap) const
{
    GradedPoly r(cap);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c);
    return r;
}

GradedPoly GradedPoly::substitute(const std::map<Gen, GradedPoly>& images, int cap) const
{
    GradedPoly result(cap);
    // Cache powers of each image as they are needed.
    std::map<std::pair<Gen, int>, GradedPoly> powers;
    auto power_of = [&](Gen g, int e) -> const GradedPoly& {
        auto key = std::make_pair(g, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        GradedPoly p = images.at(g).with_cap(cap).pow(e);
        return powers.emplace(key, std::move(p)).first->second;
    };
    for (const auto& [m, c] : terms_) {
        GradedPoly term(c, cap);
        Monomial kept;
        for (std::size_t i = 0; i < kGenCount && !term.is_zero(); ++i) {
            if (m.exps[i] == 0)
                continue;
            Gen g = static_cast<Gen>(i);
            if (images.count(g))
                term = term * power_of(g, m.exps[i]);
            else
                kept.exps[i] = m.exps[i];
        }
        if (kept.degree() > 0)
            term = term * monomial(kept, Rat(1), cap);
        result += term;
    }
    return result;
}

std::optional<GradedPoly> GradedPoly::divide_by(Gen g, int power) const
{
    GradedPoly r(cap_);
    const auto idx = static_cast<std::size_t>(g);
    for (const auto& [m, c] : terms_) {
        if (m.exps[idx] < power)
            return std::nullopt;
        Monomial q = m;
        q.exps[idx] = static_cast<std::uint8_t>(q.exps[idx] - power);
        r.terms_.emplace(q, c);
    }
    return r;
}

GradedPoly GradedPoly::adams(int k) const
{
    GradedPoly r(cap_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c * Rat(k).pow(m.degree() / 2));
    return r;
}

void GradedPoly::require_same(const GradedPoly& o) const
{
    if (cap_ != o.cap_)
        throw RingMismatch("degree caps " + std::to_string(cap_) + " vs " + std::to_string(o.cap_));
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    require_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    require_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const
{
    require_same(o);
    GradedPoly r(cap_);
    for (const auto& [ma, ca] : terms_) {
        const int da = ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            // Terms are sorted by degree, so the rest overflow too.
            if (da + mb.degree() > cap_)
                break;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

GradedPoly GradedPoly::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    GradedPoly result(Rat(1), cap_);
    GradedPoly base = *this;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

// f = f0 (1 + u) with u nilpotent under the cap.
GradedPoly GradedPoly::inverse() const
{
    Rat f0 = constant_term();
    if (f0.is_zero())
        throw NotInvertible("graded polynomial with zero constant term");
    GradedPoly u = *this * f0.inverse() - GradedPoly(Rat(1), cap_);
    GradedPoly result(Rat(1), cap_), power(Rat(1), cap_);
    for (;;) {
        power = power * u * Rat(-1);
        if (power.is_zero())
            break;
        result += power;
    }
    return result * f0.inverse();
}

GradedPoly GradedPoly::exp() const
{
    if (!constant_term().is_zero())
        throw NotExponentiable("exp of graded polynomial with nonzero constant " + constant_term().to_string());
    GradedPoly result(Rat(1), cap_), power(Rat(1), cap_);
    for (int k = 1;; ++k) {
        power = power * *this * Rat(1, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

GradedPoly GradedPoly::log() const
{
    if (constant_term() != Rat(1))
        throw NotExponentiable("log of graded polynomial with constant term " + constant_term().to_string());
    GradedPoly u = *this - GradedPoly(Rat(1), cap_);
    GradedPoly result(cap_), power(Rat(1), cap_);
    for (int k = 1;; ++k) {
        power = power * u;
        if (power.is_zero())
            break;
        result += power * Rat((k % 2 == 1) ? 1 : -1, k);
    }
    return result;
}

std::string GradedPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        Rat a = c.abs();
        if (m.degree() == 0)
            os << a;
        else if (a == Rat(1))
            os << m.to_string();
        else
            os << a << "*" << m.to_string();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.to_string(); }

CohomQSeries component_series(const CohomQSeries& s, int degree)
{
    return s.map([degree](const GradedPoly& p) { return p.component(degree); });
}

CohomQSeries truncate_degree(const CohomQSeries& s, int degree)
{
    return s.map([degree](const GradedPoly& p) { return p.truncated(degree); });
}

std::string render_series(const CohomQSeries& s)
{
    if (s.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        if (!first)
            os << "; ";
        first = false;
        os << "q^" << CohomQSeries::exponent_string(k) << ": " << c.to_string();
    }
    return os.str();
}

} // namespace charmod
