#include "charmod/anomaly/mod2.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {
constexpr std::array<const char*, 4> kNames{"w2", "w4", "w6", "w8"};
constexpr std::array<int, 4> kDegrees{2, 4, 6, 8};

int mono_degree(const Mod2Poly::Mono& m)
{
    int d = 0;
    for (std::size_t i = 0; i < 4; ++i)
        d += m[i] * kDegrees[i];
    return d;
}
} // namespace

Mod2Poly Mod2Poly::one()
{
    Mod2Poly p;
    p.terms_.insert(Mono{});
    return p;
}

Mod2Poly Mod2Poly::var(SW w)
{
    Mod2Poly p;
    Mono m{};
    m[static_cast<std::size_t>(w)] = 1;
    p.terms_.insert(m);
    return p;
}

void Mod2Poly::toggle(const Mono& m)
{
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

Mod2Poly& Mod2Poly::operator+=(const Mod2Poly& o)
{
    for (const Mono& m : o.terms_)
        toggle(m);
    return *this;
}

Mod2Poly Mod2Poly::operator*(const Mod2Poly& o) const
{
    Mod2Poly r;
    for (const Mono& a : terms_)
        for (const Mono& b : o.terms_) {
            Mono m{};
            for (std::size_t i = 0; i < 4; ++i)
                m[i] = static_cast<std::uint8_t>(a[i] + b[i]);
            r.toggle(m);
        }
    return r;
}

Mod2Poly Mod2Poly::pow(int n) const
{
    Mod2Poly r = one();
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

std::string Mod2Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    // Render by ascending degree, then the set order.
    std::multimap<int, Mono> sorted;
    for (const Mono& m : terms_)
        sorted.emplace(mono_degree(m), m);
    std::string out;
    for (const auto& [d, m] : sorted) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < 4; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += kNames[i];
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

Mod2Poly reduce_mod2(const GradedPoly& p, const std::map<Gen, Mod2Poly>& images)
{
    Mod2Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_integer())
            throw ArgumentError("coefficient " + c.to_string() + " of " + m.to_string() + " is not integral");
        if (c.numerator() % 2 == 0)
            continue;
        Mod2Poly term = Mod2Poly::one();
        for (std::size_t i = 0; i < kGenCount; ++i) {
            if (m.exps[i] == 0)
                continue;
            auto it = images.find(static_cast<Gen>(i));
            if (it == images.end())
                throw ArgumentError("no mod-2 image for generator " + std::string(generator_name(static_cast<Gen>(i))));
            term = term * it->second.pow(m.exps[i]);
        }
        r += term;
    }
    return r;
}

} // namespace charmod
