#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

enum class SW : std::uint8_t { w2, w4, w6, w8 };

// Polynomial over Z/2 in w2, w4, w6, w8, stored as its set of monomials.
class Mod2Poly {
public:
    using Mono = std::array<std::uint8_t, 4>;

    Mod2Poly() = default;
    static Mod2Poly one();
    static Mod2Poly var(SW w);

    const std::set<Mono>& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;

    Mod2Poly& operator+=(const Mod2Poly& o);
    friend Mod2Poly operator+(Mod2Poly a, const Mod2Poly& b) { return a += b; }
    Mod2Poly operator*(const Mod2Poly& o) const;
    Mod2Poly pow(int n) const;
    friend bool operator==(const Mod2Poly&, const Mod2Poly&) = default;

private:
    void toggle(const Mono& m);
    std::set<Mono> terms_;
};

// Reduces an integral polynomial mod 2 through the given images of its generators.
// Throws ArgumentError on a non-integral coefficient or an unmapped generator.
Mod2Poly reduce_mod2(const GradedPoly& p, const std::map<Gen, Mod2Poly>& images);

} // namespace charmod
