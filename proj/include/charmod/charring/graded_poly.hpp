#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "charmod/exactmath/qseries.hpp"
#include "charmod/exactmath/rat.hpp"

namespace charmod {

// Fixed generator table; the order here is the rendering order.
enum class Gen : std::uint8_t { p1, p2, p3, c, x, g1, g2, g3, q1, q2, e, tP1, tP2, tx };
inline constexpr std::size_t kGenCount = 14;

int generator_degree(Gen g);
std::string_view generator_name(Gen g);
std::optional<Gen> parse_generator(std::string_view name);

struct Monomial {
    std::array<std::uint8_t, kGenCount> exps{};

    int degree() const;
    int exponent(Gen g) const { return exps[static_cast<std::size_t>(g)]; }
    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial&) const = default;
    std::string to_string() const;

    static Monomial of(Gen g, int power = 1);
};

// Ascending total degree, then larger exponents of earlier generators first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial over Q in the graded generators, truncated above a degree cap.
class GradedPoly {
public:
    static constexpr int kDefaultCap = 12;
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    explicit GradedPoly(int cap = kDefaultCap);
    GradedPoly(const Rat& constant, int cap);
    static GradedPoly generator(Gen g, int cap = kDefaultCap);
    static GradedPoly monomial(const Monomial& m, const Rat& coeff, int cap = kDefaultCap);

    int cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat constant_term() const;
    Rat coefficient(const Monomial& m) const;
    bool uses(Gen g) const;
    // Zero counts as homogeneous of every degree.
    bool is_homogeneous(int degree) const;
    int max_degree() const;

    GradedPoly component(int degree) const;
    GradedPoly truncated(int degree) const;
    GradedPoly with_cap(int cap) const;
    // Replaces each mapped generator by its image; unmapped generators stay.
    GradedPoly substitute(const std::map<Gen, GradedPoly>& images, int cap) const;
    GradedPoly substitute(const std::map<Gen, GradedPoly>& images) const { return substitute(images, cap_); }
    // Exact division by g^power; nullopt if some monomial is not divisible.
    std::optional<GradedPoly> divide_by(Gen g, int power = 1) const;
    // Scales the degree-2j part by k^j.
    GradedPoly adams(int k) const;

    GradedPoly pow(int n) const;
    GradedPoly inverse() const;
    GradedPoly exp() const;
    GradedPoly log() const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rat& c);

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rat& s);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rat& s) { return a *= s; }
    friend GradedPoly operator*(const Rat& s, GradedPoly a) { return a *= s; }
    GradedPoly operator-() const { return *this * Rat(-1); }
    GradedPoly operator*(const GradedPoly& o) const;
    friend bool operator==(const GradedPoly& a, const GradedPoly& b)
    {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

private:
    void require_same(const GradedPoly& o) const;
    int cap_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

// Shorthand for a generator in the default cap.
inline GradedPoly gen(Gen g, int cap = GradedPoly::kDefaultCap) { return GradedPoly::generator(g, cap); }

template <>
struct RingTraits<GradedPoly> {
    static constexpr bool q_algebra = true;
    static GradedPoly zero_like(const GradedPoly& p) { return GradedPoly(p.cap()); }
    static GradedPoly one_like(const GradedPoly& p) { return GradedPoly(Rat(1), p.cap()); }
    static bool is_zero(const GradedPoly& p) { return p.is_zero(); }
    static bool compatible(const GradedPoly& a, const GradedPoly& b) { return a.cap() == b.cap(); }
    static std::string ring_name(const GradedPoly& p) { return "H^{<=" + std::to_string(p.cap()) + "}"; }
    static bool is_unit(const GradedPoly& p) { return !p.constant_term().is_zero(); }
    static GradedPoly inverse(const GradedPoly& p) { return p.inverse(); }
    static GradedPoly scale(const GradedPoly& p, const Rat& s) { return p * s; }
    static GradedPoly exp_constant(const GradedPoly& p) { return p.exp(); }
    static GradedPoly log_constant(const GradedPoly& p) { return p.log(); }
    static std::string to_string(const GradedPoly& p) { return p.to_string(); }
};

using CohomQSeries = QExpSeries<GradedPoly>;

// Degree-d part of every q-coefficient.
CohomQSeries component_series(const CohomQSeries& s, int degree);
// Every q-coefficient truncated to degree <= d.
CohomQSeries truncate_degree(const CohomQSeries& s, int degree);
std::string render_series(const CohomQSeries& s);

} // namespace charmod
