#pragma once

#include <string>
#include <vector>

#include "charmod/exactmath/rat.hpp"
#include "charmod/exactmath/ring_traits.hpp"

namespace charmod {

// Univariate power series in y over Q, truncated after y^order.
class TaylorSeries {
public:
    explicit TaylorSeries(int order = 0);
    static TaylorSeries constant(const Rat& c, int order);
    static TaylorSeries variable(int order);
    // e^{a y}
    static TaylorSeries exp_linear(const Rat& a, int order);
    static TaylorSeries from_coefficients(std::vector<Rat> coefficients, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Rat coefficient(int k) const;
    bool is_zero() const;
    bool is_even() const;

    TaylorSeries inverse() const;
    // Constant term must be 1.
    TaylorSeries log() const;
    // Constant term must be 0.
    TaylorSeries exp() const;
    std::string to_string(const std::string& var = "y") const;

    TaylorSeries& operator+=(const TaylorSeries& o);
    TaylorSeries& operator-=(const TaylorSeries& o);
    TaylorSeries operator*(const TaylorSeries& o) const;
    TaylorSeries operator*(const Rat& s) const;
    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    TaylorSeries operator-() const { return *this * Rat(-1); }
    friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

private:
    void require_same(const TaylorSeries& o) const;
    std::vector<Rat> c_;
};

template <>
struct RingTraits<TaylorSeries> {
    static constexpr bool q_algebra = true;
    static TaylorSeries zero_like(const TaylorSeries& p) { return TaylorSeries(p.order()); }
    static TaylorSeries one_like(const TaylorSeries& p) { return TaylorSeries::constant(Rat(1), p.order()); }
    static bool is_zero(const TaylorSeries& r) { return r.is_zero(); }
    static bool compatible(const TaylorSeries& a, const TaylorSeries& b) { return a.order() == b.order(); }
    static std::string ring_name(const TaylorSeries& p) { return "Q[y]/y^" + std::to_string(p.order() + 1); }
    static bool is_unit(const TaylorSeries& r) { return !r.coefficient(0).is_zero(); }
    static TaylorSeries inverse(const TaylorSeries& r) { return r.inverse(); }
    static TaylorSeries scale(const TaylorSeries& r, const Rat& s) { return r * s; }
    static TaylorSeries exp_constant(const TaylorSeries& r) { return r.exp(); }
    static TaylorSeries log_constant(const TaylorSeries& r) { return r.log(); }
    static std::string to_string(const TaylorSeries& r) { return r.to_string(); }
};

} // namespace charmod
