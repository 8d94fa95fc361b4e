#pragma once

#include <string>
#include <utility>

#include "charmod/charring/graded_poly.hpp"

namespace charmod {

// Element of K-theory with rational coefficients, held through its Chern character.
class VirtualBundle {
public:
    explicit VirtualBundle(GradedPoly ch) : ch_(std::move(ch)) {}
    static VirtualBundle trivial(const Rat& rank, int cap = GradedPoly::kDefaultCap)
    {
        return VirtualBundle(GradedPoly(rank, cap));
    }

    const GradedPoly& ch() const { return ch_; }
    Rat rank() const { return ch_.constant_term(); }
    GradedPoly component(int degree) const { return ch_.component(degree); }
    int cap() const { return ch_.cap(); }
    // E - rank(E)
    VirtualBundle reduced() const { return VirtualBundle(ch_ - GradedPoly(rank(), cap())); }
    std::string to_string() const { return ch_.to_string(); }

    friend VirtualBundle operator+(const VirtualBundle& a, const VirtualBundle& b) { return VirtualBundle(a.ch_ + b.ch_); }
    friend VirtualBundle operator-(const VirtualBundle& a, const VirtualBundle& b) { return VirtualBundle(a.ch_ - b.ch_); }
    friend VirtualBundle operator*(const VirtualBundle& a, const VirtualBundle& b) { return VirtualBundle(a.ch_ * b.ch_); }
    friend VirtualBundle operator*(const Rat& s, const VirtualBundle& a) { return VirtualBundle(a.ch_ * s); }
    friend VirtualBundle operator+(const VirtualBundle& a, const Rat& r) { return VirtualBundle(a.ch_ + GradedPoly(r, a.cap())); }
    friend VirtualBundle operator-(const VirtualBundle& a, const Rat& r) { return VirtualBundle(a.ch_ - GradedPoly(r, a.cap())); }
    friend bool operator==(const VirtualBundle&, const VirtualBundle&) = default;

private:
    GradedPoly ch_;
};

VirtualBundle vb_adams(const VirtualBundle& e, int k);
// (Lambda^2 E, S^2 E)
std::pair<VirtualBundle, VirtualBundle> vb_lambda2_sym2(const VirtualBundle& e);

} // namespace charmod
