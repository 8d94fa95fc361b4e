#pragma once

#include <string>

#include "charmod/exactmath/errors.hpp"
#include "charmod/exactmath/rat.hpp"
#include "charmod/exactmath/zmod.hpp"

namespace charmod {

// Per-coefficient-ring hooks used by QExpSeries. The prototype argument
// carries runtime ring data (modulus, degree cap, truncation).
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static constexpr bool q_algebra = true;
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& r) { return r.is_zero(); }
    static bool compatible(const Rat&, const Rat&) { return true; }
    static std::string ring_name(const Rat&) { return "Q"; }
    static bool is_unit(const Rat& r) { return !r.is_zero(); }
    static Rat inverse(const Rat& r) { return r.inverse(); }
    static Rat scale(const Rat& r, const Rat& s) { return r * s; }
    static Rat exp_constant(const Rat& r)
    {
        if (!r.is_zero())
            throw NotExponentiable("exp of nonzero rational constant " + r.to_string());
        return Rat(1);
    }
    static Rat log_constant(const Rat& r)
    {
        if (r != Rat(1))
            throw NotExponentiable("log of rational constant " + r.to_string() + " != 1");
        return Rat(0);
    }
    static std::string to_string(const Rat& r) { return r.to_string(); }
};

template <>
struct RingTraits<ZMod> {
    static constexpr bool q_algebra = false;
    static ZMod zero_like(const ZMod& p) { return ZMod(p.modulus(), 0); }
    static ZMod one_like(const ZMod& p) { return ZMod(p.modulus(), 1); }
    static bool is_zero(const ZMod& r) { return r.value() == 0; }
    static bool compatible(const ZMod& a, const ZMod& b) { return a.modulus() == b.modulus(); }
    static std::string ring_name(const ZMod& p) { return "Z/" + std::to_string(p.modulus()); }
    static bool is_unit(const ZMod& r);
    static ZMod inverse(const ZMod& r);
    static std::string to_string(const ZMod& r) { return std::to_string(r.value()); }
};

} // namespace charmod
