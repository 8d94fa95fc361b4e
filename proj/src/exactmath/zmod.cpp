#include "charmod/exactmath/zmod.hpp"

#include "charmod/exactmath/errors.hpp"

namespace charmod {

ZMod::ZMod(long long modulus, long long value) : m_(modulus)
{
    if (modulus <= 0)
        throw ArgumentError("modulus must be positive");
    v_ = value % m_;
    if (v_ < 0)
        v_ += m_;
}

void ZMod::require_same(const ZMod& o) const
{
    if (m_ != o.m_)
        throw RingMismatch("Z/" + std::to_string(m_) + " vs Z/" + std::to_string(o.m_));
}

ZMod ZMod::operator+(const ZMod& o) const
{
    require_same(o);
    return ZMod(m_, v_ + o.v_);
}

ZMod ZMod::operator-(const ZMod& o) const
{
    require_same(o);
    return ZMod(m_, v_ - o.v_);
}

ZMod ZMod::operator*(const ZMod& o) const
{
    require_same(o);
    return ZMod(m_, static_cast<long long>((static_cast<__int128>(v_) * o.v_) % m_));
}

ZMod ZMod::pow(long long exponent) const
{
    if (exponent < 0)
        throw ArgumentError("negative exponent in Z/m");
    ZMod result(m_, 1), base = *this;
    while (exponent > 0) {
        if (exponent & 1)
            result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

std::string ZMod::to_string() const { return std::to_string(v_) + " mod " + std::to_string(m_); }

std::ostream& operator<<(std::ostream& os, const ZMod& z) { return os << z.to_string(); }

} // namespace charmod
