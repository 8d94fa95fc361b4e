#pragma once

#include <ostream>
#include <string>

namespace charmod {

// Residue class modulo m, value kept in [0, m).
class ZMod {
public:
    ZMod(long long modulus, long long value);

    long long modulus() const { return m_; }
    long long value() const { return v_; }
    ZMod pow(long long exponent) const;
    std::string to_string() const;

    ZMod operator+(const ZMod& o) const;
    ZMod operator-(const ZMod& o) const;
    ZMod operator*(const ZMod& o) const;
    ZMod operator-() const { return ZMod(m_, -v_); }
    friend bool operator==(const ZMod&, const ZMod&) = default;

private:
    void require_same(const ZMod& o) const;
    long long m_;
    long long v_;
};

std::ostream& operator<<(std::ostream& os, const ZMod& z);

} // namespace charmod
