#include "charmod/anomaly/identity.hpp"

#include <string>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

constexpr std::array<std::string_view, kIdentityCount> kNames{
    "wfh_main",     "spin_new",      "spinc_main",    "spinc_new",      "o1",              "o2",
    "fact_spinc_q", "fact_spinc_r",  "fact_orient_q", "fact_orient_r",  "deg8_spinc_q",    "deg8_spinc_r",
    "deg8_orient_q", "deg8_orient_r", "bundle_xi_plus", "bundle_xi_minus", "sqrt_relation", "b1_check",
    "d1_check",     "pc_theorem",    "mod2_orientable", "differ1",      "differ2",
};

} // namespace

const std::array<IdentityId, kIdentityCount>& all_identities()
{
    static const std::array<IdentityId, kIdentityCount> ids = [] {
        std::array<IdentityId, kIdentityCount> a{};
        for (std::size_t i = 0; i < kIdentityCount; ++i)
            a[i] = static_cast<IdentityId>(i);
        return a;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

IdentityId parse_identity(std::string_view name)
{
    for (std::size_t i = 0; i < kIdentityCount; ++i)
        if (kNames[i] == name)
            return static_cast<IdentityId>(i);
    throw ArgumentError("unknown identity id '" + std::string(name) + "'");
}

} // namespace charmod
