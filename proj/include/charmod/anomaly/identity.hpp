#pragma once

#include <array>
#include <string_view>

namespace charmod {

enum class IdentityId {
    wfh_main,
    spin_new,
    spinc_main,
    spinc_new,
    o1,
    o2,
    fact_spinc_q,
    fact_spinc_r,
    fact_orient_q,
    fact_orient_r,
    deg8_spinc_q,
    deg8_spinc_r,
    deg8_orient_q,
    deg8_orient_r,
    bundle_xi_plus,
    bundle_xi_minus,
    sqrt_relation,
    b1_check,
    d1_check,
    pc_theorem,
    mod2_orientable,
    differ1,
    differ2,
};

inline constexpr std::size_t kIdentityCount = 23;

// Registry order; reports are always emitted in this order.
const std::array<IdentityId, kIdentityCount>& all_identities();
std::string_view identity_name(IdentityId id);
// Throws ArgumentError on unknown names.
IdentityId parse_identity(std::string_view name);

} // namespace charmod
