#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "charmod/anomaly/identity.hpp"
#include "charmod/charring/graded_poly.hpp"

namespace charmod {

struct VerificationReport {
    IdentityId id{};
    bool pass = false;
    // Rendering of LHS - RHS; empty on pass.
    std::string witness;
    int order = 0;
    int cap = GradedPoly::kDefaultCap;
    long long millis = 0;
    // Assumptions and derived data worth reading next to the verdict.
    std::string note;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline constexpr int kDefaultOrder = 6;

// Total over the registry; routes to the specialised verifiers below.
VerificationReport verify_identity(IdentityId id, int order = kDefaultOrder);

VerificationReport verify_factorization(IdentityId id, int order = kDefaultOrder);
VerificationReport verify_pc_and_mod2(IdentityId id);
VerificationReport verify_differ(IdentityId id);

// Recomputes the degree-12/degree-8 split from the q^1 coefficient of the twisted class
// behind a fact_* id and diffs it against the displayed split.
VerificationReport verify_theorem_split(IdentityId fact_id, int order = 2);

// (LHS, RHS) of the six theorem identities with the given c; x stays symbolic.
std::pair<GradedPoly, GradedPoly> theorem_sides(IdentityId id, const GradedPoly& c);

// The differ difference class gamma = c * delta on Z (degree 12).
GradedPoly differ_gamma(IdentityId id);

// Threads from CHARMOD_THREADS, else hardware concurrency; always >= 1.
int default_thread_count();

// Runs the ids on up to `threads` workers; reports come back in registry order.
std::vector<VerificationReport> verify_all(std::span<const IdentityId> ids, int order, int threads);

} // namespace charmod
