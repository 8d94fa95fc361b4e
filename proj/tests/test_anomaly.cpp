#include <doctest.h>

#include <algorithm>

#include "charmod/anomaly/cubic_classes.hpp"
#include "charmod/anomaly/identity.hpp"
#include "charmod/anomaly/mod2.hpp"
#include "charmod/anomaly/report.hpp"
#include "charmod/anomaly/restriction.hpp"
#include "charmod/anomaly/twisted.hpp"
#include "charmod/anomaly/verify.hpp"
#include "charmod/charring/classes.hpp"
#include "charmod/exactmath/errors.hpp"

using namespace charmod;

namespace {

const TwistedKind kKinds[] = {TwistedKind::W,  TwistedKind::Wc, TwistedKind::Qc,     TwistedKind::Rc,
                              TwistedKind::QL, TwistedKind::RL, TwistedKind::LWitten};

VerificationReport without_time(VerificationReport r)
{
    r.millis = 0;
    return r;
}

} // namespace

TEST_CASE("identity registry names round trip")
{
    CHECK(all_identities().size() == 23);
    for (IdentityId id : all_identities())
        CHECK(parse_identity(identity_name(id)) == id);
    CHECK(identity_name(IdentityId::wfh_main) == "wfh_main");
    CHECK(identity_name(IdentityId::differ2) == "differ2");
    CHECK_THROWS_AS(parse_identity("nosuch"), ArgumentError);
}

TEST_CASE("the six degree-12 identities vanish with symbolic generators")
{
    for (IdentityId id : {IdentityId::wfh_main, IdentityId::spin_new, IdentityId::spinc_main, IdentityId::spinc_new,
                          IdentityId::o1, IdentityId::o2}) {
        const auto [lhs, rhs] = theorem_sides(id, gen(Gen::c));
        CHECK_MESSAGE(lhs == rhs, identity_name(id));
        CHECK(lhs.is_homogeneous(12));
        CHECK(!lhs.is_zero());
    }
}

TEST_CASE("spin^c identities at c = 0 are twice the spin identities")
{
    const GradedPoly zero(12);
    const auto [wl, wr] = theorem_sides(IdentityId::wfh_main, zero);
    const auto [cl, cr] = theorem_sides(IdentityId::spinc_main, zero);
    CHECK(cl == wl * Rat(2));
    CHECK(cr == wr * Rat(2));
    const auto [sl, sr] = theorem_sides(IdentityId::spin_new, zero);
    const auto [nl, nr] = theorem_sides(IdentityId::spinc_new, zero);
    CHECK(nl == sl * Rat(2));
    CHECK(nr == sr * Rat(2));
}

TEST_CASE("perturbing a theorem side is detected")
{
    auto [lhs, rhs] = theorem_sides(IdentityId::o1, gen(Gen::c));
    CHECK(lhs + gen(Gen::p3) * Rat(1, 1000) != rhs);
}

TEST_CASE("Adams and theta-ratio routes agree for every twisted class")
{
    const TwistedParams params = symbolic_params();
    for (TwistedKind k : kKinds) {
        const CohomQSeries adams = build_twisted_class(k, params, 4, Route::Adams);
        const CohomQSeries ratio = build_twisted_class(k, params, 4, Route::ThetaRatio);
        CHECK_MESSAGE(adams == ratio, twisted_kind_name(k));
        CHECK(parse_twisted_kind(twisted_kind_name(k)) == k);
    }
    CHECK_THROWS_AS(build_twisted_class(TwistedKind::W, params, 1), ArgumentError);
    CHECK_THROWS_AS(parse_twisted_kind("Xc"), ArgumentError);
}

TEST_CASE("square root relation and a negative control")
{
    const TwistedParams params = symbolic_params();
    const int N = 3;
    const CohomQSeries r = build_twisted_class(TwistedKind::Rc, params, N);
    const CohomQSeries q = build_twisted_class(TwistedKind::Qc, params, N);
    const CohomQSeries wc = build_twisted_class(TwistedKind::Wc, params, N);
    const CohomQSeries w = build_twisted_class(TwistedKind::W, params, N);
    CHECK(r * r == q * wc);
    // The untwisted class does not close the relation once c is present.
    CHECK(r * r != q * w);
    const CohomQSeries rl = build_twisted_class(TwistedKind::RL, params, N);
    CHECK(rl * rl != q * wc);
}

TEST_CASE("modular factorisations and the degree-12/degree-8 split")
{
    for (IdentityId id : {IdentityId::fact_spinc_q, IdentityId::fact_spinc_r, IdentityId::fact_orient_q,
                          IdentityId::fact_orient_r}) {
        const VerificationReport f = verify_factorization(id, 4);
        CHECK_MESSAGE(f.pass, f.witness);
        const VerificationReport s = verify_theorem_split(id);
        CHECK_MESSAGE(s.pass, s.witness);
    }
    CHECK_THROWS_AS(verify_factorization(IdentityId::wfh_main, 4), ArgumentError);
}

TEST_CASE("restriction to the characteristic submanifold")
{
    const int cap = kSubmanifoldCap;
    const GradedPoly e = gen(Gen::e, cap), tP1 = gen(Gen::tP1, cap), tP2 = gen(Gen::tP2, cap), tx = gen(Gen::tx, cap);
    CHECK(restrict_to_U(gen(Gen::p1)) == tP1 + e * e);
    CHECK(restrict_to_U(gen(Gen::p2)) == tP2 + tP1 * e * e);
    CHECK(restrict_to_U(gen(Gen::c) * gen(Gen::x)) == e * tx);
    // Degree 12 leaves the ring.
    CHECK(restrict_to_U(gen(Gen::x).pow(3)).is_zero());
    CHECK(restrict_to_U(gen(Gen::p1) * gen(Gen::p1)) == (tP1 + e * e) * (tP1 + e * e));
    CHECK_THROWS_AS(restrict_to_U(gen(Gen::p3)), UnsupportedGenerator);
    CHECK_THROWS_AS(restrict_to_U(gen(Gen::g1)), UnsupportedGenerator);
}

TEST_CASE("tanh correction for a trivial line bundle")
{
    const int cap = kSubmanifoldCap;
    const GradedPoly e = gen(Gen::e, cap), tP1 = gen(Gen::tP1, cap), tP2 = gen(Gen::tP2, cap);
    const GradedPoly expected = (e.pow(5) * Rat(1, 7680) + tP1 * e.pow(3) * Rat(1, 24 * 192) +
                                 (tP1 * tP1 * Rat(7) - tP2 * Rat(4)) * e * Rat(1, 5760 * 4)) *
                                Rat(1, 2);
    CHECK(tanh_correction(GradedPoly(Rat(1), cap)) == expected);
}

TEST_CASE("differ findings are reported with their witnesses")
{
    const GradedPoly c = gen(Gen::c);
    for (IdentityId id : {IdentityId::differ1, IdentityId::differ2})
        CHECK(differ_gamma(id).divide_by(Gen::c, 2).has_value());
    const VerificationReport d1 = verify_differ(IdentityId::differ1);
    CHECK(!d1.pass);
    CHECK(d1.witness == "5/64*e^5 - 1/16*e^3*tP1 - 1/8*e^3*tx");
    CHECK(d1.note.find("p_i(TZ) restricts to p_i(TU)") != std::string::npos);
    const VerificationReport d2 = verify_differ(IdentityId::differ2);
    CHECK(!d2.pass);
    CHECK(d2.witness == "-1/64*e^5 - 1/16*e^3*tP1 - 7/16*e^3*tx");
    CHECK(d2.cap == kSubmanifoldCap);
}

TEST_CASE("Z/2 polynomial arithmetic")
{
    const Mod2Poly w2 = Mod2Poly::var(SW::w2), w4 = Mod2Poly::var(SW::w4);
    CHECK((w2 + w4).pow(2) == w2 * w2 + w4 * w4);
    CHECK((w2 + w2).is_zero());
    CHECK((w2 + Mod2Poly::one()) * (w2 + Mod2Poly::one()) == w2 * w2 + Mod2Poly::one());
    CHECK((w2 * w4).to_string() == "w2*w4");
    const std::map<Gen, Mod2Poly> images{{Gen::p1, w2 * w2}, {Gen::c, w2}};
    CHECK(reduce_mod2(gen(Gen::p1) * Rat(2), images).is_zero());
    CHECK(reduce_mod2(gen(Gen::p1) * Rat(3) + gen(Gen::c) * gen(Gen::c), images).is_zero());
    CHECK(reduce_mod2(gen(Gen::p1) - gen(Gen::c), images) == w2 * w2 + w2);
    CHECK_THROWS_AS(reduce_mod2(gen(Gen::p1) * Rat(1, 2), images), ArgumentError);
    CHECK_THROWS_AS(reduce_mod2(gen(Gen::x), images), ArgumentError);
}

TEST_CASE("named cubic classes")
{
    const CubicClasses spin = cubic_classes(gen(Gen::x), GradedPoly(12));
    CHECK(spin.lambda == gen(Gen::p1) * Rat(1, 2));
    CHECK(spin.p == (gen(Gen::p2) - spin.lambda * spin.lambda) * Rat(1, 2));
    const CubicClasses sym = cubic_classes();
    CHECK(sym.C_c.uses(Gen::c));
    CHECK(!spin.C.uses(Gen::c));
}

TEST_CASE("registry reports: pc, mod 2, bundles and Witten coefficients")
{
    for (IdentityId id : {IdentityId::pc_theorem, IdentityId::mod2_orientable, IdentityId::b1_check,
                          IdentityId::d1_check, IdentityId::bundle_xi_plus, IdentityId::bundle_xi_minus,
                          IdentityId::deg8_spinc_q, IdentityId::deg8_spinc_r, IdentityId::deg8_orient_q,
                          IdentityId::deg8_orient_r}) {
        const VerificationReport r = verify_identity(id, 2);
        CHECK_MESSAGE(r.pass, identity_name(id), ": ", r.witness);
        CHECK(r.witness.empty());
    }
    CHECK(verify_identity(IdentityId::mod2_orientable).note.find("w_{2i}^2") != std::string::npos);
}

TEST_CASE("parallel runs are deterministic and ordered")
{
    std::vector<IdentityId> ids{IdentityId::o2, IdentityId::wfh_main, IdentityId::differ1, IdentityId::o2,
                                IdentityId::pc_theorem};
    const auto serial = verify_all(ids, 2, 1);
    const auto parallel = verify_all(ids, 2, 4);
    REQUIRE(serial.size() == 4);
    REQUIRE(parallel.size() == 4);
    CHECK(std::is_sorted(serial.begin(), serial.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(without_time(serial[i]) == without_time(parallel[i]));
    CHECK(default_thread_count() >= 1);
}

TEST_CASE("report JSON round trip")
{
    std::vector<IdentityId> ids{IdentityId::wfh_main, IdentityId::fact_spinc_r, IdentityId::differ2,
                                IdentityId::mod2_orientable};
    for (const VerificationReport& r : verify_all(ids, 2, 2)) {
        const nlohmann::json j = report_to_json(r);
        CHECK(j["status"] == (r.pass ? "pass" : "fail"));
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
    }
    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"id", "wfh_main"}}), ParseError);
    CHECK_THROWS_AS(report_from_json(nlohmann::json::array()), ParseError);
    nlohmann::json bad = report_to_json(verify_identity(IdentityId::o1, 2));
    bad["id"] = "nosuch";
    CHECK_THROWS_AS(report_from_json(bad), ParseError);
}
