#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charmod/exactmath/rat.hpp"

namespace charmod {

using IntVec = std::vector<long long>;

// Free abelian group Z^n with a symmetric trilinear form.
class TrilinearLattice {
public:
    // tensor is row-major n*n*n; throws ArgumentError on size or symmetry violations.
    TrilinearLattice(int rank, std::vector<long long> tensor);
    static TrilinearLattice from_nested(const std::vector<std::vector<std::vector<long long>>>& t);
    // Rank one lattice with T(e,e,e) = t.
    static TrilinearLattice rank_one(long long t) { return TrilinearLattice(1, {t}); }

    int rank() const { return rank_; }
    long long at(int i, int j, int k) const { return t_[(i * rank_ + j) * rank_ + k]; }
    long long eval(const IntVec& u, const IntVec& v, const IntVec& w) const;
    Rat eval_exact(const IntVec& u, const IntVec& v, const IntVec& w) const;

private:
    int rank_;
    std::vector<long long> t_;
};

struct CubicFormSpec {
    IntVec a;
    IntVec b;
};

// a xbar ybar == xbar^2 ybar + xbar ybar^2 mod 2 for all xbar, ybar; ScaleError above rank 8.
bool is_characteristic(const TrilinearLattice& L, const IntVec& a);

struct BhatResult {
    int modulus = 0;
    std::optional<IntVec> bhat;
    // A point where 4x^3 + 6ax^2 + 3a^2x is not the candidate linear form.
    std::optional<IntVec> counterexample;
    // Set for m = 24 when a is not characteristic.
    bool hypothesis_warning = false;
    std::string method;  // "exhaustive" or "sampled"
    long long points = 0;
};

// 4x^3 + 6ax^2 + 3a^2x mod m.
long long bhat_defect_target(const TrilinearLattice& L, const IntVec& a, const IntVec& x, int m);

// Solves for bhat in (Z/m)^n with m in {24, 12, 3}; seed drives sampling above the exhaustive cap.
BhatResult solve_bhat(const TrilinearLattice& L, const IntVec& a, int m, std::uint64_t seed = 0, int samples = 1000);

// Number of duals b' in (Z/m)^n with b'(x) = 4x^3 + 6ax^2 + 3a^2x for every x; exhaustive, small ranks only.
int count_bhat_solutions(const TrilinearLattice& L, const IntVec& a, int m);

// f_{a,b}(x) = (a+x)^3 - b(a+x) and ftilde_{a,b}(x) = 4(a+x)^3 - 6a(a+x)^2 - (b - 3a^2)(a+x).
Rat wfh_polynomial(const TrilinearLattice& L, const CubicFormSpec& s, const IntVec& x);
Rat wfh_tilde_polynomial(const TrilinearLattice& L, const CubicFormSpec& s, const IntVec& x);

struct RelationReport {
    bool pass = true;
    // Symbolic check of ftilde(x) = (f(2x) + f(0))/2 as a polynomial in x.
    bool symbolic_pass = true;
    // Whether the integrality hypotheses (a characteristic, b = bhat mod 24) held.
    bool integrality_checked = false;
    long long samples = 0;
    std::optional<IntVec> witness;
    std::string failure;
};

RelationReport check_cubic_relations(const TrilinearLattice& L, const CubicFormSpec& s, int samples,
                                     std::uint64_t seed = 0, long long range = 50);

// h(x) = cubic * T(x,x,x) + x^T Q x + l.x + constant.
struct CubicPolynomial {
    Rat cubic;
    std::vector<std::vector<Rat>> quadratic;
    std::vector<Rat> linear;
    Rat constant;

    Rat operator()(const TrilinearLattice& L, const IntVec& x) const;
    // (f_{a,b}(2x) - f_{a,b}(0))/48
    static CubicPolynomial from_wfh(const TrilinearLattice& L, const CubicFormSpec& s);
    static CubicPolynomial pure(int rank, const Rat& cubic);
};

struct RefinementReport {
    bool pass = true;
    bool symbolic_pass = true;
    long long samples = 0;
    std::optional<std::vector<IntVec>> witness;  // x, y, z
};

// T(x,y,z) = h(x+y+z) - h(x+y) - h(x+z) - h(y+z) + h(x) + h(y) + h(z) - h(0).
RefinementReport verify_refinement(const TrilinearLattice& L, const CubicPolynomial& h, int samples,
                                   std::uint64_t seed = 0, long long range = 50);

struct LatticeInput {
    TrilinearLattice lattice;
    CubicFormSpec spec;
    int modulus = 24;
    std::uint64_t seed = 0;
};

// {"rank", "trilinear", "a", "b", "modulus", "seed"}; throws ParseError.
LatticeInput parse_lattice_input(const nlohmann::json& j);

} // namespace charmod
