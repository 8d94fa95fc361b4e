#include "charmod/cubiclattice/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "charmod/exactmath/errors.hpp"

namespace charmod {

namespace {

constexpr long long kExhaustivePoints = 576;

long long mod(long long v, long long m)
{
    v %= m;
    return v < 0 ? v + m : v;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

void require_rank(const TrilinearLattice& L, const IntVec& v, const char* what)
{
    if (static_cast<int>(v.size()) != L.rank())
        throw ArgumentError(std::string(what) + " has length " + std::to_string(v.size()) + ", rank is " +
                            std::to_string(L.rank()));
}

// Walks every vector in [0, m)^n; f returns false to stop.
template <class F>
void for_each_point(int n, long long m, F f)
{
    IntVec x(static_cast<std::size_t>(n), 0);
    for (;;) {
        if (!f(x))
            return;
        int i = 0;
        while (i < n && ++x[i] == m)
            x[i++] = 0;
        if (i == n)
            return;
    }
}

IntVec add(IntVec a, const IntVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

IntVec scale(IntVec a, long long s)
{
    for (auto& v : a)
        v *= s;
    return a;
}

Rat pairing(const IntVec& b, const IntVec& v)
{
    Rat s(0);
    for (std::size_t i = 0; i < b.size(); ++i)
        s += Rat(b[i]) * Rat(v[i]);
    return s;
}

// Multivariate polynomial over Q; exponent vectors index the variables.
class MPoly {
public:
    using Exps = std::vector<int>;
    explicit MPoly(int vars) : vars_(vars) {}
    static MPoly constant(int vars, const Rat& c)
    {
        MPoly p(vars);
        p.add(Exps(static_cast<std::size_t>(vars), 0), c);
        return p;
    }
    static MPoly variable(int vars, int i)
    {
        MPoly p(vars);
        Exps e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add(e, Rat(1));
        return p;
    }
    bool is_zero() const { return terms_.empty(); }
    void add(const Exps& e, const Rat& c)
    {
        if (c.is_zero())
            return;
        auto [it, ins] = terms_.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    MPoly& operator+=(const MPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add(e, c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a += b * Rat(-1); }
    MPoly operator*(const Rat& s) const
    {
        MPoly r(vars_);
        for (const auto& [e, c] : terms_)
            r.add(e, c * s);
        return r;
    }
    MPoly operator*(const MPoly& o) const
    {
        MPoly r(vars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exps e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
    std::string to_string() const
    {
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.to_string() + ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0)
                    out += "*v" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
        }
        return out.empty() ? "0" : out;
    }

private:
    int vars_;
    std::map<Exps, Rat> terms_;
};

using PVec = std::vector<MPoly>;

MPoly trilinear(const TrilinearLattice& L, const PVec& u, const PVec& v, const PVec& w, int vars)
{
    MPoly s(vars);
    const int n = L.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (L.at(i, j, k) != 0)
                    s += u[i] * v[j] * w[k] * Rat(L.at(i, j, k));
    return s;
}

PVec const_vec(const IntVec& a, int vars)
{
    PVec r;
    for (long long v : a)
        r.push_back(MPoly::constant(vars, Rat(v)));
    return r;
}

PVec var_vec(int n, int offset, int vars)
{
    PVec r;
    for (int i = 0; i < n; ++i)
        r.push_back(MPoly::variable(vars, offset + i));
    return r;
}

PVec padd(PVec a, const PVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

PVec pscale(PVec a, const Rat& s)
{
    for (auto& v : a)
        v = v * s;
    return a;
}

MPoly ppair(const IntVec& b, const PVec& v, int vars)
{
    MPoly s(vars);
    for (std::size_t i = 0; i < b.size(); ++i)
        s += v[i] * Rat(b[i]);
    return s;
}

MPoly f_symbolic(const TrilinearLattice& L, const CubicFormSpec& s, const PVec& x, int vars)
{
    const PVec v = padd(const_vec(s.a, vars), x);
    return trilinear(L, v, v, v, vars) - ppair(s.b, v, vars);
}

MPoly ftilde_symbolic(const TrilinearLattice& L, const CubicFormSpec& s, const PVec& x, int vars)
{
    const PVec a = const_vec(s.a, vars);
    const PVec v = padd(a, x);
    return trilinear(L, v, v, v, vars) * Rat(4) - trilinear(L, a, v, v, vars) * Rat(6) - ppair(s.b, v, vars) +
           trilinear(L, a, a, v, vars) * Rat(3);
}

MPoly h_symbolic(const TrilinearLattice& L, const CubicPolynomial& h, const PVec& x, int vars)
{
    MPoly r = trilinear(L, x, x, x, vars) * h.cubic + MPoly::constant(vars, h.constant);
    const int n = L.rank();
    for (int i = 0; i < n; ++i) {
        r += x[i] * h.linear[i];
        for (int j = 0; j < n; ++j)
            r += x[i] * x[j] * h.quadratic[i][j];
    }
    return r;
}

IntVec random_vec(std::mt19937_64& rng, int n, long long lo, long long hi)
{
    std::uniform_int_distribution<long long> d(lo, hi);
    IntVec v(static_cast<std::size_t>(n));
    for (auto& c : v)
        c = d(rng);
    return v;
}

} // namespace

TrilinearLattice::TrilinearLattice(int rank, std::vector<long long> tensor) : rank_(rank), t_(std::move(tensor))
{
    if (rank < 1)
        throw ArgumentError("lattice rank must be positive");
    if (t_.size() != static_cast<std::size_t>(rank) * rank * rank)
        throw ArgumentError("trilinear tensor needs rank^3 = " + std::to_string(rank * rank * rank) + " entries");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) {
                const long long v = at(i, j, k);
                if (v != at(j, i, k) || v != at(i, k, j) || v != at(k, j, i))
                    throw ArgumentError("trilinear tensor is not symmetric at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
            }
}

TrilinearLattice TrilinearLattice::from_nested(const std::vector<std::vector<std::vector<long long>>>& t)
{
    const int n = static_cast<int>(t.size());
    std::vector<long long> flat;
    for (const auto& plane : t) {
        if (static_cast<int>(plane.size()) != n)
            throw ArgumentError("trilinear tensor is not cubical");
        for (const auto& row : plane) {
            if (static_cast<int>(row.size()) != n)
                throw ArgumentError("trilinear tensor is not cubical");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return TrilinearLattice(n, std::move(flat));
}

long long TrilinearLattice::eval(const IntVec& u, const IntVec& v, const IntVec& w) const
{
    long long s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0)
            continue;
        for (int j = 0; j < rank_; ++j) {
            if (v[j] == 0)
                continue;
            for (int k = 0; k < rank_; ++k)
                s += at(i, j, k) * u[i] * v[j] * w[k];
        }
    }
    return s;
}

Rat TrilinearLattice::eval_exact(const IntVec& u, const IntVec& v, const IntVec& w) const
{
    Rat s(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k)
                if (at(i, j, k) != 0 && u[i] != 0 && v[j] != 0 && w[k] != 0)
                    s += Rat(at(i, j, k)) * Rat(u[i]) * Rat(v[j]) * Rat(w[k]);
    return s;
}

bool is_characteristic(const TrilinearLattice& L, const IntVec& a)
{
    require_rank(L, a, "a");
    const int n = L.rank();
    if (n > 8)
        throw ScaleError("characteristic test enumerates (Z/2)^n x (Z/2)^n; rank " + std::to_string(n) + " > 8");
    IntVec abar(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        abar[i] = mod(a[i], 2);
    bool ok = true;
    for_each_point(n, 2, [&](const IntVec& x) {
        for_each_point(n, 2, [&](const IntVec& y) {
            const long long lhs = L.eval(abar, x, y), rhs = L.eval(x, x, y) + L.eval(x, y, y);
            ok = mod(lhs - rhs, 2) == 0;
            return ok;
        });
        return ok;
    });
    return ok;
}

namespace {

// 4x^3 + 6ax^2 + 3a^2x mod m, with the cubic, quadratic and linear coefficient tensors reduced once.
class DefectEvaluator {
public:
    DefectEvaluator(const TrilinearLattice& L, const IntVec& a, long long m)
        : n_(L.rank()), m_(m), cubic_(static_cast<std::size_t>(n_ * n_ * n_)), quad_(static_cast<std::size_t>(n_ * n_)),
          lin_(static_cast<std::size_t>(n_)), xm_(static_cast<std::size_t>(n_))
    {
        IntVec am(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            am[i] = mod(a[i], m);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) {
                long long q = 0;
                for (int i = 0; i < n_; ++i) {
                    const long long t = mod(L.at(i, j, k), m);
                    cubic_[idx(i, j, k)] = mod(4 * t, m);
                    q += am[i] * t;
                }
                quad_[j * n_ + k] = mod(6 * q, m);
            }
        for (int k = 0; k < n_; ++k) {
            long long l = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    l += am[i] * am[j] % m * mod(L.at(i, j, k), m);
            lin_[k] = mod(3 * l, m);
        }
    }

    long long operator()(const IntVec& x) const
    {
        for (int i = 0; i < n_; ++i)
            xm_[i] = mod(x[i], m_);
        return reduced(xm_);
    }

    // x already in [0, m)^n. sum_k x_k (lin_k + sum_j x_j (quad_jk + sum_i cubic_ijk x_i)); the unreduced
    // sum is below n^3 m^4, far inside 64 bits for any rank this code can enumerate.
    long long reduced(const IntVec& x) const
    {
        long long s = 0;
        for (int k = 0; k < n_; ++k) {
            if (x[k] == 0)
                continue;
            long long inner = lin_[k];
            for (int j = 0; j < n_; ++j) {
                if (x[j] == 0)
                    continue;
                long long c = quad_[j * n_ + k];
                for (int i = 0; i < n_; ++i)
                    c += cubic_[idx(i, j, k)] * x[i];
                inner += x[j] * c;
            }
            s += x[k] * inner;
        }
        return s % m_;
    }

private:
    std::size_t idx(int i, int j, int k) const { return static_cast<std::size_t>((i * n_ + j) * n_ + k); }
    int n_;
    long long m_;
    std::vector<long long> cubic_, quad_, lin_;
    mutable IntVec xm_;
};

// Defect values over [0, m)^n in for_each_point order.
std::vector<long long> defect_table(const TrilinearLattice& L, const IntVec& a, int m)
{
    const DefectEvaluator target(L, a, m);
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(ipow(m, L.rank())));
    for_each_point(L.rank(), m, [&](const IntVec& x) {
        out.push_back(target.reduced(x));
        return true;
    });
    return out;
}

// Whether x -> b.x mod m reproduces the table; the first mismatching point is stored.
bool matches_table(const IntVec& b, const std::vector<long long>& table, int n, int m, IntVec* mismatch,
                   long long* visited)
{
    bool ok = true;
    std::size_t p = 0;
    for_each_point(n, m, [&](const IntVec& x) {
        long long lin = 0;
        for (int i = 0; i < n; ++i)
            lin += b[i] * x[i];
        if (visited)
            ++*visited;
        ok = mod(lin, m) == table[p++];
        if (!ok && mismatch)
            *mismatch = x;
        return ok;
    });
    return ok;
}

} // namespace

long long bhat_defect_target(const TrilinearLattice& L, const IntVec& a, const IntVec& x, int m)
{
    require_rank(L, a, "a");
    require_rank(L, x, "x");
    return DefectEvaluator(L, a, m)(x);
}

BhatResult solve_bhat(const TrilinearLattice& L, const IntVec& a, int m, std::uint64_t seed, int samples)
{
    if (m != 24 && m != 12 && m != 3)
        throw ArgumentError("modulus must be 24, 12 or 3, got " + std::to_string(m));
    require_rank(L, a, "a");
    const int n = L.rank();
    BhatResult r;
    r.modulus = m;
    if (m == 24 && n <= 8)
        r.hypothesis_warning = !is_characteristic(L, a);

    const DefectEvaluator target(L, a, m);
    IntVec cand(static_cast<std::size_t>(n));
    IntVec e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        e[i] = 1;
        cand[i] = target(e);
        e[i] = 0;
    }
    if (n <= 2 || ipow(m, n) <= kExhaustivePoints) {
        r.method = "exhaustive";
        IntVec bad;
        if (!matches_table(cand, defect_table(L, a, m), n, m, &bad, &r.points))
            r.counterexample = bad;
    } else {
        r.method = "sampled";
        std::mt19937_64 rng(seed);
        const int count = std::max(samples, 1000);
        for (int s = 0; s < count && !r.counterexample; ++s) {
            const IntVec x = random_vec(rng, n, 0, m - 1);
            long long lin = 0;
            for (int i = 0; i < n; ++i)
                lin += cand[i] * x[i];
            ++r.points;
            if (mod(lin, m) != target(x))
                r.counterexample = x;
        }
    }
    if (!r.counterexample)
        r.bhat = cand;
    return r;
}

int count_bhat_solutions(const TrilinearLattice& L, const IntVec& a, int m)
{
    require_rank(L, a, "a");
    const int n = L.rank();
    if (ipow(m, n) > kExhaustivePoints)
        throw ScaleError("candidate exhaustion limited to m^n <= 576");
    const std::vector<long long> table = defect_table(L, a, m);
    int count = 0;
    for_each_point(n, m, [&](const IntVec& b) {
        count += matches_table(b, table, n, m, nullptr, nullptr);
        return true;
    });
    return count;
}

Rat wfh_polynomial(const TrilinearLattice& L, const CubicFormSpec& s, const IntVec& x)
{
    const IntVec v = add(s.a, x);
    return L.eval_exact(v, v, v) - pairing(s.b, v);
}

Rat wfh_tilde_polynomial(const TrilinearLattice& L, const CubicFormSpec& s, const IntVec& x)
{
    const IntVec v = add(s.a, x);
    return Rat(4) * L.eval_exact(v, v, v) - Rat(6) * L.eval_exact(s.a, v, v) - pairing(s.b, v) +
           Rat(3) * L.eval_exact(s.a, s.a, v);
}

RelationReport check_cubic_relations(const TrilinearLattice& L, const CubicFormSpec& s, int samples,
                                     std::uint64_t seed, long long range)
{
    require_rank(L, s.a, "a");
    require_rank(L, s.b, "b");
    const int n = L.rank();
    RelationReport rep;

    const PVec x = var_vec(n, 0, n);
    const PVec zero = pscale(x, Rat(0));
    const MPoly rel = ftilde_symbolic(L, s, x, n) -
                      (f_symbolic(L, s, pscale(x, Rat(2)), n) + f_symbolic(L, s, zero, n)) * Rat(1, 2);
    rep.symbolic_pass = rel.is_zero();
    if (!rep.symbolic_pass) {
        rep.pass = false;
        rep.failure = "ftilde(x) - (f(2x) + f(0))/2 = " + rel.to_string();
    }

    if (n <= 8 && is_characteristic(L, s.a)) {
        const BhatResult b = solve_bhat(L, s.a, 24, seed);
        if (b.bhat) {
            bool match = true;
            for (int i = 0; i < n; ++i)
                match = match && mod(s.b[i] - (*b.bhat)[i], 24) == 0;
            rep.integrality_checked = match;
        }
    }

    const IntVec origin(static_cast<std::size_t>(n), 0);
    const Rat f0 = wfh_polynomial(L, s, origin), ft0 = wfh_tilde_polynomial(L, s, origin);
    std::mt19937_64 rng(seed);
    for (int i = 0; i <= samples && rep.pass; ++i) {
        const IntVec pt = i == 0 ? origin : random_vec(rng, n, -range, range);
        ++rep.samples;
        const Rat f2 = wfh_polynomial(L, s, scale(pt, 2));
        const Rat ft = wfh_tilde_polynomial(L, s, pt);
        if (ft != (f2 + f0) * Rat(1, 2)) {
            rep.pass = false;
            rep.witness = pt;
            rep.failure = "ftilde(x) != (f(2x) + f(0))/2";
        } else if (rep.integrality_checked && !((f2 - f0) * Rat(1, 48)).is_integer()) {
            rep.pass = false;
            rep.witness = pt;
            rep.failure = "(f(2x) - f(0))/48 not integral";
        } else if (rep.integrality_checked && !((ft - ft0) * Rat(1, 24)).is_integer()) {
            rep.pass = false;
            rep.witness = pt;
            rep.failure = "(ftilde(x) - ftilde(0))/24 not integral";
        }
    }
    return rep;
}

Rat CubicPolynomial::operator()(const TrilinearLattice& L, const IntVec& x) const
{
    Rat r = cubic * L.eval_exact(x, x, x) + constant;
    for (std::size_t i = 0; i < x.size(); ++i) {
        r += linear[i] * Rat(x[i]);
        for (std::size_t j = 0; j < x.size(); ++j)
            r += quadratic[i][j] * Rat(x[i]) * Rat(x[j]);
    }
    return r;
}

CubicPolynomial CubicPolynomial::pure(int rank, const Rat& cubic)
{
    const auto n = static_cast<std::size_t>(rank);
    return {cubic, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))), std::vector<Rat>(n, Rat(0)),
            Rat(0)};
}

CubicPolynomial CubicPolynomial::from_wfh(const TrilinearLattice& L, const CubicFormSpec& s)
{
    // (f(2x) - f(0))/48 = x^3/6 + a x^2/4 + a^2 x/8 - b(x)/24
    const int n = L.rank();
    CubicPolynomial h = pure(n, Rat(1, 6));
    for (int i = 0; i < n; ++i) {
        IntVec ei(static_cast<std::size_t>(n), 0);
        ei[i] = 1;
        h.linear[i] = L.eval_exact(s.a, s.a, ei) * Rat(1, 8) - Rat(s.b[i], 24);
        for (int j = 0; j < n; ++j) {
            IntVec ej(static_cast<std::size_t>(n), 0);
            ej[j] = 1;
            h.quadratic[i][j] = L.eval_exact(s.a, ei, ej) * Rat(1, 4);
        }
    }
    return h;
}

RefinementReport verify_refinement(const TrilinearLattice& L, const CubicPolynomial& h, int samples,
                                   std::uint64_t seed, long long range)
{
    const int n = L.rank();
    if (static_cast<int>(h.linear.size()) != n || static_cast<int>(h.quadratic.size()) != n)
        throw ArgumentError("cubic polynomial does not match the lattice rank");
    RefinementReport rep;

    const int vars = 3 * n;
    const PVec x = var_vec(n, 0, vars), y = var_vec(n, n, vars), z = var_vec(n, 2 * n, vars);
    auto H = [&](const PVec& v) { return h_symbolic(L, h, v, vars); };
    const MPoly alt = H(padd(padd(x, y), z)) - H(padd(x, y)) - H(padd(x, z)) - H(padd(y, z)) + H(x) + H(y) +
                      H(z) - H(pscale(x, Rat(0)));
    rep.symbolic_pass = (alt - trilinear(L, x, y, z, vars)).is_zero();
    rep.pass = rep.symbolic_pass;

    std::mt19937_64 rng(seed);
    const IntVec origin(static_cast<std::size_t>(n), 0);
    const Rat h0 = h(L, origin);
    for (int s = 0; s < samples; ++s) {
        const IntVec a = random_vec(rng, n, -range, range), b = random_vec(rng, n, -range, range),
                     c = random_vec(rng, n, -range, range);
        ++rep.samples;
        const Rat lhs = L.eval_exact(a, b, c);
        const Rat rhs = h(L, add(add(a, b), c)) - h(L, add(a, b)) - h(L, add(a, c)) - h(L, add(b, c)) + h(L, a) +
                        h(L, b) + h(L, c) - h0;
        if (lhs != rhs) {
            rep.pass = false;
            rep.witness = std::vector<IntVec>{a, b, c};
            break;
        }
    }
    return rep;
}

LatticeInput parse_lattice_input(const nlohmann::json& j)
{
    try {
        const int rank = j.at("rank").get<int>();
        auto nested = j.at("trilinear").get<std::vector<std::vector<std::vector<long long>>>>();
        TrilinearLattice L = TrilinearLattice::from_nested(nested);
        if (L.rank() != rank)
            throw ParseError("rank " + std::to_string(rank) + " does not match the trilinear tensor");
        CubicFormSpec spec;
        spec.a = j.at("a").get<IntVec>();
        spec.b = j.contains("b") ? j.at("b").get<IntVec>() : IntVec(static_cast<std::size_t>(rank), 0);
        if (static_cast<int>(spec.a.size()) != rank || static_cast<int>(spec.b.size()) != rank)
            throw ParseError("a and b must have length rank");
        const int modulus = j.value("modulus", 24);
        if (modulus != 24 && modulus != 12 && modulus != 3)
            throw ParseError("modulus must be 24, 12 or 3");
        return LatticeInput{std::move(L), std::move(spec), modulus, j.value("seed", std::uint64_t{0})};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("lattice file: ") + e.what());
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("lattice file: ") + e.what());
    }
}

} // namespace charmod
