#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include "charmod/anomaly/identity.hpp"
#include "charmod/anomaly/report.hpp"
#include "charmod/anomaly/twisted.hpp"
#include "charmod/anomaly/verify.hpp"
#include "charmod/charring/classes.hpp"
#include "charmod/cubiclattice/lattice.hpp"
#include "charmod/exactmath/errors.hpp"
#include "charmod/thetamod/e8.hpp"
#include "charmod/thetamod/transform.hpp"

namespace charmod::cli {

namespace {

using nlohmann::json;

struct Config {
    int order = 6;
    int cap = 12;
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = 1e-8;
};

// "a+bi", "bi", "a", "a-bi"
Complex parse_complex(const std::string& s)
{
    static const std::regex re(R"(^\s*([+-]?[0-9.eE]+)?\s*(?:([+-])\s*([0-9.eE]*)\s*i)?\s*$)");
    static const std::regex pure_im(R"(^\s*([+-]?[0-9.eE]*)\s*i\s*$)");
    std::smatch m;
    auto num = [&](const std::string& t) {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size())
            throw ArgumentError("bad number '" + t + "'");
        return v;
    };
    try {
        if (std::regex_match(s, m, pure_im)) {
            std::string t = m[1].str();
            if (t.empty() || t == "+")
                return {0.0, 1.0};
            if (t == "-")
                return {0.0, -1.0};
            return {0.0, num(t)};
        }
        if (std::regex_match(s, m, re) && (m[1].matched || m[2].matched)) {
            const double re_part = m[1].matched ? num(m[1].str()) : 0.0;
            double im = 0.0;
            if (m[2].matched) {
                im = m[3].str().empty() ? 1.0 : num(m[3].str());
                if (m[2].str() == "-")
                    im = -im;
            }
            return {re_part, im};
        }
    } catch (const std::logic_error&) {
    }
    throw ArgumentError("cannot parse complex number '" + s + "'");
}

std::string format_complex(Complex z)
{
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

class Sink {
public:
    Sink(const Config& cfg, std::ostream& out) : path_(cfg.output), out_(out) {}
    std::ostream& stream() { return buf_; }
    void flush()
    {
        if (path_.empty()) {
            out_ << buf_.str();
            return;
        }
        std::ofstream f(path_);
        if (!f)
            throw ArgumentError("cannot open output file '" + path_ + "'");
        f << buf_.str();
    }

private:
    std::string path_;
    std::ostream& out_;
    std::ostringstream buf_;
};

void require_format(const Config& cfg)
{
    if (cfg.format != "text" && cfg.format != "json")
        throw ArgumentError("--format must be text or json");
}

int run_verify(const std::vector<std::string>& ids_in, int threads, const Config& cfg, std::ostream& out)
{
    std::vector<IdentityId> ids;
    for (const std::string& raw : ids_in) {
        std::stringstream ss(raw);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "all") {
                const auto& all = all_identities();
                ids.insert(ids.end(), all.begin(), all.end());
            } else if (!item.empty()) {
                ids.push_back(parse_identity(item));
            }
        }
    }
    if (ids.empty())
        throw ArgumentError("no identity ids given");
    if (cfg.order < 2)
        throw ArgumentError("--order must be at least 2");
    const auto reports = verify_all(ids, cfg.order, threads > 0 ? threads : default_thread_count());
    Sink sink(cfg, out);
    bool all_pass = true;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(report_to_json(r));
        sink.stream() << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            sink.stream() << report_line(r) << "\n";
    }
    for (const auto& r : reports)
        all_pass = all_pass && r.pass;
    sink.flush();
    return all_pass ? kOk : kFail;
}

int run_expand(const std::string& cls, int dim, const std::string& route, const Config& cfg, std::ostream& out)
{
    if (cfg.cap < 0 || cfg.cap > 12)
        throw ArgumentError("--cap must be in 0..12");
    Sink sink(cfg, out);
    if (cls == "Ahat" || cls == "Lhat") {
        if (dim != 10 && dim != 12)
            throw ArgumentError("--dim must be 10 or 12");
        const GradedPoly p =
            multiplicative_class(cls == "Ahat" ? RootFunction::Ahat : RootFunction::Lhat, dim, std::min(cfg.cap, dim));
        if (cfg.format == "json")
            sink.stream() << json{{"class", cls}, {"dim", dim}, {"cap", p.cap()}, {"value", p.to_string()}}.dump(2)
                          << "\n";
        else
            sink.stream() << cls << " = " << p.to_string() << "\n";
        sink.flush();
        return kOk;
    }
    const TwistedKind kind = parse_twisted_kind(cls);
    if (route != "adams" && route != "theta")
        throw ArgumentError("--route must be adams or theta");
    if (cfg.order < 2)
        throw ArgumentError("--order must be at least 2");
    const CohomQSeries s = truncate_degree(
        build_twisted_class(kind, symbolic_params(), cfg.order, route == "adams" ? Route::Adams : Route::ThetaRatio),
        cfg.cap);
    if (cfg.format == "json") {
        json coeffs = json::array();
        for (const auto& [k, c] : s.terms())
            coeffs.push_back({{"q", CohomQSeries::exponent_string(k)}, {"value", c.to_string()}});
        sink.stream() << json{{"class", cls}, {"order", cfg.order}, {"cap", cfg.cap}, {"coefficients", coeffs}}.dump(2)
                      << "\n";
    } else {
        sink.stream() << cls << " (order " << cfg.order << ", cap " << cfg.cap << ")\n";
        for (const auto& [k, c] : s.terms())
            sink.stream() << "q^" << CohomQSeries::exponent_string(k) << ": " << c.to_string() << "\n";
    }
    sink.flush();
    return kOk;
}

std::string vec_string(const IntVec& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

int run_lattice(const std::string& file, int samples, const Config& cfg, std::ostream& out)
{
    std::ifstream in(file);
    if (!in)
        throw ArgumentError("cannot read lattice file '" + file + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const LatticeInput input = parse_lattice_input(j);
    const std::uint64_t seed = cfg.seed_set ? cfg.seed : input.seed;
    const TrilinearLattice& L = input.lattice;

    // "true", "false" or "not tested" (the check is exhaustive and only runs up to rank 8)
    const std::string characteristic =
        L.rank() <= 8 ? (is_characteristic(L, input.spec.a) ? "true" : "false") : "not tested";
    const BhatResult b = solve_bhat(L, input.spec.a, input.modulus, seed);
    const RelationReport rel = check_cubic_relations(L, input.spec, samples, seed);
    const RefinementReport ref = verify_refinement(L, CubicPolynomial::from_wfh(L, input.spec), samples, seed);
    const bool pass = b.bhat.has_value() && rel.pass && ref.pass;

    Sink sink(cfg, out);
    if (cfg.format == "json") {
        json r{{"rank", L.rank()},
               {"modulus", input.modulus},
               {"seed", seed},
               {"characteristic", characteristic == "not tested" ? json(nullptr) : json(characteristic == "true")},
               {"bhat", b.bhat ? json(*b.bhat) : json(nullptr)},
               {"counterexample", b.counterexample ? json(*b.counterexample) : json(nullptr)},
               {"hypothesis_warning", b.hypothesis_warning},
               {"method", b.method},
               {"points", b.points},
               {"relations", {{"pass", rel.pass},
                              {"symbolic", rel.symbolic_pass},
                              {"integrality_checked", rel.integrality_checked},
                              {"samples", rel.samples},
                              {"failure", rel.failure},
                              {"witness", rel.witness ? json(*rel.witness) : json(nullptr)}}},
               {"refinement", {{"pass", ref.pass}, {"symbolic", ref.symbolic_pass}, {"samples", ref.samples}}},
               {"status", pass ? "pass" : "fail"}};
        sink.stream() << r.dump(2) << "\n";
    } else {
        auto& os = sink.stream();
        os << "characteristic: " << characteristic << "\n";
        if (b.bhat)
            os << "bhat (mod " << input.modulus << "): " << vec_string(*b.bhat) << " [" << b.method << ", " << b.points
               << " points]\n";
        else
            os << "bhat (mod " << input.modulus << "): no solution, counterexample x = "
               << vec_string(*b.counterexample) << "\n";
        if (b.hypothesis_warning)
            os << "warning: a is not characteristic; the mod 24 statement does not apply\n";
        os << "relations: " << (rel.pass ? "pass" : "fail") << " (symbolic " << (rel.symbolic_pass ? "ok" : "FAILED")
           << ", integrality " << (rel.integrality_checked ? "checked" : "not applicable") << ", " << rel.samples
           << " samples)\n";
        if (!rel.pass)
            os << "  " << rel.failure << (rel.witness ? " at x = " + vec_string(*rel.witness) : "") << "\n";
        os << "refinement: " << (ref.pass ? "pass" : "fail") << " (" << ref.samples << " samples)\n";
    }
    sink.flush();
    return pass ? kOk : kFail;
}

int run_e8(const Config& cfg, std::ostream& out)
{
    if (cfg.order < 1 || cfg.order > 12)
        throw ArgumentError("--order must be in 1..12 for the lattice enumeration");
    const int N = cfg.order;
    const RatSeries lattice = e8_lattice_theta(N);
    const E8Roots zero{GradedPoly(), GradedPoly(), GradedPoly()};
    const CohomQSeries combo = e8_theta_combination(zero, N);
    const CohomQSeries character = e8_character(zero, N);
    const RatSeries e4 = eisenstein(4, N);
    bool equal = true;
    json rows = json::array();
    for (int n = 0; n <= N; ++n) {
        const Rat l = lattice.at(n), t = combo.at(n).constant_term(), e = e4.at(n);
        equal = equal && l == t && t == e;
        rows.push_back({{"n", n},
                        {"lattice", l.to_string()},
                        {"theta", t.to_string()},
                        {"E4", e.to_string()},
                        {"character", character.at(n).constant_term().to_string()}});
    }
    Sink sink(cfg, out);
    if (cfg.format == "json") {
        sink.stream() << json{{"order", N}, {"rows", rows}, {"equal", equal}}.dump(2) << "\n";
    } else {
        auto& os = sink.stream();
        os << std::setw(3) << "n" << std::setw(14) << "lattice" << std::setw(14) << "theta" << std::setw(14) << "E4"
           << std::setw(16) << "character" << "\n";
        for (const auto& r : rows)
            os << std::setw(3) << r["n"].get<int>() << std::setw(14) << r["lattice"].get<std::string>()
               << std::setw(14) << r["theta"].get<std::string>() << std::setw(14) << r["E4"].get<std::string>()
               << std::setw(16) << r["character"].get<std::string>() << "\n";
        os << "equal: " << (equal ? "true" : "false") << "\n";
    }
    sink.flush();
    return equal ? kOk : kFail;
}

int run_theta_check(const std::string& kind, const std::string& tau_s, const std::string& v_s, int terms,
                    const Config& cfg, std::ostream& out)
{
    const Complex tau = parse_complex(tau_s), v = parse_complex(v_s);
    std::vector<TransformKind> kinds;
    if (kind == "all")
        kinds = {TransformKind::theta, TransformKind::theta1, TransformKind::theta2, TransformKind::theta3,
                 TransformKind::E2};
    else
        kinds = {parse_transform_kind(kind)};
    std::vector<TransformReport> reps;
    for (TransformKind k : kinds)
        reps.push_back(numeric_transform_check(k, v, tau, terms, cfg.tol));
    bool pass = true;
    Sink sink(cfg, out);
    json arr = json::array();
    for (const auto& r : reps) {
        pass = pass && r.pass;
        if (cfg.format == "json") {
            arr.push_back({{"kind", std::string(transform_kind_name(r.kind))},
                           {"tau", format_complex(tau)},
                           {"v", format_complex(v)},
                           {"residual_shift", r.residual_shift},
                           {"residual_invert", r.residual_invert},
                           {"tail_bound", r.tail_bound},
                           {"terms", r.terms},
                           {"tol", r.tol},
                           {"status", r.pass ? "pass" : "fail"}});
        } else {
            sink.stream() << transform_kind_name(r.kind) << ": " << (r.pass ? "PASS" : "FAIL")
                          << std::setprecision(3) << std::scientific << " shift residual " << r.residual_shift
                          << ", inversion residual " << r.residual_invert << ", tail bound " << r.tail_bound
                          << std::defaultfloat << " (" << r.terms << " terms)\n";
        }
    }
    if (cfg.format == "json")
        sink.stream() << arr.dump(2) << "\n";
    sink.flush();
    return pass ? kOk : kFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of anomaly cancellation identities, cubic forms and E8 data", "charmod"};
    app.require_subcommand(1);
    Config cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output, "write the report to this file");
    };

    std::vector<std::string> ids;
    int threads = 0;
    auto* verify = app.add_subcommand("verify", "verify identities from the registry");
    verify->add_option("--id", ids, "identity ids, comma separated, or all")->required();
    verify->add_option("--order", cfg.order, "q-order N");
    verify->add_option("--threads", threads, "worker threads (default: CHARMOD_THREADS or all cores)");
    add_common(verify);

    std::string cls, route = "adams";
    int dim = 12;
    auto* expand = app.add_subcommand("expand", "print a characteristic class or twisted Witten class");
    expand->add_option("--class", cls, "Ahat, Lhat, W, Wc, Qc, Rc, QL, RL or LWitten")->required();
    expand->add_option("--cap", cfg.cap, "degree cap");
    expand->add_option("--order", cfg.order, "q-order N");
    expand->add_option("--dim", dim, "manifold dimension for Ahat/Lhat (10 or 12)");
    expand->add_option("--route", route, "adams or theta");
    add_common(expand);

    std::string file;
    int samples = 1000;
    auto* lattice = app.add_subcommand("lattice", "cubic form checks on a lattice file");
    lattice->add_option("--file", file, "lattice JSON")->required();
    lattice->add_option("--samples", samples, "random samples per relation");
    lattice->add_option("--seed", cfg.seed, "overrides the seed in the file")->each([&](const std::string&) {
        cfg.seed_set = true;
    });
    add_common(lattice);

    auto* e8 = app.add_subcommand("e8", "E8 lattice theta against theta functions and the character");
    e8->add_option("--order", cfg.order, "q-order N");
    add_common(e8);

    std::string kind = "all", tau = "2i", v = "0.3+0.1i";
    int terms = 0;
    auto* theta = app.add_subcommand("theta-check", "numeric modular transformation laws");
    theta->add_option("--kind", kind, "theta, theta1, theta2, theta3, E2 or all");
    theta->add_option("--tau", tau, "a+bi with b > 0");
    theta->add_option("--v", v, "x+yi");
    theta->add_option("--tol", cfg.tol, "residual tolerance");
    theta->add_option("--terms", terms, "product terms (0 = automatic)");
    add_common(theta);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        require_format(cfg);
        if (*verify)
            return run_verify(ids, threads, cfg, out);
        if (*expand)
            return run_expand(cls, dim, route, cfg, out);
        if (*lattice)
            return run_lattice(file, samples, cfg, out);
        if (*e8)
            return run_e8(cfg, out);
        if (*theta)
            return run_theta_check(kind, tau, v, terms, cfg, out);
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
        return kPrecision;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SpecError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ScaleError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "internal error: no subcommand ran\n";
    return kInternal;
}

} // namespace charmod::cli
