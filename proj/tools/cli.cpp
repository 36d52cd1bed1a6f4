#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edsum/density.hpp"
#include "edsum/errors.hpp"
#include "edsum/verify.hpp"
#include "json_writer.hpp"

namespace edsum::cli {

namespace {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

struct RunConfig {
    std::int64_t d_K = -8;
    std::int64_t conductor = 1;
    std::string omega1;  // "re,im"; empty selects the order lattice
    std::string omega2;
    PrecisionPolicy precision;
    std::uint64_t seed = 20240601;
    std::string max_prime = "0";
    std::string format = "text";
    unsigned threads = 1;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
        throw UsageError(std::string(what) + " must be a pair \"x,y\", got \"" + s + "\"");
    }
    return {s.substr(0, comma), s.substr(comma + 1)};
}

bigint parse_int(const std::string& s, const char* what) {
    try {
        std::size_t start = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.empty() || s.find_first_not_of("0123456789", start) != std::string::npos || start == s.size()) {
            throw std::invalid_argument(s);
        }
        return bigint(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not an integer: \"" + s + "\"");
    }
}

OrderElem parse_elem(const std::string& s, const QuadOrder& order, const char* what) {
    const auto [u, v] = split_pair(s, what);
    return {order, parse_int(u, what), parse_int(v, what)};
}

cplx parse_complex(const std::string& s, const char* what) {
    const auto [re, im] = split_pair(s, what);
    try {
        std::size_t n1 = 0, n2 = 0;
        const double x = std::stod(re, &n1);
        const double y = std::stod(im, &n2);
        if (n1 != re.size() || n2 != im.size()) throw std::invalid_argument(s);
        return {x, y};
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not a complex pair: \"" + s + "\"");
    }
}

SumContext make_context(const RunConfig& cfg, const QuadOrder& order) {
    if (cfg.omega1.empty() != cfg.omega2.empty()) {
        throw UsageError("--omega1 and --omega2 must be given together");
    }
    if (cfg.omega1.empty()) return SumContext::of_order(order, cfg.precision, cfg.threads);
    Lattice L(parse_complex(cfg.omega1, "--omega1"), parse_complex(cfg.omega2, "--omega2"), cfg.precision);
    return SumContext(order, std::move(L), cfg.threads);
}

json int_json(const bigint& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json elem_json(const OrderElem& x) { return json::array({int_json(x.u()), int_json(x.v())}); }

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt17(cplx z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();  // drop the sign of -0
    return fmt17(z.real()) + (std::signbit(im) ? " - " : " + ") + fmt17(std::abs(im)) + "i";
}

json config_json(const RunConfig& cfg, const QuadOrder& order, const std::string& command) {
    json c = {
        {"command", command},
        {"d_K", order.d_K()},
        {"conductor", order.conductor()},
        {"d_L", order.d_L()},
        {"zeta_radius", cfg.precision.zeta_radius},
        {"q_terms", cfg.precision.q_terms},
        {"tol", cfg.precision.tol},
        {"seed", cfg.seed},
        {"threads", cfg.threads},
    };
    if (cfg.omega1.empty()) {
        c["lattice"] = "order";
    } else {
        c["lattice"] = {{"omega1", complex_json(parse_complex(cfg.omega1, "--omega1"))},
                        {"omega2", complex_json(parse_complex(cfg.omega2, "--omega2"))}};
    }
    return c;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    // -h would clash with --h on `sum`.
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--dk", cfg.d_K, "fundamental discriminant d_K < 0")->capture_default_str();
    cmd->add_option("-f,--conductor", cfg.conductor, "conductor f >= 1")->capture_default_str();
    cmd->add_option("--omega1", cfg.omega1, "custom lattice basis vector \"re,im\"");
    cmd->add_option("--omega2", cfg.omega2, "custom lattice basis vector \"re,im\"");
    cmd->add_option("--zeta-radius", cfg.precision.zeta_radius, "lattice shells summed in zeta")
        ->envname("EDSUM_ZETA_RADIUS")
        ->capture_default_str();
    cmd->add_option("--q-terms", cfg.precision.q_terms, "terms in q-expansions")
        ->envname("EDSUM_Q_TERMS")
        ->capture_default_str();
    cmd->add_option("--tol", cfg.precision.tol, "lattice-point tolerance")->envname("EDSUM_TOL")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    cmd->add_option("--max-prime", cfg.max_prime, "upper bound on searched primes (0: none)")->capture_default_str();
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "worker threads for coset summation")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    cmd->add_flag("--timing", cfg.timing, "report wall-clock times");
}

int cmd_sum(const RunConfig& cfg, const std::string& h_str, const std::string& k_str, std::ostream& out) {
    const QuadOrder order(cfg.d_K, cfg.conductor);
    const OrderElem h = parse_elem(h_str, order, "--h");
    const OrderElem k = parse_elem(k_str, order, "--k");
    const SumContext ctx = make_context(cfg, order);

    const auto start = clock_type::now();
    const double dn = d_norm(h, k, ctx);
    const cplx ds = d_sum(h, k, ctx);
    const double wall = seconds_since(start);
    const cplx e2 = e2_zero(ctx.lattice());
    const bigint count = k.norm();

    if (cfg.format == "json") {
        json rec = {{"h", elem_json(h)},       {"k", elem_json(k)},     {"d_sum", complex_json(ds)},
                    {"d_norm", dn},            {"e2_zero", complex_json(e2)}, {"coset_count", int_json(count)}};
        if (cfg.timing) rec["wall_seconds"] = wall;
        const json doc = {{"config", config_json(cfg, order, "sum")},
                          {"records", json::array({rec})},
                          {"summary", {{"status", "ok"}}}};
        out << dump_json(doc);
    } else if (cfg.format == "csv") {
        out << "h_u,h_v,k_u,k_v,d_sum_re,d_sum_im,d_norm,e2_re,e2_im,coset_count" << (cfg.timing ? ",wall_seconds" : "")
            << "\n";
        out << h.u() << ',' << h.v() << ',' << k.u() << ',' << k.v() << ',' << fmt17(ds.real()) << ','
            << fmt17(ds.imag()) << ',' << fmt17(dn) << ',' << fmt17(e2.real()) << ',' << fmt17(e2.imag()) << ','
            << count;
        if (cfg.timing) out << ',' << fmt17(wall);
        out << "\n";
    } else {
        out << "D_L(h, k)    = " << fmt17(ds) << "\n";
        out << "D~_L(h, k)   = " << fmt17(dn) << "\n";
        out << "E_2(0)       = " << fmt17(e2) << "\n";
        out << "coset count  = " << count << "\n";
        if (cfg.timing) out << "wall seconds = " << fmt17(wall) << "\n";
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int samples, std::uint64_t budget, std::ostream& out) {
    const QuadOrder order(cfg.d_K, cfg.conductor);
    const SumContext ctx = make_context(cfg, order);
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.samples = samples;
    opts.lemma_budget = budget;

    const auto start = clock_type::now();
    const std::vector<CheckResult> results = run_suite(suite, ctx, opts);
    const double wall = seconds_since(start);
    std::size_t failures = 0;
    for (const CheckResult& r : results) failures += r.pass ? 0 : 1;

    if (cfg.format == "json") {
        json records = json::array();
        for (const CheckResult& r : results) {
            records.push_back(
                {{"suite", r.suite}, {"check", r.name}, {"residual", r.residual}, {"bound", r.bound}, {"pass", r.pass}});
        }
        json summary = {{"checks", results.size()}, {"failures", failures}, {"passed", failures == 0}};
        if (cfg.timing) summary["wall_seconds"] = wall;
        const json doc = {{"config", config_json(cfg, order, "verify")}, {"records", records}, {"summary", summary}};
        out << dump_json(doc);
    } else if (cfg.format == "csv") {
        out << "suite,check,residual,bound,pass\n";
        for (const CheckResult& r : results) {
            out << r.suite << ',' << r.name << ',' << fmt17(r.residual) << ',' << fmt17(r.bound) << ','
                << (r.pass ? "true" : "false") << "\n";
        }
    } else {
        for (const CheckResult& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << "  residual " << fmt17(r.residual)
                << " <= " << fmt17(r.bound) << "\n";
        }
        out << results.size() - failures << "/" << results.size() << " checks passed";
        if (cfg.timing) out << " in " << fmt17(wall) << " s";
        out << "\n";
    }
    return failures == 0 ? ok : verification_failed;
}

int cmd_approximate(const RunConfig& cfg, const std::string& a_str, const std::string& b_str, std::size_t steps,
                    std::ostream& out) {
    const QuadOrder order(cfg.d_K, cfg.conductor);
    const Target target(parse_int(a_str, "--a"), parse_int(b_str, "--b"), order);
    SearchLimits limits;
    limits.max_prime = parse_int(cfg.max_prime, "--max-prime");

    struct Row {
        ApproxStep step;
        double bound;
        double wall;
    };
    std::vector<Row> rows;
    const std::vector<bigint> primes = find_primes(target, steps, limits);
    for (const bigint& p : primes) {
        const auto start = clock_type::now();
        ApproxStep s = construct(target, p);
        const double bound = static_cast<double>(rational(2 + target.b, target.b * p));
        rows.push_back({std::move(s), bound, seconds_since(start)});
        if (rows.back().step.err_bound > bound) {
            throw error(errc::construction, "|dtilde - 2a/b| exceeds (2/b + 1)/p");
        }
    }
    const double limit = static_cast<double>(2 * target.value());

    if (cfg.format == "json") {
        json records = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ApproxStep& s = rows[i].step;
            json rec = {{"index", i},
                        {"p", int_json(s.p)},
                        {"e", int_json(s.e)},
                        {"ell", int_json(s.ell)},
                        {"k", int_json(s.k)},
                        {"c3", elem_json(s.A3.c)},
                        {"dtilde", s.dtilde},
                        {"abs_err", s.err_bound},
                        {"bound", rows[i].bound}};
            if (cfg.timing) rec["wall_seconds"] = rows[i].wall;
            records.push_back(std::move(rec));
        }
        json cfg_json = config_json(cfg, order, "approximate");
        cfg_json["a"] = int_json(target.a);
        cfg_json["b"] = int_json(target.b);
        cfg_json["steps"] = steps;
        const json summary = {{"target", limit}, {"steps", rows.size()}, {"all_within_bound", true}};
        out << dump_json({{"config", cfg_json}, {"records", records}, {"summary", summary}});
    } else if (cfg.format == "csv") {
        out << "index,p,e,ell,k,dtilde,abs_err,bound" << (cfg.timing ? ",wall_seconds" : "") << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ApproxStep& s = rows[i].step;
            out << i << ',' << s.p << ',' << s.e << ',' << s.ell << ',' << s.k << ',' << fmt17(s.dtilde) << ','
                << fmt17(s.err_bound) << ',' << fmt17(rows[i].bound);
            if (cfg.timing) out << ',' << fmt17(rows[i].wall);
            out << "\n";
        }
    } else {
        out << "target 2a/b = " << fmt17(limit) << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const ApproxStep& s = rows[i].step;
            out << "p = " << s.p << "  e = " << s.e << "  dtilde = " << fmt17(s.dtilde)
                << "  |err| = " << fmt17(s.err_bound) << "  bound = " << fmt17(rows[i].bound);
            if (cfg.timing) out << "  wall = " << fmt17(rows[i].wall) << " s";
            out << "\n";
        }
    }
    return ok;
}

int exit_for(errc code) {
    switch (code) {
    case errc::precision:
    case errc::construction:
    case errc::generation_failure:
    case errc::search_limit:
    case errc::pole:
        return internal_error;
    default:
        return usage_error;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Elliptic Dedekind sums over imaginary quadratic orders", "edsum"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::string h_str, k_str;
    CLI::App* sum = app.add_subcommand("sum", "evaluate D_L(h, k) and its normalisation");
    add_common_options(sum, cfg);
    sum->add_option("--h", h_str, "numerator h as theta-coordinates \"u,v\"")->required();
    sum->add_option("--k", k_str, "modulus k as theta-coordinates \"u,v\"")->required();

    std::string suite = "all";
    int samples = 50;
    std::uint64_t budget = 300;
    CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
    add_common_options(verify, cfg);
    verify->add_option("--suite", suite, "phi, lemma, e1, cosets or all")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    verify->add_option("--samples", samples, "random samples per check")->check(CLI::Range(1, 100000));
    verify->add_option("--budget", budget, "norm budget for c3 in the lemma suite")->capture_default_str();

    std::string a_str, b_str;
    std::size_t steps = 5;
    CLI::App* approx = app.add_subcommand("approximate", "approximate 2a/b by normalised sums");
    add_common_options(approx, cfg);
    approx->add_option("--a", a_str, "numerator a")->required();
    approx->add_option("--b", b_str, "denominator b")->required();
    approx->add_option("--steps", steps, "number of primes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (*sum) return cmd_sum(cfg, h_str, k_str, out);
        if (*verify) return cmd_verify(cfg, suite, samples, budget, out);
        return cmd_approximate(cfg, a_str, b_str, steps, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const error& e) {
        const std::string_view code = to_string(e.code());
        err << "error: " << code;
        if (code != e.what()) err << ": " << e.what();
        err << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return internal_error;
    }
}

}  // namespace edsum::cli
