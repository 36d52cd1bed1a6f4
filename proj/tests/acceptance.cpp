// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "edsum/density.hpp"
#include "edsum/errors.hpp"
#include "edsum/number_theory.hpp"
#include "edsum/verify.hpp"
#include "oracles/lattice_sums.hpp"

using namespace edsum;

namespace {

struct Report {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct TargetCase {
    int a, b;
    std::int64_t d;
};

const std::vector<TargetCase> construction_targets{{1, 3, -8}, {2, 5, -8}, {7, 9, -8},
                                                   {1, 3, -20}, {2, 5, -20}, {7, 9, -20}};

Report lemma_vs_brute_force() {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    const SumContext ctx = SumContext::of_order(QuadOrder(-8));
    VerifyOptions opts;
    opts.lemma_triples = 20;
    opts.lemma_budget = 300;
    const std::vector<CheckResult> checks = verify_lemma(ctx, opts);
    double worst = 0.0;
    for (const CheckResult& c : checks) {
        r.expect(c.pass, c.name + " residual " + fmt("%.3g", c.residual));
        worst = std::max(worst, c.residual / c.bound);
    }
    r.expect(checks.size() >= 20, "fewer than 20 triples");
    const double secs = elapsed(t0);
    r.expect(secs <= 120.0, "runtime " + fmt("%.1f s", secs));
    r.note(std::to_string(checks.size()) + " triples, worst residual/bound " + fmt("%.2e", worst) + ", " +
           fmt("%.2f s", secs));
    return r;
}

Report homomorphism() {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    const SumContext ctx = SumContext::of_order(QuadOrder(-8));
    VerifyOptions opts;
    opts.samples = 50;
    std::size_t pairs = 0;
    double worst = 0.0;
    for (const CheckResult& c : verify_phi(ctx, opts)) {
        r.expect(c.pass, c.name + " residual " + fmt("%.3g", c.residual));
        if (c.name.rfind("homomorphism", 0) == 0) ++pairs;
        worst = std::max(worst, c.residual / c.bound);
    }
    r.expect(pairs == 50, "expected 50 pairs");
    const double secs = elapsed(t0);
    r.expect(secs <= 60.0, "runtime " + fmt("%.1f s", secs));
    r.note(std::to_string(pairs) + " pairs, worst residual/bound " + fmt("%.2e", worst) + ", " + fmt("%.2f s", secs));
    return r;
}

Report triviality() {
    Report r;
    for (std::int64_t d : {-4, -3}) {
        const QuadOrder o(d);
        const SumContext ctx = SumContext::of_order(o);
        const double e2 = std::abs(e2_zero(ctx.lattice()));
        r.expect(e2 <= 1e-10, "|E_2(0)| = " + fmt("%.3g", e2) + " for d = " + std::to_string(d));
        std::mt19937_64 rng(static_cast<std::uint64_t>(1000 - d));
        std::uniform_int_distribution<int> len(1, 4);
        double worst = 0.0;
        int words = 0;
        while (words < 50) {
            const Mat2 w = random_elementary_word(rng, o, len(rng), 2);
            if (max_entry_norm(w) > 100 || w.c.is_zero()) continue;
            ++words;
            worst = std::max(worst, std::abs(phi(w, ctx)));
        }
        r.expect(worst <= 1e-7, "max |Phi| = " + fmt("%.3g", worst) + " for d = " + std::to_string(d));
        r.note("d = " + std::to_string(d) + ": |E_2(0)| " + fmt("%.1e", e2) + ", max |Phi| over 50 words " +
               fmt("%.1e", worst));
    }
    return r;
}

// Re-checks every exact invariant of a step independently of construct().
void check_step(Report& r, const Target& t, const ApproxStep& s, const std::string& label) {
    const QuadOrder& o = t.order;
    const bigint d = t.d();
    const bigint& p = s.p;
    const OrderElem one(o, 1);
    r.expect(s.A1.det() == one && s.A2.det() == one && s.A3.det() == one, label + " det = 1");
    r.expect(s.A1 == s.A2 * s.A3, label + " A1 = A2 A3");
    r.expect(s.e * t.b == t.a * p - 1, label + " e b = a p - 1");
    r.expect(mod(s.k * (s.k + s.e) * d, p) == 1, label + " k (k + e) d = 1 mod p");
    r.expect(mod((2 * s.ell - d * s.e) * (2 * s.ell - d * s.e) - (d * d * s.e * s.e + 4 * d), p) == 0,
             label + " (2l - de)^2 = d^2 e^2 + 4d mod p");
    r.expect(mod(s.ell * s.k, p) == 1, label + " l k = 1 mod p");
}

Report exact_construction() {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    for (const TargetCase& tc : construction_targets) {
        const std::string label = "(" + std::to_string(tc.a) + "," + std::to_string(tc.b) + ",d=" +
                                  std::to_string(tc.d) + ")";
        try {
            const Target t(tc.a, tc.b, QuadOrder(tc.d));
            std::string primes;
            for (const bigint& p : find_primes(t, 3)) {
                check_step(r, t, construct(t, p), label + " p=" + p.str());
                primes += " " + p.str();
            }
            r.note(label + " primes" + primes);
        } catch (const error& e) {
            r.expect(false, label + " " + std::string(to_string(e.code())) + ": " + e.what());
        }
    }
    const double secs = elapsed(t0);
    r.expect(secs <= 30.0, "runtime " + fmt("%.1f s", secs));
    return r;
}

Report convergence() {
    Report r;
    for (const TargetCase& tc : construction_targets) {
        const std::string label = "(" + std::to_string(tc.a) + "," + std::to_string(tc.b) + ",d=" +
                                  std::to_string(tc.d) + ")";
        try {
            const Target t(tc.a, tc.b, QuadOrder(tc.d));
            double worst = 0.0;
            for (const bigint& p : find_primes(t, 3)) {
                const ApproxStep s = construct(t, p);
                const rational err = abs(s.dtilde_exact - 2 * t.value());
                const rational bound(2 + t.b, t.b * p);
                r.expect(err <= bound, label + " p=" + p.str() + " error above (2/b+1)/p");
                worst = std::max(worst, static_cast<double>(err / bound));
            }
            r.note(label + " worst error/bound " + fmt("%.3f", worst));
        } catch (const error& e) {
            r.expect(false, label + " " + std::string(to_string(e.code())) + ": " + e.what());
        }
    }
    const Target t(1, 3, QuadOrder(-8));
    const bigint p = find_prime(t, 0);
    const ApproxStep s = construct(t, p);
    r.expect(p == 2689, "first prime for (1,3,d=-8) is " + p.str());
    r.expect(std::abs(s.err_bound - 2.48e-4) <= 1e-6, "|err| = " + fmt("%.6e", s.err_bound));
    r.note("(1,3,d=-8) p = " + p.str() + ", |err| = " + fmt("%.6e", s.err_bound));
    return r;
}

Report analytic_layer() {
    Report r;
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::uniform_int_distribution<int> shift(-6, 6);
    for (const QuadOrder& o : {QuadOrder(-8), QuadOrder(-7)}) {
        const Lattice L = Lattice::of_order(o);
        double per = 0.0, odd = 0.0;
        for (int i = 0; i < 100; ++i) {
            cplx z = L.point(u(rng), u(rng));
            while (std::abs(z) < 0.05) z = L.point(u(rng), u(rng));
            const cplx w = L.point(shift(rng), shift(rng));
            const cplx v = e1(z, L);
            per = std::max(per, std::abs(e1(z + w, L) - v) / (1.0 + std::abs(v)));
            odd = std::max(odd, std::abs(e1(-z, L) + v));
        }
        const auto [eta1, eta2] = quasi_periods(L);
        const double leg = std::abs(eta1 * L.omega2() - eta2 * L.omega1() - cplx(0.0, 2.0 * std::numbers::pi));
        const std::string d = "d=" + std::to_string(o.d_L());
        r.expect(per <= 1e-8, d + " periodicity " + fmt("%.3g", per));
        r.expect(odd <= 1e-8, d + " oddness " + fmt("%.3g", odd));
        r.expect(leg <= 1e-8, d + " Legendre " + fmt("%.3g", leg));
        r.note(d + ": periodicity " + fmt("%.1e", per) + ", oddness " + fmt("%.1e", odd) + ", Legendre " +
               fmt("%.1e", leg));
    }
    for (double D : {2.0, 5.0}) {
        const Lattice L(1.0, cplx(0.0, std::sqrt(D)));
        const cplx ref = oracle::hecke_e2(L.omega1(), L.omega2(), 2000.0, {0.5, 0.25, 0.125, 0.0625});
        const double diff = std::abs(e2_zero(L) - ref);
        r.expect(diff <= 1e-4, "E_2(0) vs Hecke limit on Z + Z sqrt(-" + fmt("%.0f", D) + "): " + fmt("%.3g", diff));
        r.note("E_2(0) on Z + Z sqrt(-" + fmt("%.0f", D) + ") = " + fmt("%.10f", e2_zero(L).real()) +
               ", Hecke limit differs by " + fmt("%.1e", diff));
    }
    const cplx j = j_invariant(Lattice(1.0, cplx(0.0, 1.0)));
    const double rel = std::abs(j - 1728.0) / 1728.0;
    r.expect(rel <= 1e-6, "j(Z[i]) relative error " + fmt("%.3g", rel));
    r.note("j(Z[i]) relative error " + fmt("%.1e", rel));
    return r;
}

Report coset_layer() {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.samples = 50;
    opts.coset_norm_bound = 200;
    for (const QuadOrder& o : {QuadOrder(-8), QuadOrder(-7), QuadOrder(-20)}) {
        std::size_t n = 0;
        for (const CheckResult& c : verify_cosets(SumContext::of_order(o), opts)) {
            r.expect(c.pass, "d=" + std::to_string(o.d_L()) + " " + c.name);
            ++n;
        }
        r.note("d=" + std::to_string(o.d_L()) + ": " + std::to_string(n / 2) + " moduli");
    }
    const double secs = elapsed(t0);
    r.expect(secs <= 10.0, "runtime " + fmt("%.1f s", secs));
    r.note(fmt("%.2f s", secs));
    return r;
}

Report normalization() {
    Report r;
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> coord(-10, 10);
    std::uniform_real_distribution<double> scale(-2.0, 2.0);
    const std::vector<std::pair<QuadOrder, Lattice>> bases{
        {QuadOrder(-8), Lattice(1.0, cplx(0.0, std::sqrt(2.0)))},
        {QuadOrder(-7), Lattice(1.0, cplx(0.5, std::sqrt(7.0) / 2))}};
    for (const auto& [o, L] : bases) {
        const SumContext ctx(o, L);
        double worst_im = 0.0, worst_scale = 0.0;
        int pairs = 0;
        while (pairs < 20) {
            const OrderElem k(o, coord(rng), coord(rng));
            const OrderElem h(o, coord(rng), coord(rng));
            const cplx c(scale(rng), scale(rng));
            if (k.is_zero() || k.norm() > 150 || std::abs(c) < 0.1) continue;
            ++pairs;
            const cplx raw = normalize(d_sum(h, k, ctx), ctx);
            const SumContext scaled = ctx.with_lattice(L.scaled(c));
            const cplx raw_scaled = normalize(d_sum(h, k, scaled), scaled);
            worst_im = std::max(worst_im, std::abs(raw.imag()));
            worst_scale = std::max(worst_scale, std::abs(raw_scaled - raw));
        }
        const std::string d = "d=" + std::to_string(o.d_L());
        r.expect(worst_im <= 1e-6, d + " |Im| " + fmt("%.3g", worst_im));
        r.expect(worst_scale <= 1e-8, d + " scaling " + fmt("%.3g", worst_scale));
        r.note(d + ": max |Im| " + fmt("%.1e", worst_im) + ", max scaling change " + fmt("%.1e", worst_scale));
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
        {"1 lemma closed form vs brute-force sums", lemma_vs_brute_force},
        {"2 homomorphism suite", homomorphism},
        {"3 triviality on Z[i] and Z[rho]", triviality},
        {"4 exact construction invariants", exact_construction},
        {"5 convergence bound and worked instance", convergence},
        {"6 analytic layer", analytic_layer},
        {"7 coset layer", coset_layer},
        {"8 normalisation reality and scale invariance", normalization},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Report r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %s\n", r.pass ? "PASS" : "FAIL", name.c_str());
        for (const std::string& n : r.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        failures += r.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
