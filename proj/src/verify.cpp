#include "edsum/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

CheckResult check(std::string suite, std::string name, double residual, double bound) {
    return {std::move(suite), std::move(name), residual, bound, residual <= bound};
}

// Random pair of elementary words whose entries (and the product's) stay
// within the given norm.
std::pair<Mat2, Mat2> word_pair(std::mt19937_64& rng, const QuadOrder& order, const bigint& max_norm) {
    std::uniform_int_distribution<int> len(1, 3);
    for (;;) {
        Mat2 w1 = random_elementary_word(rng, order, len(rng), 2);
        Mat2 w2 = random_elementary_word(rng, order, len(rng), 2);
        if (max_entry_norm(w1) <= max_norm && max_entry_norm(w2) <= max_norm &&
            max_entry_norm(w1 * w2) <= max_norm) {
            return {std::move(w1), std::move(w2)};
        }
    }
}

OrderElem random_modulus(std::mt19937_64& rng, const QuadOrder& order, const bigint& max_norm) {
    std::uniform_int_distribution<int> coord(-12, 12);
    for (;;) {
        OrderElem k(order, coord(rng), coord(rng));
        if (!k.is_zero() && k.norm() <= max_norm) return k;
    }
}

}  // namespace

std::vector<CheckResult> verify_phi(const SumContext& ctx, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opts.seed);
    const QuadOrder& order = ctx.order();

    out.push_back(check("phi", "phi(identity)", std::abs(phi(Mat2::identity(order), ctx)), 1e-7));

    if (order.is_excluded()) {
        const double e2 = std::abs(e2_zero(ctx.lattice())) * std::norm(ctx.lattice().reduced1());
        out.push_back(check("phi", "E_2(0) vanishes", e2, 1e-10));
        for (int i = 0; i < opts.samples; ++i) {
            const auto [w, unused] = word_pair(rng, order, bigint(50));
            out.push_back(check("phi", "trivial on word " + std::to_string(i), std::abs(phi(w, ctx)), 1e-7));
        }
    }

    for (int i = 0; i < opts.samples; ++i) {
        const auto [w1, w2] = word_pair(rng, order, bigint(50));
        const ThreeTerm t = three_term_residual(w1 * w2, w1, w2, ctx);
        out.push_back(check("phi", "homomorphism pair " + std::to_string(i), std::abs(t.residual()), t.bound()));
    }
    return out;
}

std::vector<CheckResult> verify_lemma(const SumContext& ctx, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    for (int i = 0; i < opts.lemma_triples; ++i) {
        const Sl2Triple t = gen_sl2_triple(opts.seed + static_cast<std::uint64_t>(i), ctx, opts.lemma_budget);
        const cplx lhs = d_sum(t.a3.a, t.a3.c, ctx);
        const cplx rhs = lemma1_closed_form(t.a1.c, t.a3.c, ctx);
        out.push_back(check("lemma", "triple " + std::to_string(i) + " N(c3)=" + t.a3.c.norm().str(),
                            std::abs(lhs - rhs), 1e-6 * (1.0 + std::abs(rhs))));
    }
    return out;
}

std::vector<CheckResult> verify_e1(const SumContext& ctx, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const Lattice& L = ctx.lattice();
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    std::uniform_int_distribution<int> shift(-5, 5);

    double periodicity = 0.0, oddness = 0.0;
    for (int i = 0; i < opts.samples; ++i) {
        cplx z = L.point(unit(rng), unit(rng));
        while (std::abs(z) < 0.05 * std::abs(L.reduced1())) z = L.point(unit(rng), unit(rng));
        const cplx w = L.point(shift(rng), shift(rng));
        const cplx base = e1(z, L);
        periodicity = std::max(periodicity, std::abs(e1(z + w, L) - base) / (1.0 + std::abs(base)));
        oddness = std::max(oddness, std::abs(e1(-z, L) + base));
    }
    out.push_back(check("e1", "periodicity", periodicity, 1e-8));
    out.push_back(check("e1", "oddness", oddness, 1e-8));

    const auto [eta1, eta2] = quasi_periods(L);
    const cplx legendre = eta1 * L.omega2() - eta2 * L.omega1() - cplx(0.0, 2.0 * std::numbers::pi);
    out.push_back(check("e1", "Legendre relation", std::abs(legendre), 1e-8));
    out.push_back(check("e1", "half period zero", std::abs(e1(0.5 * L.omega1(), L)), 1e-9));
    return out;
}

std::vector<CheckResult> verify_cosets(const SumContext& ctx, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opts.seed);
    const bigint bound(opts.coset_norm_bound);
    for (int i = 0; i < opts.samples; ++i) {
        const OrderElem k = random_modulus(rng, ctx.order(), bound);
        const MultMatrix m = ctx.mult(k);
        const std::vector<CosetRep> reps = coset_reps(m, ctx.lattice());
        const double count_gap = std::abs(static_cast<double>(reps.size()) - static_cast<double>(k.norm()));
        std::size_t collisions = 0;
        for (std::size_t x = 0; x < reps.size(); ++x) {
            for (std::size_t y = x + 1; y < reps.size(); ++y) {
                if (in_sublattice(reps[x].a - reps[y].a, reps[x].b - reps[y].b, m)) ++collisions;
            }
        }
        const std::string label = "k=" + k.str();
        out.push_back(check("cosets", label + " count", count_gap, 0.0));
        out.push_back(check("cosets", label + " inequivalent", static_cast<double>(collisions), 0.0));
    }
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"phi", "lemma", "e1", "cosets", "all"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const SumContext& ctx, const VerifyOptions& opts) {
    if (suite == "phi") return verify_phi(ctx, opts);
    if (suite == "lemma") return verify_lemma(ctx, opts);
    if (suite == "e1") return verify_e1(ctx, opts);
    if (suite == "cosets") return verify_cosets(ctx, opts);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (std::string_view s : {"e1", "cosets", "phi", "lemma"}) {
            if (s == "lemma" && !ctx.order().is_norm_euclidean()) continue;
            auto part = run_suite(s, ctx, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw error(errc::precondition, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace edsum
