#include "edsum/dedekind.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

constexpr std::int64_t chunk_size = 512;

std::int64_t to_i64(const bigint& x) {
    if (x > std::numeric_limits<std::int64_t>::max() / 4 || x < std::numeric_limits<std::int64_t>::min() / 4) {
        throw error(errc::precondition, "coset summation operands exceed 64-bit range");
    }
    return static_cast<std::int64_t>(x);
}

// n mod D as a representative in (-D/2, D/2].
std::int64_t centered(__int128 n, std::int64_t D) {
    __int128 r = n % D;
    if (r < 0) r += D;
    if (2 * r > D) r -= D;
    return static_cast<std::int64_t>(r);
}

void check_order(const OrderElem& x, const SumContext& ctx) {
    if (!(x.order() == ctx.order())) {
        throw error(errc::order_mismatch, "element does not belong to the context's order");
    }
}

}  // namespace

bool Mat2::is_unimodular() const {
    const OrderElem det_ = det();
    return det_.u() == 1 && det_.v() == 0;
}

Mat2 Mat2::identity(const QuadOrder& order) {
    return {OrderElem(order, 1), OrderElem(order, 0), OrderElem(order, 0), OrderElem(order, 1)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SumContext::SumContext(QuadOrder order, Lattice lattice, unsigned threads)
    : order_(order),
      lattice_(std::move(lattice)),
      threads_(threads == 0 ? 1 : threads),
      theta_(mult_matrix(order_.theta(), lattice_)),
      j_(j_invariant(lattice_)) {}

SumContext SumContext::of_order(const QuadOrder& order, PrecisionPolicy policy, unsigned threads) {
    return SumContext(order, Lattice::of_order(order, policy), threads);
}

bool SumContext::has_real_j() const { return std::abs(j_.imag()) <= 1e-8 * std::max(1.0, std::abs(j_)); }

MultMatrix SumContext::mult(const OrderElem& x) const {
    check_order(x, *this);
    return {x.u() + x.v() * theta_.m00, x.v() * theta_.m01, x.v() * theta_.m10, x.u() + x.v() * theta_.m11};
}

cplx d_sum(const OrderElem& h, const OrderElem& k, const SumContext& ctx) {
    if (k.is_zero()) throw error(errc::zero_divisor, "zero modulus");
    check_order(h, ctx);
    check_order(k, ctx);

    const MultMatrix mk = ctx.mult(k);
    const MultMatrix mh = ctx.mult(h);
    const bigint det = mk.det();
    if (det <= 0 || det > max_coset_count) {
        throw error(errc::precondition, "coset count N(k) = " + det.str() + " is outside the enumerable range");
    }
    const Hnf hnf = hermite_normal_form(mk);

    // mu / k = adj(M_k) mu / det and h mu / k = adj(M_k) M_h mu / det
    const MultMatrix adj{mk.m11, -mk.m01, -mk.m10, mk.m00};
    const MultMatrix hadj = adj * mh;
    const std::int64_t D = to_i64(det);
    const std::int64_t h22 = to_i64(hnf.h22);
    const std::array<std::int64_t, 4> P{to_i64(adj.m00), to_i64(adj.m01), to_i64(adj.m10), to_i64(adj.m11)};
    const std::array<std::int64_t, 4> Q{to_i64(hadj.m00), to_i64(hadj.m01), to_i64(hadj.m10), to_i64(hadj.m11)};
    const Lattice& L = ctx.lattice();
    const double inv_D = 1.0 / static_cast<double>(D);

    auto e1_at = [&](const std::array<std::int64_t, 4>& M, std::int64_t a, std::int64_t b) -> cplx {
        const std::int64_t x = centered(static_cast<__int128>(M[0]) * a + static_cast<__int128>(M[1]) * b, D);
        const std::int64_t y = centered(static_cast<__int128>(M[2]) * a + static_cast<__int128>(M[3]) * b, D);
        if (x == 0 && y == 0) return 0.0;
        return e1_coords(static_cast<double>(x) * inv_D, static_cast<double>(y) * inv_D, L);
    };

    const std::int64_t chunks = (D + chunk_size - 1) / chunk_size;
    std::vector<cplx> partial(static_cast<std::size_t>(chunks));
    auto run_chunk = [&](std::int64_t c) {
        cplx sum = 0.0;
        const std::int64_t end = std::min(D, (c + 1) * chunk_size);
        for (std::int64_t i = c * chunk_size; i < end; ++i) {
            const std::int64_t a = i / h22;
            const std::int64_t b = i % h22;
            const cplx e_mu = e1_at(P, a, b);
            if (e_mu == 0.0) continue;
            sum += e1_at(Q, a, b) * e_mu;
        }
        partial[static_cast<std::size_t>(c)] = sum;
    };

    const unsigned workers = std::min<std::int64_t>(ctx.threads(), chunks);
    if (workers <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::int64_t c = next++; c < chunks; c = next++) run_chunk(c);
            });
        }
        for (auto& t : pool) t.join();
    }

    cplx total = 0.0;
    for (const cplx& s : partial) total += s;
    return total / k.embed();
}

cplx normalize(cplx d, const SumContext& ctx) {
    const double root = std::sqrt(static_cast<double>(-ctx.order().d_L()));
    return d / (cplx(0.0, root) * e2_zero(ctx.lattice()));
}

double d_norm(const OrderElem& h, const OrderElem& k, const SumContext& ctx) {
    const Lattice& L = ctx.lattice();
    const double scale = std::norm(L.reduced1());
    if (std::abs(e2_zero(L)) * scale < 1e-12) {
        throw error(errc::excluded_ring, "E_2(0) vanishes for this lattice; normalised sums are undefined");
    }
    if (!ctx.has_real_j()) {
        throw error(errc::precondition, "normalised sums are real only for lattices with real j");
    }
    const cplx value = normalize(d_sum(h, k, ctx), ctx);
    if (std::abs(value.imag()) > 1e-6 * (1.0 + std::abs(value))) {
        throw error(errc::precision, "normalised sum has a non-negligible imaginary part");
    }
    return value.real();
}

cplx phi(const Mat2& m, const SumContext& ctx) {
    if (!m.is_unimodular()) throw error(errc::not_unimodular, "Phi is defined on SL_2 only");
    const cplx e2 = e2_zero(ctx.lattice());
    if (m.c.is_zero()) return e2 * i_map(m.b.embed() / m.d.embed());
    return e2 * i_map((m.a.embed() + m.d.embed()) / m.c.embed()) - d_sum(m.a, m.c, ctx);
}

ThreeTerm three_term_residual(const Mat2& a1, const Mat2& a2, const Mat2& a3, const SumContext& ctx) {
    if (!(a1 == a2 * a3)) throw error(errc::precondition, "three-term relation requires A1 = A2 A3");
    return {phi(a1, ctx), phi(a2, ctx), phi(a3, ctx)};
}

cplx lemma1_closed_form(const OrderElem& c, const OrderElem& c3, const SumContext& ctx) {
    if (c.is_zero() || c3.is_zero()) throw error(errc::zero_divisor, "zero modulus");
    const cplx cc = c.embed();
    const cplx cc3 = c3.embed();
    return e2_zero(ctx.lattice()) * i_map(2.0 / cc3 + cc3 / (cc * cc));
}

namespace {

// a d - b c = 1 completion of (a, c) when they generate the unit ideal.
std::optional<std::pair<OrderElem, OrderElem>> complete_row(const OrderElem& a, const OrderElem& c) {
    const OrderGcd g = egcd_order(a, c);
    if (g.g.norm() != 1) return std::nullopt;
    const OrderElem unit_inv = g.g.conj();
    return std::pair{g.x * unit_inv, -(g.y * unit_inv)};  // d, b
}

}  // namespace

Sl2Triple gen_sl2_triple(std::uint64_t seed, const SumContext& ctx, std::uint64_t norm_budget, int max_attempts) {
    const QuadOrder& order = ctx.order();
    if (!order.is_norm_euclidean()) {
        throw error(errc::unsupported_order, "triple generation needs a norm-Euclidean order");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> medium(-4, 4);
    std::uniform_int_distribution<int> shift(-1, 1);
    const bigint budget(norm_budget);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const OrderElem c(order, small(rng), small(rng));
        if (c.is_zero() || c.norm() > budget) continue;
        const OrderElem a1(order, medium(rng), medium(rng));
        const auto row1 = complete_row(a1, c);
        if (!row1) continue;
        const auto& [d1, b1] = *row1;

        const OrderElem a2 = reduce_mod(d1, c) + c * OrderElem(order, shift(rng), shift(rng));
        if (a2 == a1) continue;
        const auto row2 = complete_row(a2, c);
        if (!row2) continue;
        const auto& [d2, b2] = *row2;

        const Mat2 A1{a1, b1, c, d1};
        const Mat2 A2{a2, b2, c, d2};
        const Mat2 A3 = A2.adjugate() * A1;
        if (A3.c.norm() > budget) continue;
        if (!A1.is_unimodular() || !A2.is_unimodular() || !A3.is_unimodular() || !(A1 == A2 * A3)) {
            throw error(errc::construction, "triple completion produced a non-unimodular matrix");
        }
        return {A1, A2, A3};
    }
    throw error(errc::generation_failure, "no admissible triple found within the attempt budget");
}

Mat2 upper_elementary(const OrderElem& x) {
    const QuadOrder& o = x.order();
    return {OrderElem(o, 1), x, OrderElem(o, 0), OrderElem(o, 1)};
}

Mat2 lower_elementary(const OrderElem& x) {
    const QuadOrder& o = x.order();
    return {OrderElem(o, 1), OrderElem(o, 0), x, OrderElem(o, 1)};
}

Mat2 random_elementary_word(std::mt19937_64& rng, const QuadOrder& order, int length, int coeff_bound) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::bernoulli_distribution coin(0.5);
    Mat2 w = Mat2::identity(order);
    for (int i = 0; i < length; ++i) {
        OrderElem x(order, coeff(rng), coeff(rng));
        while (x.is_zero()) x = OrderElem(order, coeff(rng), coeff(rng));
        w = w * (coin(rng) ? upper_elementary(x) : lower_elementary(x));
    }
    if (coin(rng)) {
        const OrderElem minus_one(order, -1);
        w = {w.a * minus_one, w.b * minus_one, w.c * minus_one, w.d * minus_one};
    }
    return w;
}

bigint max_entry_norm(const Mat2& m) {
    bigint best = m.a.norm();
    for (const OrderElem* e : {&m.b, &m.c, &m.d}) best = std::max(best, e->norm());
    return best;
}

}  // namespace edsum
