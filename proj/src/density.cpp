#include "edsum/density.hpp"

#include <cmath>

#include "edsum/errors.hpp"
#include "edsum/number_theory.hpp"

namespace edsum {

namespace {

[[noreturn]] void fail(const std::string& what) { throw error(errc::construction, what); }

bigint gcd(const bigint& a, const bigint& b) { return egcd(a, b).g; }

}  // namespace

Target::Target(bigint a_, bigint b_, QuadOrder order_) : a(std::move(a_)), b(std::move(b_)), order(order_) {
    if (order.is_excluded()) {
        throw error(errc::excluded_ring, "Z[i] and Z[rho] are excluded: E_2(0) vanishes there");
    }
    if (b <= 0) throw error(errc::inadmissible_target, "denominator must be positive");
    if (gcd(a, b) != 1) throw error(errc::inadmissible_target, "a/b must be in lowest terms");
    if (gcd(b, 2 * d()) != 1) {
        throw error(errc::inadmissible_target,
                    "gcd(b, 2d) = " + gcd(b, 2 * d()).str() + " != 1 for d = " + d().str());
    }
}

PrimeProgression prime_progression(const Target& t) {
    const bigint d = t.d();
    const bigint m1 = abs(4 * (4 * t.b * t.b * d + d * d));
    if (m1 == 0) fail("degenerate progression modulus 4(4b^2 d + d^2) = 0");
    const bigint a_inv = inverse_mod(t.a, t.b);
    const Congruence c = crt({{1, m1}, {a_inv, t.b}});
    return {c.residue, c.modulus};
}

std::vector<bigint> find_primes(const Target& t, std::size_t count, const SearchLimits& limits) {
    const PrimeProgression prog = prime_progression(t);
    std::vector<bigint> primes;
    primes.reserve(count);
    bigint p = prog.residue;
    for (std::uint64_t n = 0; primes.size() < count; ++n, p += prog.modulus) {
        if (n >= limits.max_candidates || (limits.max_prime > 0 && p > limits.max_prime)) {
            throw error(errc::search_limit, "prime search exceeded its bound after " + std::to_string(primes.size()) +
                                                " primes");
        }
        if (p < 2 || !is_probable_prime(p)) continue;
        const bigint e = (t.a * p - 1) / t.b;
        const bigint d = t.d();
        if (legendre_symbol(d * d * e * e + 4 * d, p) != 1) {
            fail("d^2 e^2 + 4d is not a square modulo p = " + p.str());
        }
        primes.push_back(p);
    }
    return primes;
}

bigint find_prime(const Target& t, std::size_t index, const SearchLimits& limits) {
    return find_primes(t, index + 1, limits).back();
}

rational normalized_closed_form(const OrderElem& c, const OrderElem& c3) {
    if (c.is_zero() || c3.is_zero()) throw error(errc::zero_divisor, "zero modulus");
    const OrderElem two(c.order(), 2);
    return field_quotient(two, c3).second + field_quotient(c3, c * c).second;
}

ApproxStep construct(const Target& t, const bigint& p) {
    const QuadOrder& order = t.order;
    const bigint d = t.d();

    ApproxStep s{.p = p, .e = 0, .ell = 0, .k = 0, .x1 = 0, .y1 = 0, .x2 = 0, .y2 = 0,
                 .A1 = Mat2::identity(order), .A2 = Mat2::identity(order), .A3 = Mat2::identity(order),
                 .dtilde_exact = 0, .dtilde = 0, .err_bound = 0};

    const bigint num = t.a * p - 1;
    if (num % t.b != 0) fail("b does not divide ap - 1");
    s.e = num / t.b;

    const bigint disc = mod(d * d * s.e * s.e + 4 * d, p);
    if (legendre_symbol(disc, p) != 1) fail("d^2 e^2 + 4d is not a square modulo p");
    const bigint r = sqrt_mod(disc, p);
    const bigint half = (p + 1) / 2;
    for (const bigint& root : {r, bigint(p - r)}) {
        s.ell = mod((root + d * s.e) * half, p);
        if (s.ell != 0) break;
    }
    if (s.ell == 0) fail("both square roots give l = 0 (mod p)");
    s.k = inverse_mod(s.ell, p);

    if (mod(s.ell * s.k, p) != 1) fail("l k != 1 (mod p)");
    if (mod(2 * s.ell - d * s.e, p) * mod(2 * s.ell - d * s.e, p) % p != disc) fail("(2l - de)^2 != d^2 e^2 + 4d");
    if (mod(s.k * (s.k + s.e) * d, p) != 1) fail("k (k + e) d != 1 (mod p)");

    const Egcd g1 = egcd(p, s.k * d);
    const Egcd g2 = egcd(p, (s.k + s.e) * d);
    if (g1.g != 1 || g2.g != 1) fail("p shares a factor with k d or (k + e) d");
    s.x1 = g1.x;
    s.y1 = g1.y;
    s.x2 = g2.x;
    s.y2 = g2.y;

    const OrderElem root_d = sqrt_dL(order);
    const OrderElem pe(order, p);
    s.A1 = {root_d * s.k, OrderElem(order, -s.x1), pe, root_d * s.y1};
    s.A2 = {root_d * bigint(s.k + s.e), OrderElem(order, -s.x2), pe, root_d * s.y2};
    s.A3 = s.A2.adjugate() * s.A1;

    if (!s.A1.is_unimodular() || !s.A2.is_unimodular() || !s.A3.is_unimodular()) fail("det(A_i) != 1");
    if (!(s.A1 == s.A2 * s.A3)) fail("A1 != A2 A3");
    if (!(s.A3.c == root_d * bigint(p * s.e))) fail("c3 != p e sqrt(d)");
    if (!divides(pe, s.A1.a * s.A2.a - OrderElem(order, 1))) fail("a1 a2 != 1 (mod p)");
    if (s.e * t.b != t.a * p - 1) fail("e b != a p - 1");

    s.dtilde_exact = normalized_closed_form(pe, s.A3.c);
    s.dtilde = static_cast<double>(s.dtilde_exact);
    s.err_bound = static_cast<double>(abs(s.dtilde_exact - 2 * t.value()));
    return s;
}

std::vector<ApproxStep> approximate(const Target& t, std::size_t steps, const SearchLimits& limits) {
    std::vector<ApproxStep> out;
    out.reserve(steps);
    for (const bigint& p : find_primes(t, steps, limits)) {
        ApproxStep s = construct(t, p);
        const rational err = abs(s.dtilde_exact - 2 * t.value());
        if (err > rational(2 + t.b, t.b * p)) fail("|dtilde - 2a/b| exceeds (2/b + 1)/p");
        out.push_back(std::move(s));
    }
    return out;
}

Target target_near(double r, const QuadOrder& order, std::int64_t min_b) {
    const bigint two_d = 2 * bigint(order.d_L());
    for (std::int64_t b = std::max<std::int64_t>(min_b, 1);; ++b) {
        if (gcd(bigint(b), two_d) != 1) continue;
        const auto centre = static_cast<std::int64_t>(std::llround(r * static_cast<double>(b) / 2.0));
        for (std::int64_t a : {centre, centre + 1, centre - 1}) {
            if (gcd(bigint(a), bigint(b)) != 1) continue;
            if (std::abs(2.0 * static_cast<double>(a) / static_cast<double>(b) - r) <= 1.0 / static_cast<double>(b)) {
                return Target(a, b, order);
            }
        }
    }
}

}  // namespace edsum
