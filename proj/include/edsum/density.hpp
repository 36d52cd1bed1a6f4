#pragma once

// Constructive approximation of 2a/b by normalised elliptic Dedekind sums.
//
// For a target x = a/b with gcd(b, 2d) = 1 (d = d_L) we walk the primes
//   p = 1 (mod 4 |4 b^2 d + d^2|),  p = a^{-1} (mod b),
// set e = (ap - 1)/b, pick l with (2l - de)^2 = d^2 e^2 + 4d (mod p) and
// k = l^{-1} (mod p), and build
//   A1 = [[k sqrt d, -x1], [p, y1 sqrt d]],  A2 = [[(k+e) sqrt d, -x2], [p, y2 sqrt d]],
//   A3 = A2^{-1} A1,  c3 = p e sqrt d.
// The closed form of the three-term relation then gives
//   D~(a3, c3) = I(2/c3 + c3/p^2) / (i sqrt|d|) = 2e/p - 4/(p e |d|)
// whenever sqrt d = i sqrt|d|, and this tends to 2a/b.

#include <cstdint>
#include <vector>

#include "edsum/dedekind.hpp"
#include "edsum/exact_ring.hpp"

namespace edsum {

struct Target {
    bigint a;
    bigint b;
    QuadOrder order;

    /// Throws errc::inadmissible_target unless b > 0, gcd(a, b) = 1 and
    /// gcd(b, 2 d_L) = 1, and errc::excluded_ring for Z[i] and Z[rho].
    Target(bigint a, bigint b, QuadOrder order);

    bigint d() const { return bigint(order.d_L()); }
    rational value() const { return rational(a, b); }
};

/// The progression r + n M searched for primes.
struct PrimeProgression {
    bigint residue;
    bigint modulus;
};

PrimeProgression prime_progression(const Target& t);

struct SearchLimits {
    std::uint64_t max_candidates = 50'000'000;
    bigint max_prime = 0;  // 0: unbounded
};

/// The index-th prime (0-based) of the progression.
bigint find_prime(const Target& t, std::size_t index, const SearchLimits& limits = {});

/// The first `count` primes of the progression, in increasing order.
std::vector<bigint> find_primes(const Target& t, std::size_t count, const SearchLimits& limits = {});

struct ApproxStep {
    bigint p;
    bigint e;
    bigint ell;
    bigint k;
    bigint x1, y1, x2, y2;
    Mat2 A1, A2, A3;
    rational dtilde_exact;
    double dtilde;
    double err_bound;  // |dtilde - 2a/b|
};

/// Builds and exactly verifies one step. Throws errc::construction when
/// any algebraic invariant fails.
ApproxStep construct(const Target& t, const bigint& p);

/// Normalised closed form I(2/c3 + c3/c^2) / (i sqrt|d_L|) as an exact
/// rational: the theta-coordinate of 2/c3 + c3/c^2.
rational normalized_closed_form(const OrderElem& c, const OrderElem& c3);

/// Steps for the first `steps` primes. Each satisfies
/// |dtilde - 2a/b| <= (2/b + 1)/p, checked.
std::vector<ApproxStep> approximate(const Target& t, std::size_t steps, const SearchLimits& limits = {});

/// An admissible target a/b with b >= min_b and |2a/b - r| <= 1/b.
Target target_near(double r, const QuadOrder& order, std::int64_t min_b);

}  // namespace edsum
