#pragma once

// Modular arithmetic over Z used by the density construction.

#include <utility>
#include <vector>

#include "edsum/exact_ring.hpp"

namespace edsum {

/// Non-negative residue of a modulo m (m > 0).
bigint mod(const bigint& a, const bigint& m);

/// Legendre symbol (a/p) by Euler's criterion. p must be an odd integer > 1;
/// primality is the caller's responsibility.
int legendre_symbol(const bigint& a, const bigint& p);

/// Square root of a modulo an odd prime p, by Tonelli-Shanks with the
/// p = 3 (mod 4) shortcut. Returns the smaller of the two roots.
bigint sqrt_mod(const bigint& a, const bigint& p);

struct Egcd {
    bigint g;
    bigint x;
    bigint y;
};

/// x a + y b = g = gcd(a, b) >= 0.
Egcd egcd(const bigint& a, const bigint& b);

/// a^{-1} mod m in [0, m).
bigint inverse_mod(const bigint& a, const bigint& m);

struct Congruence {
    bigint residue;
    bigint modulus;
};

/// Combines pairwise coprime congruences; the result has residue in [0, M).
Congruence crt(const std::vector<Congruence>& system);

/// Miller-Rabin. Deterministic (prime bases up to 41) below 3.3e24;
/// `rounds` seeded pseudo-random bases above that.
bool is_probable_prime(const bigint& n, int rounds = 40);

}  // namespace edsum
