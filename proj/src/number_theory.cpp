#include "edsum/number_theory.hpp"

#include <array>
#include <random>

#include "edsum/errors.hpp"

namespace edsum {

using boost::multiprecision::powm;

bigint mod(const bigint& a, const bigint& m) {
    if (m <= 0) throw error(errc::invalid_modulus, "modulus must be positive");
    bigint r = a % m;
    if (r < 0) r += m;
    return r;
}

namespace {

void check_odd_modulus(const bigint& p) {
    if (p <= 1 || (p & 1) == 0) {
        throw error(errc::invalid_modulus, "modulus must be an odd integer > 1");
    }
}

}  // namespace

int legendre_symbol(const bigint& a, const bigint& p) {
    check_odd_modulus(p);
    const bigint r = mod(a, p);
    if (r == 0) return 0;
    const bigint t = powm(r, (p - 1) / 2, p);
    if (t == 1) return 1;
    if (t == p - 1) return -1;
    throw error(errc::invalid_modulus, "Euler criterion failed: modulus is not prime");
}

bigint sqrt_mod(const bigint& a, const bigint& p) {
    check_odd_modulus(p);
    const bigint n = mod(a, p);
    if (n == 0) return 0;
    if (legendre_symbol(n, p) != 1) {
        throw error(errc::no_root, "no square root: argument is a quadratic non-residue");
    }

    bigint r;
    if (p % 4 == 3) {
        r = powm(n, (p + 1) / 4, p);
    } else {
        bigint q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        bigint z = 2;
        while (legendre_symbol(z, p) != -1) ++z;

        bigint c = powm(z, q, p);
        r = powm(n, (q + 1) / 2, p);
        bigint t = powm(n, q, p);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            bigint t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                if (++i == m) throw error(errc::invalid_modulus, "Tonelli-Shanks failed: modulus is not prime");
            }
            bigint b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
            r = r * b % p;
            c = b * b % p;
            t = t * c % p;
            m = i;
        }
    }
    const bigint other = p - r;
    return other < r ? other : r;
}

Egcd egcd(const bigint& a, const bigint& b) {
    bigint r0 = a, r1 = b;
    bigint x0 = 1, x1 = 0;
    bigint y0 = 0, y1 = 1;
    while (r1 != 0) {
        const bigint q = r0 / r1;
        bigint t = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(t);
        t = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(t);
        t = y0 - q * y1;
        y0 = std::move(y1);
        y1 = std::move(t);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    return {r0, x0, y0};
}

bigint inverse_mod(const bigint& a, const bigint& m) {
    if (m <= 0) throw error(errc::invalid_modulus, "modulus must be positive");
    if (m == 1) return 0;
    const Egcd e = egcd(mod(a, m), m);
    if (e.g != 1) throw error(errc::arithmetic, "element is not invertible modulo m");
    return mod(e.x, m);
}

Congruence crt(const std::vector<Congruence>& system) {
    Congruence acc{0, 1};
    for (const Congruence& c : system) {
        if (c.modulus <= 0) throw error(errc::invalid_modulus, "CRT moduli must be positive");
        const Egcd e = egcd(acc.modulus, c.modulus);
        if (e.g != 1) throw error(errc::arithmetic, "CRT moduli are not pairwise coprime");
        // acc.residue + acc.modulus * t = c.residue (mod c.modulus)
        const bigint t = mod((c.residue - acc.residue) * e.x, c.modulus);
        const bigint modulus = acc.modulus * c.modulus;
        acc.residue = mod(acc.residue + acc.modulus * t, modulus);
        acc.modulus = modulus;
    }
    return acc;
}

namespace {

bool miller_rabin_round(const bigint& n, const bigint& d, unsigned s, const bigint& base) {
    bigint x = powm(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const bigint& n, int rounds) {
    static constexpr std::array<unsigned, 13> small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) return false;
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }

    bigint d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }

    static const bigint deterministic_limit("3317044064679887385961981");
    if (n < deterministic_limit) {
        for (unsigned p : small_primes) {
            if (!miller_rabin_round(n, d, s, bigint(p))) return false;
        }
        return true;
    }

    std::mt19937_64 rng(static_cast<std::uint64_t>(n & 0xffffffffffffffffULL) ^ 0x9e3779b97f4a7c15ULL);
    const bigint span = n - 3;
    for (int i = 0; i < rounds; ++i) {
        bigint r = 0;
        for (unsigned words = 0; words * 64 < msb(n) + 64; ++words) r = (r << 64) | bigint(rng());
        if (!miller_rabin_round(n, d, s, r % span + 2)) return false;
    }
    return true;
}

}  // namespace edsum
