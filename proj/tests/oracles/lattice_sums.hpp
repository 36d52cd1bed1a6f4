#pragma once

// Slow reference evaluators built from raw lattice sums. They share no code
// with the library and are only fast enough for tests.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Calls f(w) for every nonzero w = m w1 + n w2 with |w| <= radius.
template <class F>
void for_each_in_disk(cplx w1, cplx w2, double radius, F&& f) {
    const double area = std::abs((std::conj(w1) * w2).imag());
    const long n_max = static_cast<long>(std::ceil(radius * std::abs(w1) / area)) + 1;
    for (long n = -n_max; n <= n_max; ++n) {
        // m w1 + n w2 lies on a line; solve |m w1 + n w2| <= radius for m.
        const cplx c = static_cast<double>(n) * w2;
        const double b = (std::conj(w1) * c).real() / std::norm(w1);
        const double rest = (std::norm(c) - radius * radius) / std::norm(w1);
        const double disc = b * b - rest;
        if (disc < 0) continue;
        const long lo = static_cast<long>(std::ceil(-b - std::sqrt(disc)));
        const long hi = static_cast<long>(std::floor(-b + std::sqrt(disc)));
        for (long m = lo; m <= hi; ++m) {
            if (m == 0 && n == 0) continue;
            f(static_cast<double>(m) * w1 + c);
        }
    }
}

// Weierstrass zeta by its defining series, summed over a disk. The disk is
// symmetric, so the slowly decaying odd terms cancel pairwise.
inline cplx zeta_direct(cplx z, cplx w1, cplx w2, double radius) {
    cplx s = 1.0 / z;
    for_each_in_disk(w1, w2, radius, [&](cplx w) { s += 1.0 / (z - w) + 1.0 / w + z / (w * w); });
    return s;
}

// Hecke's limit: sum' w^-2 |w|^-2s is analytic in s near 0, so its values at
// a few small s pin down the value at s = 0. Nodes are halved each time and
// the polynomial through them is evaluated at 0 (Neville).
inline cplx hecke_e2(cplx w1, cplx w2, double radius, const std::vector<double>& nodes) {
    std::vector<cplx> sums(nodes.size());
    for_each_in_disk(w1, w2, radius, [&](cplx w) {
        const cplx inv2 = 1.0 / (w * w);
        const double log_r2 = std::log(std::norm(w));
        for (std::size_t i = 0; i < nodes.size(); ++i) sums[i] += inv2 * std::exp(-nodes[i] * log_r2);
    });
    std::vector<cplx> p = sums;
    for (std::size_t level = 1; level < nodes.size(); ++level) {
        for (std::size_t i = 0; i + level < nodes.size(); ++i) {
            const double xi = nodes[i], xj = nodes[i + level];
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    return p[0];
}

}  // namespace oracle
