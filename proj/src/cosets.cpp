#include "edsum/cosets.hpp"

#include <cmath>

#include "edsum/errors.hpp"
#include "edsum/number_theory.hpp"

namespace edsum {

MultMatrix operator*(const MultMatrix& a, const MultMatrix& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

MultMatrix mult_matrix(cplx k, const Lattice& L) {
    const LatticeCoords c1 = L.coords(k * L.omega1());
    const LatticeCoords c2 = L.coords(k * L.omega2());
    const std::array<double, 4> raw{c1.x, c2.x, c1.y, c2.y};
    std::array<bigint, 4> rounded;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double r = std::round(raw[i]);
        if (!std::isfinite(raw[i]) || std::abs(raw[i] - r) > 1e-6) {
            throw error(errc::not_a_multiplier, "element does not map the lattice into itself");
        }
        rounded[i] = bigint(static_cast<long long>(r));
    }
    return {rounded[0], rounded[1], rounded[2], rounded[3]};
}

MultMatrix mult_matrix(const OrderElem& k, const Lattice& L) { return mult_matrix(k.embed(), L); }

Hnf hermite_normal_form(const MultMatrix& m) {
    if (m.det() == 0) throw error(errc::zero_divisor, "zero modulus");
    // Column operations clearing the bottom-left entry.
    const Egcd e = egcd(m.m10, m.m11);
    bigint h11, h12, h22;
    if (m.m10 == 0) {
        h11 = m.m00;
        h12 = m.m01;
        h22 = m.m11;
    } else {
        // U = [[m11/g, x], [-m10/g, y]], det U = 1, (m10, m11) U = (0, g)
        const bigint p = m.m11 / e.g;
        const bigint q = -m.m10 / e.g;
        h11 = m.m00 * p + m.m01 * q;
        h12 = m.m00 * e.x + m.m01 * e.y;
        h22 = e.g;
    }
    if (h11 < 0) h11 = -h11;
    if (h22 < 0) {
        h22 = -h22;
        h12 = -h12;
    }
    h12 = mod(h12, h11);
    return {h11, h12, h22};
}

std::vector<CosetRep> coset_reps(const MultMatrix& m, const Lattice& L) {
    const Hnf h = hermite_normal_form(m);
    std::vector<CosetRep> reps;
    reps.reserve(static_cast<std::size_t>(h.index()));
    for (bigint a = 0; a < h.h11; ++a) {
        for (bigint b = 0; b < h.h22; ++b) {
            reps.push_back({a, b, L.point(static_cast<double>(a), static_cast<double>(b))});
        }
    }
    return reps;
}

std::vector<CosetRep> coset_reps(const OrderElem& k, const Lattice& L) {
    if (k.is_zero()) throw error(errc::zero_divisor, "zero modulus");
    return coset_reps(mult_matrix(k, L), L);
}

std::array<bigint, 2> reduce_to_box(const bigint& a, const bigint& b, const Hnf& h) {
    // subtract q * (h12, h22), then reduce a by h11
    bigint q = b / h.h22;
    if (b - q * h.h22 < 0) --q;
    const bigint bb = b - q * h.h22;
    const bigint aa = mod(a - q * h.h12, h.h11);
    return {aa, bb};
}

bool in_sublattice(const bigint& a, const bigint& b, const MultMatrix& m) {
    const bigint d = m.det();
    if (d == 0) throw error(errc::zero_divisor, "zero modulus");
    // m^{-1} (a, b) = adj(m) (a, b) / det
    const bigint x = m.m11 * a - m.m01 * b;
    const bigint y = -m.m10 * a + m.m00 * b;
    return x % d == 0 && y % d == 0;
}

}  // namespace edsum
