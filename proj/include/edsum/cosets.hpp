#pragma once

// Coset representatives of L / kL via the Hermite normal form of the matrix
// of multiplication by k.

#include <array>
#include <vector>

#include "edsum/exact_ring.hpp"
#include "edsum/lattice.hpp"

namespace edsum {

/// Integer matrix of multiplication by k in the basis (w1, w2):
/// (k w1, k w2) = (w1, w2) M, so column j holds the coordinates of k w_j.
struct MultMatrix {
    bigint m00, m01, m10, m11;

    bigint det() const { return m00 * m11 - m01 * m10; }
    friend bool operator==(const MultMatrix&, const MultMatrix&) = default;
};

MultMatrix operator*(const MultMatrix& a, const MultMatrix& b);

/// Recovers M numerically and rounds it. Throws errc::not_a_multiplier when
/// any coordinate is further than 1e-6 from an integer.
MultMatrix mult_matrix(cplx k, const Lattice& L);
MultMatrix mult_matrix(const OrderElem& k, const Lattice& L);

/// Column Hermite normal form [[h11, h12], [0, h22]] of a nonsingular
/// integer matrix, with h11, h22 > 0 and 0 <= h12 < h11.
struct Hnf {
    bigint h11, h12, h22;

    bigint index() const { return h11 * h22; }
};

Hnf hermite_normal_form(const MultMatrix& m);

/// A lattice point a w1 + b w2 with exact integer coordinates.
struct CosetRep {
    bigint a;
    bigint b;
    cplx point;
};

/// N(k) representatives {a w1 + b w2 : 0 <= a < h11, 0 <= b < h22},
/// a-major. Throws errc::zero_divisor for k = 0.
std::vector<CosetRep> coset_reps(const OrderElem& k, const Lattice& L);
std::vector<CosetRep> coset_reps(const MultMatrix& m, const Lattice& L);

/// Coordinates (a, b) reduced to the representative box of `h`.
std::array<bigint, 2> reduce_to_box(const bigint& a, const bigint& b, const Hnf& h);

/// True when a w1 + b w2 lies in the sublattice spanned by the columns of m.
bool in_sublattice(const bigint& a, const bigint& b, const MultMatrix& m);

}  // namespace edsum
