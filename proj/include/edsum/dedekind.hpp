#pragma once

// Elliptic Dedekind sums D_L(h, k), their normalisation, the Phi map on
// SL_2(O) and the closed form for sums arising from the three-term relation.

#include <cstdint>
#include <random>
#include <tuple>

#include "edsum/cosets.hpp"
#include "edsum/exact_ring.hpp"
#include "edsum/lattice.hpp"

namespace edsum {

/// 2x2 matrix [[a, b], [c, d]] over an order.
struct Mat2 {
    OrderElem a, b, c, d;

    OrderElem det() const { return a * d - b * c; }
    bool is_unimodular() const;
    /// Adjugate [[d, -b], [-c, a]]; the inverse when det = 1.
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    static Mat2 identity(const QuadOrder& order);

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Order, lattice and evaluation settings shared by every sum.
class SumContext {
public:
    /// Throws errc::not_a_multiplier when theta does not preserve the lattice.
    SumContext(QuadOrder order, Lattice lattice, unsigned threads = 1);

    /// The order acting on its own lattice Z + theta Z.
    static SumContext of_order(const QuadOrder& order, PrecisionPolicy policy = {}, unsigned threads = 1);

    const QuadOrder& order() const noexcept { return order_; }
    const Lattice& lattice() const noexcept { return lattice_; }
    unsigned threads() const noexcept { return threads_; }
    cplx j() const noexcept { return j_; }
    bool has_real_j() const;

    /// Exact multiplication matrix u I + v M_theta.
    MultMatrix mult(const OrderElem& x) const;

    SumContext with_lattice(Lattice lattice) const { return SumContext(order_, std::move(lattice), threads_); }
    SumContext with_threads(unsigned threads) const { return SumContext(order_, lattice_, threads); }

private:
    QuadOrder order_;
    Lattice lattice_;
    unsigned threads_;
    MultMatrix theta_;
    cplx j_;
};

/// I(z) = z - conj(z).
inline cplx i_map(cplx z) { return z - std::conj(z); }

/// Largest coset count d_sum will enumerate.
inline constexpr std::uint64_t max_coset_count = 50'000'000;

/// D_L(h, k) = (1/k) sum_{mu in L/kL} E_1(h mu / k) E_1(mu / k).
///
/// Arguments are located exactly: mu / k and h mu / k have rational
/// coordinates with denominator N(k), reduced into (-1/2, 1/2] before
/// evaluation, and terms landing on L contribute zero. Cosets are summed in
/// fixed chunks whose partial sums are added in chunk order, so the result
/// does not depend on the thread count.
cplx d_sum(const OrderElem& h, const OrderElem& k, const SumContext& ctx);

/// D_L / (i sqrt|d_L| E_2(0)) without reality checks.
cplx normalize(cplx d, const SumContext& ctx);

/// Normalised sum. Throws errc::excluded_ring when E_2(0) vanishes,
/// errc::precondition when j(L) is not real and errc::precision when the
/// result has an imaginary part above 1e-6 (1 + |value|).
double d_norm(const OrderElem& h, const OrderElem& k, const SumContext& ctx);

/// Phi(A) = E_2(0) I((a + d)/c) - D_L(a, c) for c != 0, E_2(0) I(b/d) for c = 0.
cplx phi(const Mat2& m, const SumContext& ctx);

struct ThreeTerm {
    cplx phi1, phi2, phi3;

    cplx residual() const { return phi1 - phi2 - phi3; }
    double bound(double rel = 1e-7) const {
        return rel * (1.0 + std::abs(phi1) + std::abs(phi2) + std::abs(phi3));
    }
    bool holds(double rel = 1e-7) const { return std::abs(residual()) <= bound(rel); }
};

/// Phi(A1) - Phi(A2) - Phi(A3). Throws errc::precondition unless A1 = A2 A3.
ThreeTerm three_term_residual(const Mat2& a1, const Mat2& a2, const Mat2& a3, const SumContext& ctx);

/// E_2(0) I(2/c3 + c3/c^2).
cplx lemma1_closed_form(const OrderElem& c, const OrderElem& c3, const SumContext& ctx);

struct Sl2Triple {
    Mat2 a1, a2, a3;
};

/// Random (A1, A2, A3) with A1 = A2 A3, c1 = c2 = c != 0,
/// a1 a2 = 1 (mod c), a1 != a2 and N(c3) <= norm_budget.
Sl2Triple gen_sl2_triple(std::uint64_t seed, const SumContext& ctx, std::uint64_t norm_budget = 300,
                         int max_attempts = 20000);

/// [[1, x], [0, 1]] and [[1, 0], [x, 1]].
Mat2 upper_elementary(const OrderElem& x);
Mat2 lower_elementary(const OrderElem& x);

/// Product of `length` random elementary matrices with coefficient
/// coordinates in [-coeff_bound, coeff_bound], optionally times -1.
Mat2 random_elementary_word(std::mt19937_64& rng, const QuadOrder& order, int length, int coeff_bound);

/// Largest entry norm of a matrix.
bigint max_entry_norm(const Mat2& m);

}  // namespace edsum
