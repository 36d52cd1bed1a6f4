#pragma once

// Numerical evaluation of lattice functions: Weierstrass zeta, the
// Eisenstein-Kronecker functions E_1(z) and E_2(0), and the j-invariant.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "edsum/exact_ring.hpp"

namespace edsum {

struct PrecisionPolicy {
    int zeta_radius = 40;  // lattice shells summed directly in zeta
    int q_terms = 64;      // terms in every q-expansion
    double tol = 1e-9;     // relative distance below which a point counts as a lattice point

    /// Throws errc::precondition when zeta_radius < 8, q_terms < 16 or tol <= 0.
    void validate() const;

    friend bool operator==(const PrecisionPolicy&, const PrecisionPolicy&) = default;
};

/// Coordinates of a complex number in a lattice basis: z = x w1 + y w2.
struct LatticeCoords {
    double x;
    double y;
};

/// An oriented lattice w1 Z + w2 Z with Im(w2 / w1) > 0.
///
/// Construction precomputes everything the evaluators need: a reduced basis
/// (tau in the standard fundamental domain), the shell points of that basis,
/// the Laurent tail coefficients of zeta, E_2(0) and the quasi-periods.
/// Instances are immutable afterwards, so evaluation is thread-safe and
/// bitwise deterministic for a fixed policy.
class Lattice {
public:
    /// Throws errc::degenerate_lattice for a dependent or negatively oriented basis.
    Lattice(cplx w1, cplx w2, PrecisionPolicy policy = {});

    /// The lattice Z + theta Z of an order.
    static Lattice of_order(const QuadOrder& order, PrecisionPolicy policy = {});

    cplx omega1() const noexcept { return w1_; }
    cplx omega2() const noexcept { return w2_; }
    cplx tau() const noexcept { return w2_ / w1_; }
    const PrecisionPolicy& precision() const noexcept { return policy_; }

    double area() const noexcept { return area_; }
    cplx s2() const noexcept { return s2_; }
    cplx eta1() const noexcept { return eta1_; }
    cplx eta2() const noexcept { return eta2_; }

    /// Reduced basis (r1, r2) = (w1, w2) * U with U in SL_2(Z).
    cplx reduced1() const noexcept { return r1_; }
    cplx reduced2() const noexcept { return r2_; }
    cplx reduced_tau() const noexcept { return r2_ / r1_; }
    cplx reduced_eta1() const noexcept { return eta_r1_; }
    cplx reduced_eta2() const noexcept { return eta_r2_; }

    /// Bound on the neglected part of the zeta tail for points in the
    /// centred fundamental cell.
    double zeta_tail_bound() const noexcept { return tail_bound_; }

    Lattice scaled(cplx c) const;

    LatticeCoords coords(cplx z) const;
    cplx point(double x, double y) const { return x * w1_ + y * w2_; }

    /// zeta for z in the centred reduced cell (no reduction performed).
    cplx zeta_local(cplx z) const;

    /// z = z0 + m r1 + n r2 with z0 in the centred reduced cell.
    struct Reduction {
        cplx z0;
        std::int64_t m;
        std::int64_t n;
    };
    Reduction reduce(cplx z) const;

    /// True when z is within tol (relative to the shortest vector) of L.
    bool is_lattice_point(cplx z) const;

private:
    static constexpr int tail_terms = 8;

    cplx w1_, w2_;
    PrecisionPolicy policy_;
    double area_;
    cplx r1_, r2_;
    std::array<std::int64_t, 4> u_;  // (r1, r2) = (w1, w2) U, row-major
    std::vector<cplx> half_shell_;   // one of each pair {w, -w} within the shells
    std::array<cplx, tail_terms + 1> tail_{};  // tail_[k] = sum_{outside} w^{-2k}
    double tail_bound_ = 0.0;
    cplx s2_;
    cplx eta_r1_, eta_r2_;
    cplx eta1_, eta2_;
};

/// Im(conj(w1) w2).
double area(const Lattice& L);

/// Weierstrass zeta. Throws errc::pole when z is a lattice point.
cplx weierstrass_zeta(cplx z, const Lattice& L);

/// (eta1, eta2) with zeta(z + w_i) = zeta(z) + eta_i.
std::pair<cplx, cplx> quasi_periods(const Lattice& L);

/// E_2(0) = w1^{-2} (G_2(tau) - pi / Im tau), the Hecke-regularised value of
/// sum' w^{-2}.
cplx e2_zero(const Lattice& L);

/// E_1(z) = zeta(z) - E_2(0) z - (pi / A) conj(z); zero on L.
cplx e1(cplx z, const Lattice& L);

/// E_1 at x w1 + y w2 with coordinates already reduced by the caller.
cplx e1_coords(double x, double y, const Lattice& L);

/// j = 1728 g_2^3 / Delta from q-expansions. Throws errc::precision when
/// Delta underflows.
cplx j_invariant(const Lattice& L);

/// Eisenstein series G_{2k}(tau) = sum'_{(m,n)} (m + n tau)^{-2k}
/// (Eisenstein summation for k = 1), by q-expansion.
cplx eisenstein_g(int k, cplx tau, int q_terms);

}  // namespace edsum
