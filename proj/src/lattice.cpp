#include "edsum/lattice.hpp"

#include <cmath>
#include <numbers>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

constexpr double pi = std::numbers::pi;

// Coordinates of z in the basis (a, b) with Im(conj(a) b) = area > 0.
LatticeCoords solve_coords(cplx z, cplx a, cplx b, double area) {
    return {std::imag(std::conj(z) * b) / area, std::imag(std::conj(a) * z) / area};
}

// sum_{m >= 1} m^j q^m / (1 - q^m) = sum_{n >= 1} sigma_j(n) q^n
cplx lambert_sigma(int j, cplx q, int terms) {
    cplx sum = 0.0;
    cplx qm = 1.0;
    for (int m = 1; m <= terms; ++m) {
        qm *= q;
        sum += std::pow(static_cast<double>(m), j) * qm / (1.0 - qm);
    }
    return sum;
}

cplx nome(cplx tau) { return std::exp(cplx(0.0, 2.0 * pi) * tau); }

}  // namespace

void PrecisionPolicy::validate() const {
    if (zeta_radius < 8) throw error(errc::precondition, "zeta_radius must be >= 8");
    if (q_terms < 16) throw error(errc::precondition, "q_terms must be >= 16");
    if (!(tol > 0.0)) throw error(errc::precondition, "tol must be positive");
}

cplx eisenstein_g(int k, cplx tau, int q_terms) {
    if (k < 1) throw error(errc::precondition, "weight must be positive");
    const int w = 2 * k;
    double fact = 1.0;
    for (int i = 2; i < w; ++i) fact *= i;
    const double coeff = (k % 2 == 0 ? 2.0 : -2.0) * std::pow(2.0 * pi, w) / fact;
    return 2.0 * std::riemann_zeta(static_cast<double>(w)) +
           coeff * lambert_sigma(w - 1, nome(tau), q_terms);
}

Lattice::Lattice(cplx w1, cplx w2, PrecisionPolicy policy) : w1_(w1), w2_(w2), policy_(policy) {
    policy_.validate();
    area_ = std::imag(std::conj(w1) * w2);
    if (!std::isfinite(area_) || !(area_ > 1e-12 * std::abs(w1) * std::abs(w2))) {
        throw error(errc::degenerate_lattice, "basis is degenerate or not positively oriented");
    }

    // Gauss reduction by T and S moves; U tracks (r1, r2) = (w1, w2) U.
    cplx a = w1, b = w2;
    std::int64_t u00 = 1, u01 = 0, u10 = 0, u11 = 1;
    for (int iter = 0; iter < 10000; ++iter) {
        const double shift = std::round(std::real(b / a));
        if (shift != 0.0) {
            const auto n = static_cast<std::int64_t>(shift);
            b -= shift * a;
            u01 -= n * u00;
            u11 -= n * u10;
        }
        if (std::abs(b) < std::abs(a) * (1.0 - 1e-14)) {
            const cplx t = a;
            a = b;
            b = -t;
            std::swap(u00, u01);
            std::swap(u10, u11);
            u01 = -u01;
            u11 = -u11;
        } else {
            break;
        }
    }
    r1_ = a;
    r2_ = b;
    u_ = {u00, u01, u10, u11};

    const cplx tau_r = r2_ / r1_;
    const int R = policy_.zeta_radius;
    half_shell_.reserve(static_cast<std::size_t>(2 * R * (R + 1)));
    for (int m = 0; m <= R; ++m) {
        for (int n = -R; n <= R; ++n) {
            if (m == 0 && n <= 0) continue;
            half_shell_.push_back(static_cast<double>(m) * r1_ + static_cast<double>(n) * r2_);
        }
    }

    for (int k = 2; k <= tail_terms; ++k) {
        cplx inner = 0.0;
        for (const cplx& w : half_shell_) inner += std::pow(w, -2 * k);
        tail_[k] = eisenstein_g(k, tau_r, policy_.q_terms) / std::pow(r1_, 2 * k) - 2.0 * inner;
    }

    // First omitted Laurent term, integrated over the plane outside the shells.
    const double height = area_ / std::max(std::abs(r1_), std::abs(r2_));
    const double rho = (R + 1) * height;
    const double zmax = 0.5 * (std::abs(r1_) + std::abs(r2_));
    const int e = 2 * tail_terms + 2;
    tail_bound_ = 2.0 * pi / (area_ * (e - 2)) * std::pow(zmax, e - 1) / std::pow(rho, e - 2);

    s2_ = (eisenstein_g(1, tau_r, policy_.q_terms) - pi / std::imag(tau_r)) / (r1_ * r1_);

    eta_r1_ = 2.0 * zeta_local(0.5 * r1_);
    eta_r2_ = 2.0 * zeta_local(0.5 * r2_);
    // (w1, w2) = (r1, r2) U^{-1}, U^{-1} = [[u11, -u01], [-u10, u00]]
    eta1_ = static_cast<double>(u11) * eta_r1_ - static_cast<double>(u10) * eta_r2_;
    eta2_ = -static_cast<double>(u01) * eta_r1_ + static_cast<double>(u00) * eta_r2_;
}

Lattice Lattice::of_order(const QuadOrder& order, PrecisionPolicy policy) {
    return Lattice(1.0, order.theta(), policy);
}

Lattice Lattice::scaled(cplx c) const { return Lattice(c * w1_, c * w2_, policy_); }

LatticeCoords Lattice::coords(cplx z) const { return solve_coords(z, w1_, w2_, area_); }

Lattice::Reduction Lattice::reduce(cplx z) const {
    const LatticeCoords c = solve_coords(z, r1_, r2_, area_);
    const double m = std::round(c.x);
    const double n = std::round(c.y);
    return {z - m * r1_ - n * r2_, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)};
}

bool Lattice::is_lattice_point(cplx z) const {
    return std::abs(reduce(z).z0) <= policy_.tol * std::abs(r1_);
}

cplx Lattice::zeta_local(cplx z) const {
    // Pairing w with -w: 1/(z-w) + 1/(z+w) + 2z/w^2 = 2 z^3 / ((z^2 - w^2) w^2).
    const cplx z2 = z * z;
    cplx sum = 0.0;
    for (const cplx& w : half_shell_) {
        const cplx w2 = w * w;
        sum += 1.0 / ((z2 - w2) * w2);
    }
    sum *= 2.0 * z2 * z;

    // Outside the shells: sum_{w} [...] = -sum_k z^{2k-1} sum_{w} w^{-2k}.
    cplx tail = 0.0;
    cplx zp = z2 * z;
    for (int k = 2; k <= tail_terms; ++k) {
        tail += tail_[k] * zp;
        zp *= z2;
    }
    return 1.0 / z + sum - tail;
}

double area(const Lattice& L) { return L.area(); }

cplx weierstrass_zeta(cplx z, const Lattice& L) {
    const Lattice::Reduction red = L.reduce(z);
    if (std::abs(red.z0) <= L.precision().tol * std::abs(L.reduced1())) {
        throw error(errc::pole, "zeta evaluated at a lattice point");
    }
    return L.zeta_local(red.z0) + static_cast<double>(red.m) * L.reduced_eta1() +
           static_cast<double>(red.n) * L.reduced_eta2();
}

std::pair<cplx, cplx> quasi_periods(const Lattice& L) { return {L.eta1(), L.eta2()}; }

cplx e2_zero(const Lattice& L) { return L.s2(); }

cplx e1(cplx z, const Lattice& L) {
    const Lattice::Reduction red = L.reduce(z);
    if (std::abs(red.z0) <= L.precision().tol * std::abs(L.reduced1())) return 0.0;
    return weierstrass_zeta(z, L) - L.s2() * z - (pi / L.area()) * std::conj(z);
}

cplx e1_coords(double x, double y, const Lattice& L) { return e1(L.point(x, y), L); }

cplx j_invariant(const Lattice& L) {
    const int Q = L.precision().q_terms;
    const cplx q = nome(L.reduced_tau());
    const cplx e4 = 1.0 + 240.0 * lambert_sigma(3, q, Q);
    cplx delta = q;
    cplx qn = 1.0;
    for (int n = 1; n <= Q; ++n) {
        qn *= q;
        delta *= std::pow(1.0 - qn, 24);
    }
    if (!std::isfinite(std::abs(delta)) || std::abs(delta) < 1e-290) {
        throw error(errc::precision, "discriminant vanished numerically");
    }
    return e4 * e4 * e4 / delta;
}

}  // namespace edsum
