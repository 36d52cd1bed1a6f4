#include <doctest.h>

#include <numbers>
#include <random>

#include "edsum/errors.hpp"
#include "edsum/lattice.hpp"
#include "oracles/lattice_sums.hpp"

using namespace edsum;

namespace {

constexpr double pi = std::numbers::pi;

Lattice lattice(double re, double im) { return Lattice(1.0, cplx(re, im)); }

}  // namespace

TEST_CASE("degenerate and negatively oriented bases are rejected") {
    for (cplx w2 : {cplx(2.0, 0.0), cplx(0.0, -1.0), cplx(0.0, 0.0)}) {
        try {
            Lattice L(1.0, w2);
            FAIL("accepted");
        } catch (const error& e) {
            CHECK(e.code() == errc::degenerate_lattice);
        }
    }
    PrecisionPolicy bad;
    bad.zeta_radius = 2;
    CHECK_THROWS_AS(Lattice(1.0, cplx(0, 1), bad), error);
}

TEST_CASE("zeta agrees with its defining series") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (const Lattice& L : {lattice(0.0, std::sqrt(2.0)), lattice(0.5, std::sqrt(7.0) / 2), lattice(0.3, 0.9),
                             Lattice(cplx(2.0, 1.0), cplx(-3.0, 4.0))}) {
        for (int i = 0; i < 6; ++i) {
            const cplx z = L.point(u(rng), u(rng));
            const cplx lib = weierstrass_zeta(z, L);
            const cplx direct = oracle::zeta_direct(z, L.omega1(), L.omega2(), 300.0 * std::abs(L.omega1()));
            CHECK(std::abs(lib - direct) < 1e-6 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("zeta is odd, has a pole at lattice points and shifts by quasi-periods") {
    const Lattice L = lattice(0.5, std::sqrt(7.0) / 2);
    const auto [eta1, eta2] = quasi_periods(L);
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.33, 0.41), cplx(1.7, -2.2)}) {
        const cplx zz = weierstrass_zeta(z, L);
        CHECK(std::abs(weierstrass_zeta(-z, L) + zz) < 1e-10 * (1 + std::abs(zz)));
        CHECK(std::abs(weierstrass_zeta(z + L.omega1(), L) - zz - eta1) < 1e-9 * (1 + std::abs(zz)));
        CHECK(std::abs(weierstrass_zeta(z + L.omega2(), L) - zz - eta2) < 1e-9 * (1 + std::abs(zz)));
    }
    try {
        weierstrass_zeta(L.omega1() + L.omega2(), L);
        FAIL("accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::pole);
    }
}

TEST_CASE("Legendre relation") {
    for (const Lattice& L : {lattice(0.0, 1.0), lattice(0.5, std::sqrt(3.0) / 2), lattice(0.0, std::sqrt(5.0)),
                             Lattice(cplx(2.0, 1.0), cplx(-3.0, 4.0)), lattice(0.49, 3.1)}) {
        const auto [eta1, eta2] = quasi_periods(L);
        CHECK(std::abs(eta1 * L.omega2() - eta2 * L.omega1() - cplx(0, 2 * pi)) < 1e-9);
    }
}

TEST_CASE("E_2(0) matches the Hecke limit") {
    const std::vector<double> nodes{0.5, 0.25, 0.125, 0.0625};
    for (double D : {2.0, 5.0}) {
        const Lattice L = lattice(0.0, std::sqrt(D));
        const cplx lib = e2_zero(L);
        const cplx ref = oracle::hecke_e2(L.omega1(), L.omega2(), 1500.0, nodes);
        CAPTURE(D);
        CHECK(std::abs(lib - ref) < 1e-4);
        CHECK(std::abs(lib.imag()) < 1e-12);
        CHECK(lib.real() > 0.0);
    }
}

TEST_CASE("E_2(0) is homogeneous of weight 2 and basis independent") {
    const Lattice L = lattice(0.5, std::sqrt(7.0) / 2);
    const cplx c(1.3, -0.7);
    CHECK(std::abs(e2_zero(L.scaled(c)) - e2_zero(L) / (c * c)) < 1e-10);
    // Same lattice, different basis.
    const Lattice M(L.omega1() + 3.0 * L.omega2(), L.omega1() + 4.0 * L.omega2());
    CHECK(std::abs(e2_zero(M) - e2_zero(L)) < 1e-10);
}

TEST_CASE("E_2(0) vanishes on the square and hexagonal lattices") {
    CHECK(std::abs(e2_zero(lattice(0.0, 1.0))) < 1e-12);
    CHECK(std::abs(e2_zero(lattice(0.5, std::sqrt(3.0) / 2))) < 1e-12);
    CHECK(std::abs(e2_zero(lattice(0.0, std::sqrt(2.0)))) > 0.5);
}

TEST_CASE("j-invariant at CM points") {
    CHECK(std::abs(j_invariant(lattice(0.0, 1.0)) - 1728.0) < 1e-9 * 1728.0);
    CHECK(std::abs(j_invariant(lattice(0.5, std::sqrt(3.0) / 2))) < 1e-6);
    CHECK(std::abs(j_invariant(lattice(0.0, std::sqrt(2.0))) - 8000.0) < 1e-9 * 8000.0);
    CHECK(std::abs(j_invariant(lattice(0.5, std::sqrt(7.0) / 2)) + 3375.0) < 1e-9 * 3375.0);
    CHECK(std::abs(j_invariant(lattice(0.5, std::sqrt(11.0) / 2)) + 32768.0) < 1e-9 * 32768.0);
    CHECK(std::abs(j_invariant(lattice(0.5, std::sqrt(163.0) / 2)) + 262537412640768000.0) < 1e-9 * 2.7e17);
    // Class number two: j(sqrt(-5)) = 632000 + 282880 sqrt(5).
    const double j5 = 632000.0 + 282880.0 * std::sqrt(5.0);
    CHECK(std::abs(j_invariant(lattice(0.0, std::sqrt(5.0))) - j5) < 1e-9 * j5);
    // j depends only on the lattice up to scaling.
    const Lattice L = lattice(0.2, 1.1);
    CHECK(std::abs(j_invariant(L.scaled(cplx(0.3, 2.0))) - j_invariant(L)) < 1e-8 * std::abs(j_invariant(L)));
}

TEST_CASE("E_1 is periodic, odd and vanishes at half periods") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::uniform_int_distribution<int> s(-4, 4);
    for (const Lattice& L : {lattice(0.0, std::sqrt(2.0)), lattice(0.5, std::sqrt(7.0) / 2),
                             Lattice(cplx(2.0, 1.0), cplx(-3.0, 4.0))}) {
        for (int i = 0; i < 50; ++i) {
            const cplx z = L.point(u(rng), u(rng));
            const cplx w = L.point(s(rng), s(rng));
            const cplx v = e1(z, L);
            CHECK(std::abs(e1(z + w, L) - v) < 1e-9 * (1 + std::abs(v)));
            CHECK(std::abs(e1(-z, L) + v) < 1e-9 * (1 + std::abs(v)));
            CHECK(std::abs(e1_coords(L.coords(z).x, L.coords(z).y, L) - v) < 1e-9 * (1 + std::abs(v)));
        }
        for (cplx h : {0.5 * L.omega1(), 0.5 * L.omega2(), 0.5 * (L.omega1() + L.omega2())}) {
            CHECK(std::abs(e1(h, L)) < 1e-9);
        }
        CHECK(e1(L.omega1() * 3.0 - L.omega2(), L) == cplx(0.0, 0.0));
    }
}

TEST_CASE("E_1 is homogeneous of weight 1") {
    const Lattice L = lattice(0.5, std::sqrt(7.0) / 2);
    const cplx c(0.4, 1.7);
    for (cplx z : {cplx(0.1, 0.3), cplx(-0.2, 0.05)}) {
        CHECK(std::abs(e1(c * z, L.scaled(c)) - e1(z, L) / c) < 1e-10);
    }
}

TEST_CASE("reduction lands in the centred cell") {
    const Lattice L(cplx(2.0, 1.0), cplx(-3.0, 4.0));
    const cplx z(17.3, -8.9);
    const Lattice::Reduction r = L.reduce(z);
    CHECK(std::abs(r.z0 + static_cast<double>(r.m) * L.reduced1() + static_cast<double>(r.n) * L.reduced2() - z) <
          1e-9);
    CHECK(L.is_lattice_point(L.point(5, -7)));
    CHECK_FALSE(L.is_lattice_point(L.point(5.5, -7)));
    const LatticeCoords c = L.coords(L.point(0.25, -0.75));
    CHECK(c.x == doctest::Approx(0.25));
    CHECK(c.y == doctest::Approx(-0.75));
}

TEST_CASE("Eisenstein series satisfy the j identity") {
    const cplx tau(0.1, 1.3);
    const cplx g4 = eisenstein_g(2, tau, 64);
    const cplx g6 = eisenstein_g(3, tau, 64);
    const cplx g2 = 60.0 * g4, g3 = 140.0 * g6;
    const cplx j = 1728.0 * g2 * g2 * g2 / (g2 * g2 * g2 - 27.0 * g3 * g3);
    const cplx lib = j_invariant(Lattice(1.0, tau));
    CHECK(std::abs(j - lib) < 1e-8 * std::abs(lib));
}
