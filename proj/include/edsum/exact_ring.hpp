#pragma once

// Exact arithmetic in imaginary quadratic orders O = Z[theta],
// theta = f * (d_K + sqrt(d_K)) / 2.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace edsum {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

/// An imaginary quadratic order, identified by the fundamental discriminant
/// of its field and its conductor.
class QuadOrder {
public:
    /// Throws errc::invalid_order unless d_K is a negative fundamental
    /// discriminant and f >= 1.
    QuadOrder(std::int64_t d_K, std::int64_t conductor = 1);

    std::int64_t d_K() const noexcept { return d_K_; }
    std::int64_t conductor() const noexcept { return f_; }
    std::int64_t d_L() const noexcept { return f_ * f_ * d_K_; }

    /// theta + conj(theta) = f * d_K
    std::int64_t theta_trace() const noexcept { return f_ * d_K_; }
    /// theta * conj(theta) = f^2 (d_K^2 - d_K) / 4
    std::int64_t theta_norm() const noexcept { return f_ * f_ * ((d_K_ * d_K_ - d_K_) / 4); }

    cplx theta() const;

    /// True for the five orders where division with remainder decreases the norm.
    bool is_norm_euclidean() const noexcept;

    /// Z[i] and Z[rho]: the orders with extra units, where E_2(0) vanishes.
    bool is_excluded() const noexcept { return f_ == 1 && (d_K_ == -3 || d_K_ == -4); }

    friend bool operator==(const QuadOrder&, const QuadOrder&) = default;

private:
    std::int64_t d_K_;
    std::int64_t f_;
};

bool is_fundamental_discriminant(std::int64_t d);

/// u + v*theta in the given order.
class OrderElem {
public:
    OrderElem(const QuadOrder& order, bigint u = 0, bigint v = 0)
        : order_(order), u_(std::move(u)), v_(std::move(v)) {}

    const QuadOrder& order() const noexcept { return order_; }
    const bigint& u() const noexcept { return u_; }
    const bigint& v() const noexcept { return v_; }

    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool is_rational_integer() const { return v_ == 0; }

    /// N(u + v theta) = u^2 + u v f d_K + v^2 f^2 (d_K^2 - d_K)/4
    bigint norm() const;
    OrderElem conj() const;
    bigint trace() const;
    cplx embed() const;

    OrderElem operator-() const { return {order_, -u_, -v_}; }
    OrderElem& operator+=(const OrderElem& o);
    OrderElem& operator-=(const OrderElem& o);
    OrderElem& operator*=(const OrderElem& o);
    OrderElem& operator*=(const bigint& s);

    friend OrderElem operator+(OrderElem a, const OrderElem& b) { return a += b; }
    friend OrderElem operator-(OrderElem a, const OrderElem& b) { return a -= b; }
    friend OrderElem operator*(OrderElem a, const OrderElem& b) { return a *= b; }
    friend OrderElem operator*(OrderElem a, const bigint& s) { return a *= s; }
    friend OrderElem operator*(const bigint& s, OrderElem a) { return a *= s; }

    friend bool operator==(const OrderElem& a, const OrderElem& b);

    std::string str() const;

private:
    void check_same(const OrderElem& o) const;

    QuadOrder order_;
    bigint u_;
    bigint v_;
};

std::ostream& operator<<(std::ostream& os, const OrderElem& a);

/// sqrt(d_L) = f sqrt(d_K) = 2 theta - f d_K, which lies in every order.
OrderElem sqrt_dL(const QuadOrder& order);

/// Exact quotient a / b if b divides a in the order.
std::optional<OrderElem> exact_divide(const OrderElem& a, const OrderElem& b);

bool divides(const OrderElem& b, const OrderElem& a);

/// Exact field quotient a / b as rational coordinates in the theta basis.
std::pair<rational, rational> field_quotient(const OrderElem& a, const OrderElem& b);

/// Element of the order closest to a / b. The theta coordinate is rounded
/// first, then the rational part, both to nearest with ties toward zero;
/// the remainder a - q b then has norm < N(b) in the norm-Euclidean orders.
OrderElem nearest_quotient(const OrderElem& a, const OrderElem& b);

/// a reduced modulo b to a representative of small norm.
OrderElem reduce_mod(const OrderElem& a, const OrderElem& b);

struct OrderGcd {
    OrderElem g;
    OrderElem x;
    OrderElem y;
};

/// a x + b y = g, with g a generator of the ideal (a, b).
/// Throws errc::unsupported_order outside the norm-Euclidean orders.
OrderGcd egcd_order(const OrderElem& a, const OrderElem& b);

/// Nearest integer to n/d, ties toward zero (d != 0).
bigint round_div(const bigint& n, const bigint& d);
bigint round_rational(const rational& q);

}  // namespace edsum
