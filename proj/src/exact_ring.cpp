#include "edsum/exact_ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "edsum/errors.hpp"

namespace edsum {

namespace {

bool is_squarefree(std::int64_t n) {
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

std::int64_t mod4(std::int64_t n) { return ((n % 4) + 4) % 4; }

}  // namespace

bool is_fundamental_discriminant(std::int64_t d) {
    if (d >= 0) return false;
    if (mod4(d) == 1) return is_squarefree(d);
    if (mod4(d) == 0) {
        std::int64_t m = d / 4;
        return (mod4(m) == 2 || mod4(m) == 3) && is_squarefree(m);
    }
    return false;
}

QuadOrder::QuadOrder(std::int64_t d_K, std::int64_t conductor) : d_K_(d_K), f_(conductor) {
    if (!is_fundamental_discriminant(d_K)) {
        throw error(errc::invalid_order,
                    "d_K = " + std::to_string(d_K) + " is not a negative fundamental discriminant");
    }
    if (conductor < 1) {
        throw error(errc::invalid_order, "conductor must be >= 1");
    }
}

cplx QuadOrder::theta() const {
    const double f = static_cast<double>(f_);
    return {f * static_cast<double>(d_K_) / 2.0,
            f * std::sqrt(static_cast<double>(-d_K_)) / 2.0};
}

bool QuadOrder::is_norm_euclidean() const noexcept {
    if (f_ != 1) return false;
    switch (d_K_) {
    case -3: case -4: case -7: case -8: case -11: return true;
    default: return false;
    }
}

void OrderElem::check_same(const OrderElem& o) const {
    if (!(order_ == o.order_)) {
        throw error(errc::order_mismatch, "operands belong to different orders");
    }
}

bigint OrderElem::norm() const {
    return u_ * u_ + u_ * v_ * order_.theta_trace() + v_ * v_ * order_.theta_norm();
}

OrderElem OrderElem::conj() const {
    // conj(theta) = trace - theta
    return {order_, u_ + v_ * order_.theta_trace(), -v_};
}

bigint OrderElem::trace() const { return 2 * u_ + v_ * order_.theta_trace(); }

cplx OrderElem::embed() const {
    const bigint twice_re = 2 * u_ + v_ * order_.theta_trace();
    const double re = static_cast<double>(twice_re) / 2.0;
    const double im = static_cast<double>(v_) * static_cast<double>(order_.conductor()) *
                      std::sqrt(static_cast<double>(-order_.d_K())) / 2.0;
    return {re, im};
}

OrderElem& OrderElem::operator+=(const OrderElem& o) {
    check_same(o);
    u_ += o.u_;
    v_ += o.v_;
    return *this;
}

OrderElem& OrderElem::operator-=(const OrderElem& o) {
    check_same(o);
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
}

OrderElem& OrderElem::operator*=(const OrderElem& o) {
    check_same(o);
    // theta^2 = t theta - n
    const bigint vv = v_ * o.v_;
    bigint u = u_ * o.u_ - vv * order_.theta_norm();
    bigint v = u_ * o.v_ + v_ * o.u_ + vv * order_.theta_trace();
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

OrderElem& OrderElem::operator*=(const bigint& s) {
    u_ *= s;
    v_ *= s;
    return *this;
}

bool operator==(const OrderElem& a, const OrderElem& b) {
    return a.order_ == b.order_ && a.u_ == b.u_ && a.v_ == b.v_;
}

std::string OrderElem::str() const {
    std::ostringstream os;
    os << "(" << u_ << "," << v_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const OrderElem& a) { return os << a.str(); }

OrderElem sqrt_dL(const QuadOrder& order) {
    return {order, bigint(-order.theta_trace()), bigint(2)};
}

std::pair<rational, rational> field_quotient(const OrderElem& a, const OrderElem& b) {
    if (b.is_zero()) throw error(errc::zero_divisor, "division by zero");
    const OrderElem num = a * b.conj();
    const bigint n = b.norm();
    return {rational(num.u(), n), rational(num.v(), n)};
}

std::optional<OrderElem> exact_divide(const OrderElem& a, const OrderElem& b) {
    if (b.is_zero()) throw error(errc::zero_divisor, "division by zero");
    const OrderElem num = a * b.conj();
    const bigint n = b.norm();
    if (num.u() % n != 0 || num.v() % n != 0) return std::nullopt;
    return OrderElem(a.order(), num.u() / n, num.v() / n);
}

bool divides(const OrderElem& b, const OrderElem& a) { return exact_divide(a, b).has_value(); }

bigint round_div(const bigint& n, const bigint& d) {
    if (d == 0) throw error(errc::zero_divisor, "division by zero");
    const bool negative = (n < 0) != (d < 0);
    const bigint an = abs(n);
    const bigint ad = abs(d);
    bigint q = an / ad;
    const bigint r = an - q * ad;
    if (2 * r > ad) ++q;
    return negative ? bigint(-q) : q;
}

bigint round_rational(const rational& q) {
    return round_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

OrderElem nearest_quotient(const OrderElem& a, const OrderElem& b) {
    if (b.is_zero()) throw error(errc::zero_divisor, "division by zero");
    const OrderElem num = a * b.conj();
    const bigint n = b.norm();
    const bigint v = round_div(num.v(), n);
    // real part of (num/n - v theta) is (2X + (Y - v n) t) / (2n)
    const bigint u = round_div(2 * num.u() + (num.v() - v * n) * a.order().theta_trace(), 2 * n);
    return {a.order(), u, v};
}

OrderElem reduce_mod(const OrderElem& a, const OrderElem& b) {
    return a - b * nearest_quotient(a, b);
}

OrderGcd egcd_order(const OrderElem& a, const OrderElem& b) {
    const QuadOrder& order = a.order();
    if (!(order == b.order())) throw error(errc::order_mismatch, "operands belong to different orders");
    if (!order.is_norm_euclidean()) {
        throw error(errc::unsupported_order,
                    "egcd in O requires a norm-Euclidean order (d_K in {-3,-4,-7,-8,-11}, f = 1)");
    }
    OrderElem r0 = a, r1 = b;
    OrderElem x0(order, 1), x1(order, 0);
    OrderElem y0(order, 0), y1(order, 1);
    while (!r1.is_zero()) {
        const OrderElem q = nearest_quotient(r0, r1);
        OrderElem r2 = r0 - q * r1;
        OrderElem x2 = x0 - q * x1;
        OrderElem y2 = y0 - q * y1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        x0 = std::move(x1);
        x1 = std::move(x2);
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    return {r0, x0, y0};
}

}  // namespace edsum
