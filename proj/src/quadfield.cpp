#include "ramper/quadfield.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ramper {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<long> padic_valuation(const mpq_class& q, long p) {
    if (q == 0) return std::nullopt;
    long v = 0;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
        den /= p;
        --v;
    }
    return v;
}

QuadElem::QuadElem(long p, mpq_class x, mpq_class y)
    : p_(p), x_(std::move(x)), y_(std::move(y)) {
    if (p < 2 || !is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("QuadElem: p must be a prime congruent to 1 mod 4");
    x_.canonicalize();
    y_.canonicalize();
}

QuadElem::QuadElem(unchecked, long p, mpq_class x, mpq_class y)
    : p_(p), x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
}

void QuadElem::require_same_field(const QuadElem& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("QuadElem: mixed fields Q(sqrt" + std::to_string(p_) +
                                    ") and Q(sqrt" + std::to_string(o.p_) + ")");
}

QuadElem QuadElem::conjugate() const { return QuadElem(unchecked{}, p_, x_, -y_); }

mpq_class QuadElem::norm() const { return x_ * x_ - p_ * y_ * y_; }

std::optional<long> QuadElem::valuation_ramified() const {
    auto vx = padic_valuation(x_, p_);
    auto vy = padic_valuation(y_, p_);
    if (!vx && !vy) return std::nullopt;
    if (!vx) return 2 * *vy + 1;
    if (!vy) return 2 * *vx;
    return std::min(2 * *vx, 2 * *vy + 1);
}

long QuadElem::residue() const {
    auto v = valuation_ramified();
    if (v != 0)
        throw std::domain_error("residue: element is not a unit at the ramified prime");
    // v = 0 forces v_p(x) = 0, so x mod p is well defined and nonzero
    mpz_class den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), x_.get_den().get_mpz_t(), mpz_class(p_).get_mpz_t()))
        throw std::domain_error("residue: denominator not invertible mod p");
    mpz_class r = x_.get_num() * den_inv;
    mpz_class m = r % p_;
    if (m < 0) m += p_;
    return m.get_si();
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw std::domain_error("QuadElem: inverse of zero");
    mpq_class n = norm();  // nonzero: p is not a rational square
    return QuadElem(unchecked{}, p_, x_ / n, -y_ / n);
}

QuadElem QuadElem::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QuadElem base = *this;
    QuadElem acc(unchecked{}, p_, 1, 0);
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

QuadElem QuadElem::operator-() const { return QuadElem(unchecked{}, p_, -x_, -y_); }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    require_same_field(o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    require_same_field(o);
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    require_same_field(o);
    mpq_class nx = x_ * o.x_ + p_ * y_ * o.y_;
    mpq_class ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

namespace {

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

}  // namespace

std::string QuadElem::to_string() const {
    mpq_class ay = y_ < 0 ? mpq_class(-y_) : y_;
    return rational_str(x_) + (y_ < 0 ? "-" : "+") + rational_str(ay) + "*sqrt" +
           std::to_string(p_);
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e) { return os << e.to_string(); }

}  // namespace ramper
