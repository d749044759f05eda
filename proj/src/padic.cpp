#include "ramper/padic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ramper {

namespace {

mpz_class pow_p(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

PadicNumber::PadicNumber(long p, long val, mpz_class unit, long prec, bool marker)
    : p_(p), val_(val), unit_(std::move(unit)), prec_(prec), marker_(marker) {}

PadicNumber PadicNumber::zero_at(long p, long abs_prec) {
    if (!is_prime(p)) throw std::invalid_argument("PadicNumber: p must be prime");
    return PadicNumber(p, 0, 0, abs_prec, true);
}

// Normalizes (val, residue mod p^(prec-val)) into a unit representation or
// the zero marker; every arithmetic result funnels through here.
PadicNumber PadicNumber::make_value(long p, long val, mpz_class residue, long prec) {
    long rel = prec - val;
    if (rel <= 0) return PadicNumber(p, 0, 0, prec, true);
    mpz_class m = mod_nonneg(residue, pow_p(p, rel));
    if (m == 0) return PadicNumber(p, 0, 0, prec, true);
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        m /= p;
        ++val;
    }
    return PadicNumber(p, val, std::move(m), prec, false);
}

PadicNumber PadicNumber::from_rational(long p, const mpq_class& q, long abs_prec) {
    if (!is_prime(p)) throw std::invalid_argument("PadicNumber: p must be prime");
    auto v = padic_valuation(q, p);
    if (!v || *v >= abs_prec) return PadicNumber(p, 0, 0, abs_prec, true);
    mpz_class num = q.get_num(), den = q.get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) num /= p;
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) den /= p;
    mpz_class mod = pow_p(p, abs_prec - *v);
    mpz_class den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()))
        throw std::logic_error("from_rational: denominator unit not invertible");
    return make_value(p, *v, num * den_inv, abs_prec);
}

PadicNumber PadicNumber::one(long p, long rel_prec) {
    if (rel_prec < 1) throw std::invalid_argument("PadicNumber::one: need precision >= 1");
    return from_rational(p, 1, rel_prec);
}

long PadicNumber::valuation() const {
    if (marker_)
        throw PrecisionError(
            "valuation undecidable: value indistinguishable from 0 at absolute precision " +
                std::to_string(prec_),
            prec_ + 1);
    return val_;
}

const mpz_class& PadicNumber::unit() const {
    if (marker_)
        throw PrecisionError(
            "unit part undefined: value indistinguishable from 0 at absolute precision " +
                std::to_string(prec_),
            prec_ + 1);
    return unit_;
}

std::vector<int> PadicNumber::digits() const {
    if (marker_) return {};
    std::vector<int> out;
    out.reserve(static_cast<size_t>(prec_ - val_));
    mpz_class rest = unit_;
    for (long i = val_; i < prec_; ++i) {
        out.push_back(static_cast<int>(mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p_))));
        rest /= p_;
    }
    return out;
}

int PadicNumber::digit_at(long i) const {
    if (i >= prec_) throw std::invalid_argument("digit_at: index beyond absolute precision");
    if (marker_ || i < val_) return 0;
    mpz_class q = unit_ / pow_p(p_, i - val_);
    return static_cast<int>(mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p_)));
}

PadicNumber PadicNumber::truncated(long abs_prec) const {
    if (abs_prec > prec_)
        throw std::invalid_argument("truncated: cannot raise precision from " +
                                    std::to_string(prec_) + " to " + std::to_string(abs_prec));
    if (marker_) return PadicNumber(p_, 0, 0, abs_prec, true);
    return make_value(p_, val_, unit_, abs_prec);
}

PadicNumber PadicNumber::shifted(long k) const {
    if (marker_) return PadicNumber(p_, 0, 0, prec_ + k, true);
    return PadicNumber(p_, val_ + k, unit_, prec_ + k, false);
}

PadicNumber PadicNumber::inverse() const {
    if (marker_)
        throw PrecisionError(
            "precision loss: inverse of a value indistinguishable from 0 at absolute precision " +
                std::to_string(prec_) + ", rerun with precision above " + std::to_string(prec_),
            prec_ + 1);
    long rel = prec_ - val_;
    mpz_class mod = pow_p(p_, rel);
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()))
        throw std::logic_error("inverse: unit not invertible");
    return PadicNumber(p_, -val_, std::move(inv), -val_ + rel, false);
}

PadicNumber PadicNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return one(p_, marker_ ? std::max(prec_, 1L) : prec_ - val_);
    if (marker_) return PadicNumber(p_, 0, 0, k * prec_, true);
    PadicNumber acc = one(p_, prec_ - val_);
    PadicNumber base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

PadicNumber PadicNumber::operator-() const {
    if (marker_) return *this;
    mpz_class m = pow_p(p_, prec_ - val_);
    return PadicNumber(p_, val_, m - unit_, prec_, false);
}

void PadicNumber::require_same_prime(const PadicNumber& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("PadicNumber: mixed primes " + std::to_string(p_) + " and " +
                                    std::to_string(o.p_));
}

PadicNumber& PadicNumber::operator+=(const PadicNumber& o) {
    require_same_prime(o);
    long n = std::min(prec_, o.prec_);
    if (marker_ && o.marker_) {
        *this = PadicNumber(p_, 0, 0, n, true);
        return *this;
    }
    if (marker_) {
        // this = 0 mod p^prec_ and n <= prec_, so the sum is o mod p^n
        *this = o.truncated(n);
        return *this;
    }
    if (o.marker_) {
        *this = truncated(n);
        return *this;
    }
    long m = std::min(val_, o.val_);
    mpz_class sum = unit_ * pow_p(p_, val_ - m) + o.unit_ * pow_p(p_, o.val_ - m);
    *this = make_value(p_, m, std::move(sum), n);
    return *this;
}

PadicNumber& PadicNumber::operator-=(const PadicNumber& o) { return *this += -o; }

PadicNumber& PadicNumber::operator*=(const PadicNumber& o) {
    require_same_prime(o);
    if (marker_ || o.marker_) {
        // a marker at N times a value of valuation v is 0 mod p^(N+v)
        long bound;
        if (marker_ && o.marker_)
            bound = prec_ + o.prec_;
        else if (marker_)
            bound = prec_ + o.val_;
        else
            bound = val_ + o.prec_;
        *this = PadicNumber(p_, 0, 0, bound, true);
        return *this;
    }
    long rel = std::min(prec_ - val_, o.prec_ - o.val_);
    long v = val_ + o.val_;
    mpz_class prod = unit_ * o.unit_;
    *this = make_value(p_, v, std::move(prod), v + rel);
    return *this;
}

bool operator==(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_ || a.marker_ != b.marker_ || a.prec_ != b.prec_) return false;
    if (a.marker_) return true;
    return a.val_ == b.val_ && a.unit_ == b.unit_;
}

bool PadicNumber::agrees_with(const PadicNumber& o) const {
    return (*this - o).is_zero_at_precision();
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (marker_) {
        os << "O(" << p_ << "^" << prec_ << ")";
    } else {
        os << unit_;
        if (val_ != 0) os << "*" << p_ << "^" << val_;
        os << " + O(" << p_ << "^" << prec_ << ")";
    }
    return os.str();
}

RamifiedElem::RamifiedElem(PadicNumber a, PadicNumber b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.p() != b_.p())
        throw std::invalid_argument("RamifiedElem: components over different primes");
}

RamifiedElem RamifiedElem::embed(const QuadElem& e, long pi_prec) {
    if (pi_prec < 1) throw std::invalid_argument("embed: need pi-precision >= 1");
    long ha = (pi_prec + 1) / 2, hb = pi_prec / 2;
    return RamifiedElem(PadicNumber::from_rational(e.p(), e.x(), ha),
                        PadicNumber::from_rational(e.p(), e.y(), hb));
}

RamifiedElem RamifiedElem::from_padic(const PadicNumber& a) {
    return RamifiedElem(a, PadicNumber::zero_at(a.p(), std::max(a.precision(), 0L)));
}

RamifiedElem RamifiedElem::one(long p, long pi_prec) {
    if (pi_prec < 1) throw std::invalid_argument("one: need pi-precision >= 1");
    long ha = (pi_prec + 1) / 2, hb = pi_prec / 2;
    return RamifiedElem(PadicNumber::one(p, ha), PadicNumber::zero_at(p, hb));
}

long RamifiedElem::precision() const {
    return std::min(2 * a_.precision(), 2 * b_.precision() + 1);
}

bool RamifiedElem::is_zero_at_precision() const {
    return a_.is_zero_at_precision() && b_.is_zero_at_precision();
}

long RamifiedElem::valuation_lower_bound() const {
    return std::min(2 * a_.valuation_lower_bound(), 2 * b_.valuation_lower_bound() + 1);
}

long RamifiedElem::valuation() const {
    if (is_zero_at_precision())
        throw PrecisionError("valuation undecidable: element indistinguishable from 0 at pi-precision " +
                                 std::to_string(precision()),
                             precision() + 1);
    // candidate valuations from the two components; parities differ, so the
    // minimum is never a tie, but a marker component only gives a bound
    long ca = a_.is_zero_at_precision() ? 2 * a_.precision() : 2 * a_.valuation();
    long cb = b_.is_zero_at_precision() ? 2 * b_.precision() + 1 : 2 * b_.valuation() + 1;
    if (ca < cb) {
        if (a_.is_zero_at_precision())
            throw PrecisionError("valuation undecidable at pi-precision " +
                                     std::to_string(precision()),
                                 precision() + 1);
        return ca;
    }
    if (b_.is_zero_at_precision())
        throw PrecisionError("valuation undecidable at pi-precision " +
                                 std::to_string(precision()),
                             precision() + 1);
    return cb;
}

RamifiedElem RamifiedElem::conjugate() const { return RamifiedElem(a_, -b_); }

PadicNumber RamifiedElem::norm() const { return a_ * a_ - (b_ * b_).shifted(1); }

RamifiedElem RamifiedElem::inverse() const {
    PadicNumber n_inv = norm().inverse();
    return RamifiedElem(a_ * n_inv, (-b_) * n_inv);
}

RamifiedElem RamifiedElem::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RamifiedElem acc = one(p(), std::max(precision(), 1L));
    if (k == 0) return acc;
    RamifiedElem base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

RamifiedElem RamifiedElem::truncated(long pi_prec) const {
    if (pi_prec > precision())
        throw std::invalid_argument("truncated: cannot raise pi-precision from " +
                                    std::to_string(precision()) + " to " + std::to_string(pi_prec));
    long ha = (pi_prec + 1) / 2, hb = pi_prec / 2;
    return RamifiedElem(a_.truncated(ha), b_.truncated(hb));
}

std::vector<int> RamifiedElem::pi_digits() const {
    long v = valuation_lower_bound();
    long n = precision();
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::max(n - v, 0L)));
    for (long idx = v; idx < n; ++idx) {
        // even pi-indices read A at p-index idx/2, odd ones read B at (idx-1)/2;
        // both divisions are exact, negative indices included
        if (idx % 2 == 0)
            out.push_back(a_.digit_at(idx / 2));
        else
            out.push_back(b_.digit_at((idx - 1) / 2));
    }
    return out;
}

RamifiedElem RamifiedElem::operator-() const { return RamifiedElem(-a_, -b_); }

RamifiedElem& RamifiedElem::operator+=(const RamifiedElem& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

RamifiedElem& RamifiedElem::operator-=(const RamifiedElem& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

RamifiedElem& RamifiedElem::operator*=(const RamifiedElem& o) {
    PadicNumber na = a_ * o.a_ + (b_ * o.b_).shifted(1);
    PadicNumber nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

bool RamifiedElem::agrees_with(const RamifiedElem& o) const {
    return (*this - o).is_zero_at_precision();
}

std::string RamifiedElem::to_string() const {
    return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*pi";
}

RamifiedElem hensel_root(const RamifiedElem& t, long m, long pi_prec) {
    long p = t.p();
    if (m < 1) throw std::invalid_argument("hensel_root: exponent must be >= 1");
    if (m % p == 0)
        throw std::invalid_argument("hensel_root: exponent shares a factor with p");
    if (pi_prec < 1) throw std::invalid_argument("hensel_root: need pi-precision >= 1");
    if (t.precision() < pi_prec)
        throw PrecisionError("hensel_root: target known only to pi-precision " +
                                 std::to_string(t.precision()) + ", need " +
                                 std::to_string(pi_prec),
                             pi_prec);

    RamifiedElem tw = t.truncated(pi_prec);
    RamifiedElem unit = RamifiedElem::one(p, pi_prec);
    if ((tw - unit).valuation_lower_bound() < 1)
        throw std::invalid_argument("hensel_root: target is not congruent to 1 mod pi");

    PadicNumber m_scalar = PadicNumber::from_rational(p, m, (pi_prec + 1) / 2);

    // Newton for X^m - t from alpha = 1: the residual valuation at least
    // doubles each step, so ceil(log2 pi_prec) + 1 updates always suffice.
    long max_iter = 1;
    for (long w = 1; w < pi_prec; w *= 2) ++max_iter;

    RamifiedElem alpha = unit;
    long res_val = (alpha.pow(m) - tw).valuation_lower_bound();
    for (long it = 0; res_val < pi_prec; ++it) {
        if (it >= max_iter)
            throw std::runtime_error("hensel_root: Newton did not converge at pi-precision " +
                                     std::to_string(pi_prec));
        RamifiedElem residual = alpha.pow(m) - tw;
        RamifiedElem deriv = alpha.pow(m - 1);
        deriv = RamifiedElem(deriv.a() * m_scalar, deriv.b() * m_scalar);
        alpha -= residual * deriv.inverse();
        long next_val = (alpha.pow(m) - tw).valuation_lower_bound();
        if (next_val < std::min(2 * res_val, pi_prec))
            throw std::runtime_error("hensel_root: residual stalled at pi-valuation " +
                                     std::to_string(next_val));
        res_val = next_val;
    }
    return alpha.truncated(pi_prec);
}

}  // namespace ramper
