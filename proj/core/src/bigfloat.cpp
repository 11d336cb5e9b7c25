#include "schw/bigfloat.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace schw {

namespace {
std::atomic<int> g_default_precision{128};
}

int BigFloat::default_precision() { return g_default_precision.load(std::memory_order_relaxed); }

void BigFloat::set_default_precision(int bits) {
    if (bits < kMinPrecision) {
        throw std::invalid_argument("floating precision must be at least 80 bits");
    }
    g_default_precision.store(bits, std::memory_order_relaxed);
}

BigFloat::BigFloat(int precision, std::nullptr_t) {
    mpfr_init2(v_, precision);
}

BigFloat::BigFloat(double value, int precision) : BigFloat(precision, nullptr) {
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int precision) : BigFloat(precision, nullptr) {
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, int precision) : BigFloat(precision, nullptr) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : BigFloat(o.precision(), nullptr) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

int BigFloat::promoted(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision(), nullptr);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::promoted(a, b), nullptr);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::promoted(a, b), nullptr);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::promoted(a, b), nullptr);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    BigFloat r(BigFloat::promoted(a, b), nullptr);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision(), nullptr);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw AnalyticError("sqrt of negative value");
    BigFloat r(precision(), nullptr);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision(), nullptr);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    if (sign() <= 0) throw AnalyticError("log of non-positive value");
    BigFloat r(precision(), nullptr);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(precision(), nullptr);
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(precision(), nullptr);
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(promoted(y, x), nullptr);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(promoted(x, y), nullptr);
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    if (digits <= 0) {
        // enough digits to round-trip the mantissa
        digits = static_cast<int>(precision() * 0.3010299957) + 2;
    }
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace schw
