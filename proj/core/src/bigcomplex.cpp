#include "schw/bigcomplex.hpp"

#include <cmath>
#include <utility>

namespace schw {

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    equalize_precision();
}

BigComplex::BigComplex(double re, double im, int precision)
    : re_(re, precision), im_(im, precision) {}

BigComplex::BigComplex(const GaussianRational& value, int precision)
    : re_(value.re, precision), im_(value.im, precision) {}

void BigComplex::equalize_precision() {
    // keep both components at the promoted precision so later ops are uniform
    if (re_.precision() != im_.precision()) {
        if (re_.precision() < im_.precision()) {
            re_ = re_ + BigFloat(0L, im_.precision());
        } else {
            im_ = im_ + BigFloat(0L, re_.precision());
        }
    }
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    BigFloat n2 = b.modulus_squared();
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                      (a.im_ * b.re_ - a.re_ * b.im_) / n2);
}

BigComplex BigComplex::exp() const {
    BigFloat m = re_.exp();
    return BigComplex(m * im_.cos(), m * im_.sin());
}

BigComplex BigComplex::log() const {
    if (is_zero()) throw AnalyticError("log of zero");
    return BigComplex(modulus().log(), BigFloat::atan2(im_, re_));
}

BigComplex BigComplex::pow_int(long e) const {
    if (e < 0) return BigComplex(1L) / pow_int(-e);
    BigComplex acc(1L);
    BigComplex base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    return acc;
}

std::string BigComplex::str(int digits) const {
    if (im_.is_zero()) return re_.str(digits);
    std::string im_part = im_.abs().str(digits) + "i";
    std::string sign = im_.sign() < 0 ? "-" : "+";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im_part;
    return re_.str(digits) + sign + im_part;
}

double abs_upper(const BigComplex& z) {
    return std::abs(z.re().to_double()) + std::abs(z.im().to_double());
}

}  // namespace schw
