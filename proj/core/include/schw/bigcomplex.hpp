#pragma once

#include <string>

#include "schw/bigfloat.hpp"
#include "schw/rational.hpp"

namespace schw {

/// Complex number over BigFloat. Precision promotes through operations the
/// same way BigFloat does; both components always share one precision.
class BigComplex {
public:
    BigComplex() = default;
    BigComplex(BigFloat re, BigFloat im);
    explicit BigComplex(double re, double im = 0.0, int precision = BigFloat::default_precision());
    explicit BigComplex(const GaussianRational& value, int precision = BigFloat::default_precision());
    BigComplex(long value) : re_(value), im_(0L) {}  // NOLINT(google-explicit-constructor)

    static BigComplex i() { return BigComplex(0.0, 1.0); }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    int precision() const { return re_.precision(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigFloat modulus() const { return BigFloat::hypot(re_, im_); }
    BigFloat modulus_squared() const { return re_ * re_ + im_ * im_; }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    BigComplex exp() const;
    /// Principal branch; throws AnalyticError at 0.
    BigComplex log() const;
    BigComplex pow_int(long e) const;

    std::string str(int digits = 0) const;

private:
    void equalize_precision();

    BigFloat re_;
    BigFloat im_;
};

inline BigComplex conj(const BigComplex& z) { return z.conj(); }
inline bool is_zero(const BigComplex& z) { return z.is_zero(); }

double abs_upper(const BigComplex& z);

}  // namespace schw
