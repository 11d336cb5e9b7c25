#pragma once

#include <mpfr.h>

#include <string>

#include "schw/error.hpp"
#include "schw/rational.hpp"

namespace schw {

/// Floating-point real with a per-value mantissa precision (>= 80 bits).
/// Binary operations round to nearest at the higher precision of the two
/// operands. The process-wide default precision (initially 128 bits) is what
/// fresh values are created with.
class BigFloat {
public:
    static constexpr int kMinPrecision = 80;

    static int default_precision();
    /// Throws std::invalid_argument below the 80-bit floor.
    static void set_default_precision(int bits);

    BigFloat() : BigFloat(0.0, default_precision()) {}
    explicit BigFloat(double value, int precision = default_precision());
    explicit BigFloat(const Rational& value, int precision = default_precision());
    explicit BigFloat(long value, int precision = default_precision());

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    BigFloat abs() const;
    /// Throws AnalyticError for negative input.
    BigFloat sqrt() const;
    BigFloat exp() const;
    /// Natural log; throws AnalyticError unless input > 0.
    BigFloat log() const;
    BigFloat sin() const;
    BigFloat cos() const;
    static BigFloat atan2(const BigFloat& y, const BigFloat& x);
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Shortest "%g"-style decimal string with the given significant digits.
    std::string str(int digits = 0) const;

private:
    explicit BigFloat(int precision, std::nullptr_t);  // uninitialized-value ctor
    static int promoted(const BigFloat& a, const BigFloat& b);

    mpfr_t v_;
};

}  // namespace schw
