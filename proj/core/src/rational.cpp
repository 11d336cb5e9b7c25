#include "schw/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace schw {

Rational::Rational(long n, long d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ArithmeticError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ArithmeticError("bad rational literal: " + s);
        if (sgn(q.get_den()) == 0) throw ArithmeticError("rational with zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool neg = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }

    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exponent = std::strtol(s.c_str() + pos + 1, nullptr, 10);
            break;
        } else {
            throw ArithmeticError("bad numeric literal: " + s);
        }
    }
    if (!seen_digit) throw ArithmeticError("bad numeric literal: " + s);

    mpz_class num(digits.empty() ? "0" : digits, 10);
    if (neg) num = -num;
    long ten_power = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(ten_power)));
    mpq_class q;
    if (ten_power >= 0) {
        q = mpq_class(num * scale);
    } else {
        q = mpq_class(num, scale);
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

bool Rational::is_dyadic() const {
    return mpz_popcount(v_.get_den().get_mpz_t()) == 1;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::latex() const {
    if (is_integer()) return v_.get_num().get_str();
    std::string sign = is_negative() ? "-" : "";
    mpz_class n = ::abs(v_.get_num());
    return sign + "\\frac{" + n.get_str() + "}{" + v_.get_den().get_str() + "}";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    Rational n2 = o.norm2();
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = im.is_one() ? "i" : (im == Rational(-1) ? "-i" : im.str() + "i");
    if (re.is_zero()) return imag;
    if (!im.is_negative()) return re.str() + "+" + imag;
    return re.str() + imag;
}

double abs_upper(const GaussianRational& z) {
    return std::abs(z.re.to_double()) + std::abs(z.im.to_double());
}

}  // namespace schw
