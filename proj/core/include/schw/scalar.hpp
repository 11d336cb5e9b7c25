#pragma once

#include "schw/bigcomplex.hpp"
#include "schw/rational.hpp"

namespace schw {

/// Compile-time description of a scalar backend. The two backends are
/// GaussianRational (exact) and BigComplex (correctly rounded at the working
/// precision). All jet and invariant code is generic over this.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational from_rational(const Rational& r) { return GaussianRational(r); }
    static GaussianRational from_long(long n) { return GaussianRational(n); }
    static std::string str(const GaussianRational& v) { return v.str(); }
};

template <>
struct ScalarTraits<BigComplex> {
    static constexpr bool exact = false;
    static BigComplex from_rational(const Rational& r) { return BigComplex(GaussianRational(r)); }
    static BigComplex from_long(long n) { return BigComplex(n); }
    static std::string str(const BigComplex& v) { return v.str(); }
};

template <class T>
T scalar_from_rational(const Rational& r) {
    return ScalarTraits<T>::from_rational(r);
}

template <class T>
T scalar_from_long(long n) {
    return ScalarTraits<T>::from_long(n);
}

/// Converts an exact complex rational into backend scalar T.
template <class T>
T scalar_from_gaussian(const GaussianRational& v);

template <>
inline GaussianRational scalar_from_gaussian<GaussianRational>(const GaussianRational& v) {
    return v;
}

template <>
inline BigComplex scalar_from_gaussian<BigComplex>(const GaussianRational& v) {
    return BigComplex(v);
}

}  // namespace schw
