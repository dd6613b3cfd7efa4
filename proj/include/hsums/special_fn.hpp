#pragma once

#include "hsums/const_combo.hpp"
#include "hsums/rational.hpp"

namespace hsums {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
// Catalan's constant, 30 digits.
inline constexpr double kCatalan = 0.915965594177219015054603514932;

// psi(x). Valid for any x that is not a non-positive integer; relative error
// <= 1e-13 on [1e-3, 1e6]. Argument lifting to x >= 10, then the asymptotic
// log series with Bernoulli terms B2..B20.
double digamma(double x);

// psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x) for n >= 1, x > 0.
double polygamma(int n, double x);

// zeta(s, a) = sum_{k>=0} (a+k)^(-s) for s > 1, a > 0. Argument lifting to
// a >= max(10, 2s) followed by Euler-Maclaurin.
double hurwitz_zeta(double s, double a);

// zeta(s) for s > 1.
double riemann_zeta(double s);

// Li_p(x) = sum x^n/n^p for |x| < 1, plus the x = 1, p >= 2 boundary case.
double polylog(int p, double x);

// Gauss's finite form for psi at positive rationals, reported relative to
// psi(1) so gamma never enters the basis. Exact over {1, ln2} for
// denominators 1 and 2; otherwise a numeric atom (or UnsupportedError when
// require_exact is set).
ConstCombo digamma_rational(const Rational& x, bool require_exact = false);

}  // namespace hsums
