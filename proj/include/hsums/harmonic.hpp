#pragma once

#include "hsums/const_combo.hpp"
#include "hsums/rational.hpp"

namespace hsums {

// Generalized shifted harmonic number H_alpha^(m) for real alpha not a
// negative integer. H_alpha = psi(alpha+1) + gamma; for m >= 2,
// H_alpha^(m) = zeta(m) - zeta(m, alpha+1).
double shifted_harmonic(double alpha, int m);

// Exact value for integer and half-integer alpha. Integer alpha gives a pure
// rational; half-integer alpha is lifted from the base
// H^(m)_{1/2} = 2^m - (2^m - 2) zeta(m) (m >= 2) or H_{1/2} = 2 - 2 ln2 by the
// recurrence H^(m)_{a+1} = H^(m)_a + (a+1)^(-m). Negative half-integers use
// the same recurrence downward.
ConstCombo shifted_harmonic_exact(const Rational& alpha, int m);

// H^(m)_{alpha-r} - H^(m)_{alpha-k} computed as the finite sum
// sum_{j=1..k-r} (j + alpha - k)^(-m), never as a difference of large values.
// Requires 0 <= r < k and alpha > k.
double harmonic_difference(double alpha, int r, int k, int m);

}  // namespace hsums
