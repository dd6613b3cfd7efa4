#include "hsums/harmonic.hpp"

#include <cmath>

#include "hsums/errors.hpp"
#include "hsums/special_fn.hpp"

namespace hsums {

namespace {

bool is_negative_integer(double alpha) {
  return alpha < 0.0 && alpha == std::floor(alpha);
}

}  // namespace

double shifted_harmonic(double alpha, int m) {
  if (m < 1) throw DomainError("shifted_harmonic: requires m >= 1");
  if (is_negative_integer(alpha)) throw PoleError("shifted_harmonic: pole at negative integer alpha");
  if (alpha == 0.0) return 0.0;
  if (m == 1) return digamma(alpha + 1.0) + kEulerGamma;

  // Lift negative alpha into [0, inf) by H^(m)_a = H^(m)_{a+1} - (a+1)^(-m).
  double corr = 0.0;
  while (alpha < 0.0) {
    corr -= std::pow(alpha + 1.0, -m);
    alpha += 1.0;
  }
  return riemann_zeta(m) - hurwitz_zeta(m, alpha + 1.0) + corr;
}

ConstCombo shifted_harmonic_exact(const Rational& alpha, int m) {
  if (m < 1) throw DomainError("shifted_harmonic_exact: requires m >= 1");
  BigInt den = alpha.den();

  if (den == 1) {
    BigInt n = alpha.num();
    if (n < 0) throw PoleError("shifted_harmonic_exact: pole at negative integer alpha");
    if (n > 100'000) throw UnsupportedError("shifted_harmonic_exact: integer alpha too large");
    Rational h(0);
    for (BigInt j = 1; j <= n; ++j) {
      BigInt jm = 1;
      for (int i = 0; i < m; ++i) jm *= j;
      h += Rational(BigInt(1), jm);
    }
    ConstCombo out;
    out.add_term(ConstAtom::one(), h);
    return out;
  }

  if (den != 2) throw UnsupportedError("shifted_harmonic_exact: denominator must be 1 or 2");

  // Base H^(m)_{1/2}: 2 - 2 ln2 for m = 1, 2^m - (2^m - 2) zeta(m) for m >= 2.
  ConstCombo combo;
  if (m == 1) {
    combo.add_term(ConstAtom::one(), Rational(2));
    combo.add_term(ConstAtom::ln2(), Rational(-2));
  } else {
    BigInt two_m = BigInt(1) << m;
    combo.add_term(ConstAtom::one(), Rational(two_m, BigInt(1)));
    combo.add_term(ConstAtom::zeta(m), -Rational(two_m - 2, BigInt(1)));
  }

  // Walk from 1/2 to alpha by H^(m)_{a+1} = H^(m)_a + (a+1)^(-m).
  BigInt num = alpha.num();  // odd; alpha = num/2
  if (num > 200'000 || num < -200'000)
    throw UnsupportedError("shifted_harmonic_exact: half-integer alpha too large");
  Rational a(1, 2);
  Rational target(num, BigInt(2));
  while (a < target) {
    a += Rational(1);
    combo.add_term(ConstAtom::one(), Rational(1) / Rational::pow(a, m));
  }
  while (target < a) {
    combo.add_term(ConstAtom::one(), -(Rational(1) / Rational::pow(a, m)));
    a -= Rational(1);
  }
  return combo;
}

double harmonic_difference(double alpha, int r, int k, int m) {
  if (m < 1) throw DomainError("harmonic_difference: requires m >= 1");
  if (r < 0 || r >= k) throw DomainError("harmonic_difference: requires 0 <= r < k");
  if (!(alpha > k)) throw DomainError("harmonic_difference: requires alpha > k");
  double sum = 0.0;
  for (int j = k - r; j >= 1; --j) sum += std::pow(j + alpha - k, -m);
  return sum;
}

}  // namespace hsums
