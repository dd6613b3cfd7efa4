#include "hsums/special_fn.hpp"

#include <cmath>
#include <limits>

namespace hsums {

namespace {

// B_{2j}/(2j) for j = 1..10, the digamma asymptotic series coefficients.
constexpr double kBern2kOver2k[] = {
    1.0 / 12.0,        -1.0 / 120.0,      1.0 / 252.0,     -1.0 / 240.0,
    1.0 / 132.0,       -691.0 / 32760.0,  1.0 / 12.0,      -3617.0 / 8160.0,
    43867.0 / 14364.0, -174611.0 / 6600.0};

// B_{2j}/(2j)! for j = 1..10, the Euler-Maclaurin correction coefficients.
constexpr double kBern2kOverFact[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double digamma(double x) {
  if (std::isnan(x)) throw DomainError("digamma: NaN argument");
  if (is_nonpositive_integer(x)) throw PoleError("digamma: pole at non-positive integer x");

  double acc = 0.0, comp = 0.0;
  while (x < 10.0) {
    // Kahan-compensated subtraction of 1/x
    double y = -1.0 / x - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    x += 1.0;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = 0.0;
  for (int j = 9; j >= 0; --j) series = (kBern2kOver2k[j] + series) * inv2;
  return acc + std::log(x) - 0.5 * inv - series;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1");
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: requires a > 0");

  const double lift_target = std::max(10.0, 2.0 * s);
  double acc = 0.0, comp = 0.0;
  while (a < lift_target) {
    double y = std::pow(a, -s) - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    a += 1.0;
  }
  // Euler-Maclaurin at b = a >= max(10, 2s):
  //   zeta(s,b) = b^(1-s)/(s-1) + b^(-s)/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} b^(-s-2j+1)
  double em = std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  double rising = s;  // (s)_{2j-1} for j = 1
  double apow = std::pow(a, -s - 1.0);
  for (int j = 0; j < 10; ++j) {
    double term = kBern2kOverFact[j] * rising * apow;
    em += term;
    if (std::abs(term) <= 1e-18 * std::abs(em)) break;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    apow /= a * a;
  }
  double result = acc + em;
  if (!std::isfinite(result)) throw OverflowError("hurwitz_zeta: value overflows double");
  return result;
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw DomainError("riemann_zeta: requires s > 1");
  return hurwitz_zeta(s, 1.0);
}

double polygamma(int n, double x) {
  if (n < 1) throw DomainError("polygamma: requires n >= 1");
  if (is_nonpositive_integer(x)) throw PoleError("polygamma: pole at non-positive integer x");
  if (!(x > 0.0)) throw DomainError("polygamma: requires x > 0");
  if (n > 170) throw OverflowError("polygamma: n! overflows double");
  double fact = std::tgamma(n + 1.0);
  double z = hurwitz_zeta(n + 1.0, x);
  double result = ((n % 2 == 0) ? -1.0 : 1.0) * fact * z;
  if (!std::isfinite(result)) throw OverflowError("polygamma: value overflows double");
  return result;
}

double polylog(int p, double x) {
  if (p < 1) throw DomainError("polylog: requires p >= 1");
  if (x == 1.0) {
    if (p >= 2) return riemann_zeta(static_cast<double>(p));
    throw DomainError("polylog: Li_1(1) diverges");
  }
  if (!(std::abs(x) < 1.0)) throw DomainError("polylog: requires |x| < 1 (or x = 1 with p >= 2)");
  if (x == 0.0) return 0.0;
  if (p == 1) return -std::log1p(-x);

  const double ax = std::abs(x);
  double acc = 0.0, comp = 0.0;
  double xn = 1.0;
  for (std::int64_t n = 1; n <= 2'000'000; ++n) {
    xn *= x;
    double y = xn / std::pow(static_cast<double>(n), p) - comp;
    double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    // geometric tail bound: |sum_{j>n}| <= |x|^(n+1) / ((n+1)^p (1-|x|))
    double tail = std::pow(ax, static_cast<double>(n + 1)) /
                  (std::pow(static_cast<double>(n + 1), p) * (1.0 - ax));
    if (tail < 1e-17 * (std::abs(acc) + 1e-300) || tail < 1e-306) break;
  }
  return acc;
}

namespace {

// Gauss's finite expression for psi(p/q) + gamma, 0 < p < q.
double gauss_value(long long p, long long q) {
  double sum = 0.0;
  for (long long k = 1; k <= (q - 1) / 2; ++k) {
    sum += std::cos(2.0 * kPi * k * p / q) * std::log(2.0 * std::sin(kPi * k / q));
  }
  double rq = (q % 2 == 0) ? ((p % 2 == 0) ? kLn2 : -kLn2) : 0.0;
  return 2.0 * sum + rq - 0.5 * kPi / std::tan(kPi * p / q) - std::log(static_cast<double>(q));
}

}  // namespace

ConstCombo digamma_rational(const Rational& x, bool require_exact) {
  if (x.is_zero() || x.is_negative())
    throw PoleError("digamma_rational: requires x > 0");
  BigInt den = x.den();

  if (den == 1) {
    // psi(n) - psi(1) = H_{n-1}, exact rational
    BigInt n = x.num();
    if (n > 1'000'000) throw UnsupportedError("digamma_rational: integer argument too large");
    Rational h(0);
    for (BigInt j = 1; j < n; ++j) h += Rational(BigInt(1), j);
    ConstCombo out;
    out.add_term(ConstAtom::one(), h);
    return out;
  }

  if (den == 2) {
    // psi(1/2) - psi(1) = -2 ln2, lifted by psi(x+1) = psi(x) + 1/x
    BigInt p = x.num();  // odd, >= 1
    if (p > 2'000'000) throw UnsupportedError("digamma_rational: argument too large");
    ConstCombo out;
    out.add_term(ConstAtom::ln2(), Rational(-2));
    Rational shift(0);
    for (BigInt i = 1; i < p; i += 2) shift += Rational(BigInt(2), i);
    out.add_term(ConstAtom::one(), shift);
    return out;
  }

  if (require_exact)
    throw UnsupportedError("digamma_rational: exact form supported only for denominators 1 and 2");

  // Numeric fallback via the Gauss formula, shifted into (0,1) first.
  long long q = den.convert_to<long long>();
  BigInt num = x.num();
  BigInt whole = num / den;
  long long p = (num % den).convert_to<long long>();
  double value = gauss_value(p, q);
  for (BigInt i = 0; i < whole; ++i) {
    value += 1.0 / ((Rational(p, q) + Rational(i)).to_double());
  }
  return ConstCombo::term(ConstAtom::numeric(value), Rational(1));
}

}  // namespace hsums
