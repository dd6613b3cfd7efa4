#include "hsums/w_sums.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "hsums/const_combo.hpp"
#include "hsums/harmonic.hpp"
#include "hsums/identities.hpp"
#include "hsums/special_fn.hpp"

namespace hsums {

namespace {

Rational binom_rational(int n, int k) {
  Rational b(1);
  for (int i = 1; i <= k; ++i) b = b * Rational(n - k + i) / Rational(i);
  return b;
}

using Family = double (*)(double, int, int, Check);

Family family_for(int l, int m) {
  if (l == 1 && m == 1) return &linear_sum;
  if (l == 1 && m == 2) return &order2_sum;
  if (l == 2 && m == 1) return &square_sum;
  return nullptr;
}

void validate(const WSpec& s) {
  Family fam = family_for(s.l, s.m);
  if (fam == nullptr || (s.p != 0 && s.p != 1))
    throw UnsupportedError(
        "w_sum: supported (l,p,m) triples are (1,0,1), (1,0,2), (2,0,1), "
        "(1,1,1), (1,1,2), (2,1,1)");
  if (s.p == 0) {
    if (s.k < 2 || s.r < 0) throw DomainError("w_sum: p = 0 requires k >= 2, r >= 0");
    if (!(s.alpha > s.k + s.r)) throw DomainError("w_sum: p = 0 requires alpha > k + r");
  } else {
    if (s.r != 0) throw DomainError("w_sum: p = 1 requires r = 0");
    if (s.k < 1) throw DomainError("w_sum: p = 1 requires k >= 1");
    if (!(s.alpha > s.k)) throw DomainError("w_sum: p = 1 requires alpha > k");
  }
}

}  // namespace

Rational FlatDecomp::eval_at(long long n) const {
  Rational s(0);
  for (const auto& pole : poles) s += pole.weight / Rational(n + pole.shift);
  return s;
}

Rational PairedDecomp::eval_at(long long n) const {
  Rational s(0);
  for (const auto& pr : pairs)
    s += pr.weight / (Rational(n + pr.shift_a) * Rational(n + pr.shift_b));
  return s;
}

FlatDecomp binom_decomp_flat(int k, int r) {
  if (k < 1 || r < 0) throw DomainError("binom_decomp_flat: requires k >= 1, r >= 0");
  FlatDecomp d;
  for (int j = 1; j <= k; ++j) {
    Rational w = Rational(j) * binom_rational(k, j);
    if (j % 2 == 0) w = -w;
    d.poles.push_back({r + j, w});
  }
  return d;
}

PairedDecomp binom_decomp_paired(int k, int r) {
  if (k < 2) throw UnsupportedError("binom_decomp_paired: requires k >= 2 (no pairing for k = 1)");
  if (r < 0) throw DomainError("binom_decomp_paired: requires r >= 0");
  PairedDecomp d;
  for (int j = 1; j <= k - 1; ++j) {
    Rational w = Rational(k) * Rational(j) * binom_rational(k - 1, j);
    if (j % 2 == 0) w = -w;
    d.pairs.push_back({r + 1, r + 1 + j, w});
  }
  return d;
}

double w_sum(const WSpec& s, WRoute route) {
  validate(s);
  Family fam = family_for(s.l, s.m);
  if (route == WRoute::standard) route = (s.p == 0) ? WRoute::paired : WRoute::flat;

  if (s.p == 0) {
    if (route == WRoute::paired) {
      double out = 0.0;
      for (const auto& pr : binom_decomp_paired(s.k, s.r).pairs)
        out += pr.weight.to_double() * fam(s.alpha, pr.shift_a, pr.shift_b, Check::strict);
      return out;
    }
    // flat weights regrouped into two-factor terms against the first pole:
    // sum_j A_j/(n+r+j) = sum_{j>=2} A_j (1-j)/((n+r+1)(n+r+j)) since sum A_j = 0
    double out = 0.0;
    FlatDecomp d = binom_decomp_flat(s.k, s.r);
    for (int j = 2; j <= s.k; ++j) {
      Rational w = d.poles[j - 1].weight * Rational(1 - j);
      out += w.to_double() * fam(s.alpha, s.r + 1, s.r + j, Check::strict);
    }
    return out;
  }

  // p == 1, r == 0
  if (route == WRoute::flat) {
    double out = 0.0;
    for (const auto& pole : binom_decomp_flat(s.k, 0).poles)
      out += pole.weight.to_double() * fam(s.alpha, 0, pole.shift, Check::strict);
    return out;
  }
  // paired route: 1/(n(n+1)(n+1+j)) = (1/j)[1/(n(n+1)) - 1/(n(n+1+j))]
  double out = 0.0;
  for (const auto& pr : binom_decomp_paired(s.k, 0).pairs) {
    int j = pr.shift_b - pr.shift_a;
    double w = (pr.weight / Rational(j)).to_double();
    out += w * (fam(s.alpha, 0, pr.shift_a, Check::strict) -
                fam(s.alpha, 0, pr.shift_b, Check::strict));
  }
  return out;
}

SeriesTerm w_series_term(const WSpec& s) {
  validate(s);
  auto tr = std::make_shared<HarmonicTracker>(s.alpha, s.m);
  const int l = s.l, p = s.p, m = s.m, k = s.k, r = s.r;
  int log_degree = (m == 1) ? l : 0;
  return {[=](std::int64_t n) {
            double c = 1.0;  // C(n+k+r, k)
            for (int i = 1; i <= k; ++i) c *= static_cast<double>(n + r + i) / i;
            double h = tr->h(n, m);
            double num = (l == 1) ? h : h * h;
            double den = (p == 0) ? c : static_cast<double>(n) * c;
            return num / den;
          },
          TailModel::inverse_power(k + p, log_degree)};
}

std::string describe(const WSpec& s) {
  std::ostringstream os;
  os << "W(l=" << s.l << ", p=" << s.p << ", m=" << s.m << ", k=" << s.k << ", r=" << s.r
     << ", alpha=" << s.alpha << ")";
  return os.str();
}

double classical_square_sum(int k) {
  if (k < 2) throw DomainError("classical_square_sum: requires k >= 2");
  double h2 = combo_eval(shifted_harmonic_exact(Rational(k - 1), 2));
  double km1 = k - 1.0;
  return k / km1 * (riemann_zeta(2) - h2 + 2.0 / (km1 * km1));
}

SeriesTerm classical_square_series_term(int k) {
  if (k < 2) throw DomainError("classical_square_sum: requires k >= 2");
  auto tr = std::make_shared<HarmonicTracker>(0.0, 1);
  return {[tr, k](std::int64_t n) {
            double c = 1.0;
            for (int i = 1; i <= k; ++i) c *= static_cast<double>(n + i) / i;
            double h = tr->h(n, 1);
            return h * h / c;
          },
          TailModel::inverse_power(k, 2)};
}

double polylog_symmetry_residual(int p, int m, double r, double alpha, double beta) {
  if (p < 2 || m < 2) throw DomainError("polylog_symmetry_residual: requires p, m >= 2");
  if (!(r > 0.0)) throw DomainError("polylog_symmetry_residual: requires r > 0");
  for (double shift : {alpha, beta, r - alpha, r - beta}) {
    if (!(shift > -1.0))
      throw PoleError("polylog_symmetry_residual: a pole shift is not > -1");
  }
  const double target = 1e-10;

  auto power_series = [&](double a, int pa, double b, int pb, int degree) {
    auto tr = std::make_shared<HarmonicTracker>(r, 1);
    bool with_h = degree > 0;
    return sum_series(
        {[=](std::int64_t n) {
           double da = n + a, db = n + b;
           double v = 1.0;
           for (int i = 0; i < pa; ++i) v /= da;
           for (int i = 0; i < pb; ++i) v /= db;
           return with_h ? v * tr->h(n, 1) : v;
         },
         TailModel::inverse_power(pa + pb, degree)},
        target);
  };

  double sign_m = (m % 2 == 1) ? 1.0 : -1.0;
  double sign_p = (p % 2 == 1) ? 1.0 : -1.0;

  double lhs = sign_m * power_series(alpha, p, r - beta, m, 1).value -
               sign_p * power_series(beta, m, r - alpha, p, 1).value;

  double rhs = sign_m * shifted_harmonic(beta, 1) * power_series(alpha, p, r - beta, m, 0).value -
               sign_p * shifted_harmonic(alpha, 1) * power_series(beta, m, r - alpha, p, 0).value;
  for (int i = 1; i <= p - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    rhs += sign * hurwitz_zeta(p + 1 - i, alpha + 1.0) *
           power_series(beta, m, r - alpha, i, 0).value;
  }
  for (int i = 1; i <= m - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    rhs -= sign * hurwitz_zeta(m + 1 - i, beta + 1.0) *
           power_series(alpha, p, r - beta, i, 0).value;
  }
  return lhs - rhs;
}

double euler_shifted_sum(double alpha, int p, int m) {
  if (!(alpha > 0.0)) throw DomainError("euler_shifted_sum: requires alpha > 0");
  if (p < 1 || m < 1 || p + m < 3)
    throw DomainError("euler_shifted_sum: requires p, m >= 1 with p + m >= 3");
  if ((p + m) % 2 == 0)
    throw DomainError("euler_shifted_sum: p + m must be odd (identity degenerates to 0 = 0)");

  double c = ((m % 2 == 1) ? 1.0 : -1.0) - ((p % 2 == 1) ? 1.0 : -1.0);  // +-2
  double value = shifted_harmonic(alpha, 1) * hurwitz_zeta(p + m, alpha + 1.0);
  double cross = 0.0;
  for (int i = 1; i <= p - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    cross += sign * hurwitz_zeta(p + 1 - i, alpha + 1.0) * hurwitz_zeta(m + i, alpha + 1.0);
  }
  for (int i = 1; i <= m - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    cross -= sign * hurwitz_zeta(m + 1 - i, alpha + 1.0) * hurwitz_zeta(p + i, alpha + 1.0);
  }
  return value + cross / c;
}

SeriesTerm euler_series_term(double alpha, int p, int m) {
  if (!(alpha > 0.0)) throw DomainError("euler_shifted_sum: requires alpha > 0");
  auto tr = std::make_shared<HarmonicTracker>(2.0 * alpha, 1);
  const int w = p + m;
  return {[=](std::int64_t n) { return tr->h(n, 1) / std::pow(n + alpha, w); },
          TailModel::inverse_power(w, 1)};
}

}  // namespace hsums
