#include "hsums/identities.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "hsums/const_combo.hpp"
#include "hsums/harmonic.hpp"
#include "hsums/special_fn.hpp"

namespace hsums {

namespace {

constexpr double kExclusionEps = 1e-9;

// H^(m)_x with half-integer and integer x routed through the exact path, so
// the showcase half-integer results reproduce to machine precision.
double sh(double x, int m) {
  double two = 2.0 * x;
  if (std::abs(two) < 4e6 && two == std::nearbyint(two)) {
    return combo_eval(shifted_harmonic_exact(Rational(static_cast<long long>(two), 2), m));
  }
  return shifted_harmonic(x, m);
}

double p2_at(double x) {
  double h1 = sh(x, 1);
  return h1 * h1 + sh(x, 2);
}

double p3_at(double x) {
  double h1 = sh(x, 1);
  return h1 * h1 * h1 + 3.0 * h1 * sh(x, 2) + 2.0 * sh(x, 3);
}

double p4_at(double x) {
  double h1 = sh(x, 1), h2 = sh(x, 2);
  return h1 * h1 * h1 * h1 + 6.0 * h1 * h1 * h2 + 8.0 * h1 * sh(x, 3) + 3.0 * h2 * h2 +
         6.0 * sh(x, 4);
}

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

bool is_near_negative_integer(double x) {
  double r = std::nearbyint(x);
  return r <= -1.0 && std::abs(x - r) < kExclusionEps;
}

void check_pole(double alpha) {
  if (is_near_negative_integer(alpha)) throw PoleError("alpha at a negative integer pole");
}

void check_shift_exclusions(double alpha, int m, int r, int k) {
  for (int j = 1; j <= m; ++j) {
    if (std::abs(alpha - (m + r - j)) < kExclusionEps)
      throw ExclusionError("excluded point alpha = m + r - j", j);
    if (std::abs(alpha - (m + k - j)) < kExclusionEps)
      throw ExclusionError("excluded point alpha = m + k - j", j);
  }
  if (is_near_negative_integer(alpha - m))
    throw PoleError("alpha - m at a negative integer pole");
}

bool near_integer(double x) { return std::abs(x - std::nearbyint(x)) < 1e-12; }

}  // namespace

double lemma_split(double alpha, int r, int k, double base_r, double base_k) {
  if (r == k) throw DomainError("lemma_split: requires r != k");
  double kr = static_cast<double>(k - r);
  return (k - alpha) / kr * base_k + (alpha - r) / kr * base_r;
}

double linear_sum_base(double alpha, int k, Check check) {
  if (check == Check::strict) {
    require(k >= 0, "linear_sum_base: requires k >= 0");
    require(alpha > k, "linear_sum_base: requires alpha > k");
  }
  check_pole(alpha - k);
  double s = p2_at(alpha - k) / (alpha - k);
  for (int j = 1; j <= k; ++j) s -= sh(alpha + j - k, 1) / (j * (alpha + j - k));
  return s;
}

double linear_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k >= 0, "linear_sum: requires r, k >= 0");
    require(r != k, "linear_sum: requires r != k");
    require(alpha > std::max(k, r), "linear_sum: requires alpha > max(k, r)");
  }
  return lemma_split(alpha, r, k, linear_sum_base(alpha, r, check),
                     linear_sum_base(alpha, k, check));
}

double linear_sum_shift(double alpha, int m, int r, int k, Check check) {
  require(m >= 0, "linear_sum_shift: requires m >= 0");
  if (m == 0) return linear_sum(alpha, r, k, check);
  if (check == Check::strict) {
    require(r >= 0 && k >= 0 && r != k, "linear_sum_shift: requires r, k >= 0, r != k");
    require(alpha > std::max(k, r), "linear_sum_shift: requires alpha > max(k, r)");
  }
  check_shift_exclusions(alpha, m, r, k);
  double corr = 0.0;
  const double hr = sh(r, 1), hk = sh(k, 1);
  for (int j = 1; j <= m; ++j) {
    double hj = sh(j + alpha - m, 1);
    corr += (hj - hr) / (j + alpha - m - r) - (hj - hk) / (j + alpha - m - k);
  }
  return linear_sum(alpha, r, k, check) - corr / (k - r);
}

double order2_base(double alpha, int k, Check check) {
  if (check == Check::strict) {
    require(k >= 0, "order2_base: requires k >= 0");
    require(alpha > k, "order2_base: requires alpha > k");
  }
  const double beta = alpha - k;
  check_pole(beta);

  // inner series sum_{n>=1} H_{n+beta}/n^2
  double inner;
  if (near_integer(beta) && beta >= 0.0) {
    // anchor at sum H_n/n^2 = 2 zeta(3), then the finite correction
    int b = static_cast<int>(std::nearbyint(beta));
    inner = 2.0 * riemann_zeta(3) + riemann_zeta(2) * sh(beta, 1);
    for (int j = 1; j <= b; ++j) inner -= sh(j, 1) / (static_cast<double>(j) * j);
  } else {
    auto tracker = std::make_shared<HarmonicTracker>(beta, 1);
    SeriesTerm term{[tracker](std::int64_t n) {
                      double dn = static_cast<double>(n);
                      return tracker->h(n, 1) / (dn * dn);
                    },
                    TailModel::inverse_square_log(1)};
    inner = sum_series(term, 1e-10).value;
  }

  double s = inner / beta;
  s -= 2.0 * (riemann_zeta(3) - sh(beta, 3)) / beta;
  s -= 2.0 * (riemann_zeta(2) - sh(beta, 2)) * sh(beta, 1) / beta;
  for (int j = 1; j <= k; ++j) s -= sh(alpha + j - k, 2) / (j * (alpha + j - k));
  return s;
}

double order2_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k > r, "order2_sum: requires k > r >= 0");
    require(alpha > k, "order2_sum: requires alpha > k");
  }
  if (r == k) throw DomainError("order2_sum: requires r != k");
  double s = 0.0;
  for (int j = 1; j <= r; ++j)
    s += (r - alpha) * sh(alpha + j - r, 2) / (j * (alpha + j - r));
  for (int j = 1; j <= k; ++j)
    s -= (k - alpha) * sh(alpha + j - k, 2) / (j * (alpha + j - k));
  for (int j = 1; j <= k - r; ++j) {
    double b = alpha + j - k;
    s -= sh(b, 1) / (b * b);
  }
  const double z2 = riemann_zeta(2);
  s += 2.0 * sh(alpha - r, 3) + sh(alpha - k, 1) * z2 +
       2.0 * sh(alpha - r, 1) * sh(alpha - r, 2);
  s -= 2.0 * sh(alpha - k, 3) + sh(alpha - r, 1) * z2 +
       2.0 * sh(alpha - k, 1) * sh(alpha - k, 2);
  return s / (k - r);
}

double order2_sum_shift(double alpha, int m, int r, int k, Check check) {
  require(m >= 0, "order2_sum_shift: requires m >= 0");
  if (m == 0) return order2_sum(alpha, r, k, check);
  if (check == Check::strict) {
    require(r >= 0 && k > r, "order2_sum_shift: requires k > r >= 0");
    require(alpha > k, "order2_sum_shift: requires alpha > k");
  }
  check_shift_exclusions(alpha, m, r, k);
  const double z2 = riemann_zeta(2);
  const double hr = sh(r, 1), hk = sh(k, 1);
  double corr = 0.0;
  for (int j = 1; j <= m; ++j) {
    double b = j + alpha - m;
    double hb = sh(b, 1), hb2 = sh(b, 2);
    double dr = b - r, dk = b - k;
    corr += (hb - hr) / (dr * dr) - (z2 - hb2) / dr;
    corr -= (hb - hk) / (dk * dk) - (z2 - hb2) / dk;
  }
  return order2_sum(alpha, r, k, check) - corr / (k - r);
}

double sq_plus_o2_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k > r, "sq_plus_o2_sum: requires k > r >= 0");
    require(alpha > k, "sq_plus_o2_sum: requires alpha > k");
  }
  if (r == k) throw DomainError("sq_plus_o2_sum: requires r != k");
  auto base = [&](int kk) {
    double s = p3_at(alpha - kk) / (alpha - kk);
    for (int j = 1; j <= kk; ++j) s -= p2_at(alpha + j - kk) / (j * (alpha + j - kk));
    return s;
  };
  return lemma_split(alpha, r, k, base(r), base(k));
}

double cubic_combo_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k > r, "cubic_combo_sum: requires k > r >= 0");
    require(alpha > k, "cubic_combo_sum: requires alpha > k");
  }
  if (r == k) throw DomainError("cubic_combo_sum: requires r != k");
  auto base = [&](int kk) {
    double s = p4_at(alpha - kk) / (alpha - kk);
    for (int j = 1; j <= kk; ++j) s -= p3_at(alpha + j - kk) / (j * (alpha + j - kk));
    return s;
  };
  return lemma_split(alpha, r, k, base(r), base(k));
}

double square_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k > r, "square_sum: requires k > r >= 0");
    require(alpha > k, "square_sum: requires alpha > k");
  }
  if (r == k) throw DomainError("square_sum: requires r != k");
  const double z2 = riemann_zeta(2);
  auto piece = [&](double x) {
    double h1 = sh(x, 1);
    return h1 * h1 * h1 + h1 * sh(x, 2) + h1 * z2;
  };
  double s = piece(alpha - r) - piece(alpha - k);
  for (int j = 1; j <= r; ++j) {
    double h1 = sh(alpha + j - r, 1);
    s += (r - alpha) * h1 * h1 / (j * (alpha + j - r));
  }
  for (int j = 1; j <= k - r; ++j) {
    double b = alpha + j - k;
    s += sh(b, 1) / (b * b);
  }
  for (int j = 1; j <= k; ++j) {
    double h1 = sh(alpha + j - k, 1);
    s -= (k - alpha) * h1 * h1 / (j * (alpha + j - k));
  }
  return s / (k - r);
}

// Order-3 closed form, obtained by differentiating the order-2 identity in
// alpha (d/dalpha H^(2) = 2(zeta(3) - H^(3))) and collapsing the zeta(3) and
// zeta(2) byproducts through partial fractions.
double order3_sum(double alpha, int r, int k, Check check) {
  if (check == Check::strict) {
    require(r >= 0 && k > r, "order3_sum: requires k > r >= 0");
    require(alpha > k, "order3_sum: requires alpha > k");
  }
  if (r == k) throw DomainError("order3_sum: requires r != k");
  double s = 0.0;
  for (int j = 1; j <= r; ++j) {
    double b = alpha + j - r;
    s += (r - alpha) * sh(b, 3) / (j * b);
    s += 0.5 * (r - alpha) * sh(b, 2) / (j * b * b);
    s += 0.5 * sh(b, 2) / (j * b);
  }
  for (int j = 1; j <= k; ++j) {
    double b = alpha + j - k;
    s -= (k - alpha) * sh(b, 3) / (j * b);
    s -= 0.5 * (k - alpha) * sh(b, 2) / (j * b * b);
    s -= 0.5 * sh(b, 2) / (j * b);
  }
  for (int j = 1; j <= k - r; ++j) {
    double b = alpha + j - k;
    s -= 0.5 * sh(b, 2) / (b * b);
    s -= sh(b, 1) / (b * b * b);
  }
  s += 3.0 * (sh(alpha - r, 4) - sh(alpha - k, 4));
  s += (sh(alpha - k, 2) - sh(alpha - r, 2)) * riemann_zeta(2);
  s += (sh(alpha - k, 1) - sh(alpha - r, 1)) * riemann_zeta(3);
  double h2r = sh(alpha - r, 2), h2k = sh(alpha - k, 2);
  s += h2r * h2r - h2k * h2k;
  s += 2.0 * (sh(alpha - r, 1) * sh(alpha - r, 3) - sh(alpha - k, 1) * sh(alpha - k, 3));
  return s / (k - r);
}

double weighted_tail_sum(double alpha, int r, int k, int p, Check check) {
  require(p >= 2, "weighted_tail_sum: requires p >= 2");
  if (check == Check::strict) {
    require(0 <= r && r < k, "weighted_tail_sum: requires 0 <= r < k");
    require(alpha > k, "weighted_tail_sum: requires alpha > k");
  }
  double s = 0.0;
  for (int i = 1; i <= p - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    s += sign * riemann_zeta(p + 1 - i) * harmonic_difference(alpha, r, k, i);
  }
  double sign_p = (p % 2 == 1) ? 1.0 : -1.0;
  double js = 0.0;
  for (int j = 1; j <= k - r; ++j) {
    double b = j + alpha - k;
    js += sh(b, 1) / std::pow(b, p);
  }
  return s + sign_p * js;
}

// ---------------------------------------------------------------------------

double evaluate(const TwoFactorSpec& s, Check check) {
  switch (s.family) {
    case TwoFactorFamily::linear: return linear_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::linear_base: return linear_sum_base(s.alpha, s.k, check);
    case TwoFactorFamily::linear_shift: return linear_sum_shift(s.alpha, s.m, s.r, s.k, check);
    case TwoFactorFamily::order2_base: return order2_base(s.alpha, s.k, check);
    case TwoFactorFamily::order2: return order2_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::order2_shift: return order2_sum_shift(s.alpha, s.m, s.r, s.k, check);
    case TwoFactorFamily::sq_plus_o2: return sq_plus_o2_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::cubic_combo: return cubic_combo_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::square: return square_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::order3: return order3_sum(s.alpha, s.r, s.k, check);
    case TwoFactorFamily::weighted_tail: return weighted_tail_sum(s.alpha, s.r, s.k, s.p, check);
  }
  throw DomainError("evaluate: unknown family");
}

SeriesTerm series_term(const TwoFactorSpec& s) {
  const double alpha = s.alpha;
  const int r = s.r, k = s.k, m = s.m, p = s.p;
  auto two_factor = [r, k](std::int64_t n) {
    return (static_cast<double>(n) + r) * (static_cast<double>(n) + k);
  };
  switch (s.family) {
    case TwoFactorFamily::linear: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 1);
      return {[=](std::int64_t n) { return tr->h(n, 1) / two_factor(n); },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::linear_base: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 1);
      return {[=](std::int64_t n) {
                return tr->h(n, 1) / ((n + alpha) * (static_cast<double>(n) + k));
              },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::linear_shift: {
      auto tr = std::make_shared<HarmonicTracker>(alpha - m, 1);
      return {[=](std::int64_t n) { return tr->h(n, 1) / two_factor(n); },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::order2_base: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 2);
      return {[=](std::int64_t n) {
                return tr->h(n, 2) / ((n + alpha) * (static_cast<double>(n) + k));
              },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::order2: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 2);
      return {[=](std::int64_t n) { return tr->h(n, 2) / two_factor(n); },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::order2_shift: {
      auto tr = std::make_shared<HarmonicTracker>(alpha - m, 2);
      return {[=](std::int64_t n) { return tr->h(n, 2) / two_factor(n); },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::sq_plus_o2: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 2);
      return {[=](std::int64_t n) {
                double h1 = tr->h(n, 1);
                return (h1 * h1 + tr->h(n, 2)) / two_factor(n);
              },
              TailModel::inverse_square_log(2)};
    }
    case TwoFactorFamily::cubic_combo: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 3);
      return {[=](std::int64_t n) {
                double h1 = tr->h(n, 1);
                return (h1 * h1 * h1 + 3.0 * h1 * tr->h(n, 2) + 2.0 * tr->h(n, 3)) /
                       two_factor(n);
              },
              TailModel::inverse_square_log(3)};
    }
    case TwoFactorFamily::square: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 1);
      return {[=](std::int64_t n) {
                double h1 = tr->h(n, 1);
                return h1 * h1 / two_factor(n);
              },
              TailModel::inverse_square_log(2)};
    }
    case TwoFactorFamily::order3: {
      auto tr = std::make_shared<HarmonicTracker>(alpha, 3);
      return {[=](std::int64_t n) { return tr->h(n, 3) / two_factor(n); },
              TailModel::inverse_square_log(1)};
    }
    case TwoFactorFamily::weighted_tail: {
      return {[=](std::int64_t n) {
                double s_ = 0.0;
                for (int j = 1; j <= k - r; ++j) s_ += 1.0 / (n + j + alpha - k);
                return s_ / std::pow(static_cast<double>(n), p);
              },
              TailModel::inverse_power(p + 1)};
    }
  }
  throw DomainError("series_term: unknown family");
}

std::string family_name(TwoFactorFamily family) {
  switch (family) {
    case TwoFactorFamily::linear: return "linear";
    case TwoFactorFamily::linear_base: return "linear-base";
    case TwoFactorFamily::linear_shift: return "linear-shift";
    case TwoFactorFamily::order2_base: return "order2-base";
    case TwoFactorFamily::order2: return "order2";
    case TwoFactorFamily::order2_shift: return "order2-shift";
    case TwoFactorFamily::sq_plus_o2: return "sq-plus-o2";
    case TwoFactorFamily::cubic_combo: return "cubic-combo";
    case TwoFactorFamily::square: return "square";
    case TwoFactorFamily::order3: return "order3";
    case TwoFactorFamily::weighted_tail: return "weighted-tail";
  }
  return "?";
}

std::string describe(const TwoFactorSpec& s) {
  std::ostringstream os;
  os << family_name(s.family) << "(alpha=" << s.alpha;
  switch (s.family) {
    case TwoFactorFamily::linear_base:
    case TwoFactorFamily::order2_base:
      os << ", k=" << s.k;
      break;
    case TwoFactorFamily::linear_shift:
    case TwoFactorFamily::order2_shift:
      os << ", m=" << s.m << ", r=" << s.r << ", k=" << s.k;
      break;
    case TwoFactorFamily::weighted_tail:
      os << ", r=" << s.r << ", k=" << s.k << ", p=" << s.p;
      break;
    default:
      os << ", r=" << s.r << ", k=" << s.k;
  }
  os << ")";
  return os.str();
}

}  // namespace hsums
