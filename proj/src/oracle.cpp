#include "hsums/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "hsums/harmonic.hpp"

namespace hsums {

namespace {

constexpr std::int64_t kDefaultBudget = 10'000'000;
constexpr std::int64_t kFirstPassEnd = 10'000;

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

double ipow(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Least-squares fit of y_n = a_n n^q against polynomials in
// l = ln n - ln N over the window [N/2, N], plus the analytic tail
//   sum_{n>N} P(ln n - ln N)/n^q
//     = N^(1-q) sum_i c_i i!/(q-1)^(i+1) - c_0 N^(-q)/2 - (c_1 - q c_0) N^(-q-1)/12
// (integral plus the first Euler-Maclaurin corrections).
class TailFit {
 public:
  void reset(int degree, double ln_pass_end) {
    degree_ = degree;
    ln_end_ = ln_pass_end;
    moments_.fill(0.0);
    rhs_.fill(0.0);
    samples_ = 0;
  }

  void add(std::int64_t n, double y) {
    double l = std::log(static_cast<double>(n)) - ln_end_;
    double lp[7];
    lp[0] = 1.0;
    for (int i = 1; i <= 2 * degree_; ++i) lp[i] = lp[i - 1] * l;
    for (int i = 0; i <= 2 * degree_; ++i) moments_[i] += lp[i];
    for (int i = 0; i <= degree_; ++i) rhs_[i] += y * lp[i];
    ++samples_;
  }

  // Solves the normal equations; returns false if the window is degenerate.
  bool solve(std::array<double, 4>& coeffs) const {
    int d = degree_ + 1;
    if (samples_ < d) return false;
    double a[4][5];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a[i][j] = moments_[i + j];
      a[i][d] = rhs_[i];
    }
    for (int col = 0; col < d; ++col) {
      int piv = col;
      for (int row = col + 1; row < d; ++row)
        if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
      if (a[piv][col] == 0.0) return false;
      if (piv != col)
        for (int j = 0; j <= d; ++j) std::swap(a[piv][j], a[col][j]);
      for (int row = col + 1; row < d; ++row) {
        double f = a[row][col] / a[col][col];
        for (int j = col; j <= d; ++j) a[row][j] -= f * a[col][j];
      }
    }
    coeffs.fill(0.0);
    for (int i = d - 1; i >= 0; --i) {
      double s = a[i][d];
      for (int j = i + 1; j < d; ++j) s -= a[i][j] * coeffs[j];
      coeffs[i] = s / a[i][i];
    }
    return true;
  }

  double predict(const std::array<double, 4>& c, std::int64_t n) const {
    double l = std::log(static_cast<double>(n)) - ln_end_;
    double out = 0.0;
    for (int i = degree_; i >= 0; --i) out = out * l + c[i];
    return out;
  }

 private:
  int degree_ = 0;
  double ln_end_ = 0.0;
  std::array<double, 7> moments_{};
  std::array<double, 4> rhs_{};
  std::int64_t samples_ = 0;
};

double factorial_small(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

OracleEstimate sum_geometric(const SeriesTerm& term, double target_error,
                             std::int64_t budget) {
  double ratio = term.decay.ratio;
  if (!(ratio > 0.0 && ratio < 1.0))
    throw DomainError("sum_series: geometric ratio must be in (0,1)");
  Kahan acc;
  double tail = std::numeric_limits<double>::infinity();
  std::int64_t n = 0;
  while (n < budget) {
    ++n;
    double an = term.evaluator(n);
    if (!std::isfinite(an)) throw ConvergenceError("sum_series: non-finite term");
    acc.add(an);
    tail = std::abs(an) * ratio / (1.0 - ratio);
    if (n >= 16 && tail < 0.5 * target_error) {
      return {acc.value(), tail + 1e-15 * std::abs(acc.value()), n};
    }
  }
  throw ConvergenceError("sum_series: geometric series did not reach target within budget");
}

}  // namespace

std::int64_t default_term_budget() {
  if (const char* env = std::getenv("HARMONIC_SUMS_TERM_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return kDefaultBudget;
}

OracleEstimate sum_series(const SeriesTerm& term, double target_error,
                          std::int64_t term_budget) {
  if (!(target_error > 0.0)) throw DomainError("sum_series: target_error must be positive");
  if (!term.evaluator) throw DomainError("sum_series: missing evaluator");
  if (term.decay.kind == TailModel::Kind::geometric)
    return sum_geometric(term, target_error, term_budget);

  const int q = term.decay.power;
  if (q < 2) throw DomainError("sum_series: power decay requires q >= 2");
  const int degree = std::clamp(term.decay.log_degree, 0, 3);

  Kahan acc;
  TailFit fit;
  std::array<double, 4> coeffs{};
  std::int64_t n = 0;
  std::int64_t pass_end = std::min<std::int64_t>(kFirstPassEnd, term_budget);
  double est = 0.0, prev_est = 0.0, resid_bound = 0.0;
  bool have_prev = false;

  for (;;) {
    const double ln_end = std::log(static_cast<double>(pass_end));
    fit.reset(degree, ln_end);
    const std::int64_t window_start = pass_end - pass_end / 2;
    static thread_local std::vector<std::pair<std::int64_t, double>> window;
    window.clear();
    while (n < pass_end) {
      ++n;
      double an = term.evaluator(n);
      if (!std::isfinite(an)) throw ConvergenceError("sum_series: non-finite term");
      acc.add(an);
      if (n >= window_start) {
        double y = an * ipow(static_cast<double>(n), q);
        fit.add(n, y);
        window.emplace_back(n, y);
      }
    }
    if (!fit.solve(coeffs))
      throw ConvergenceError("sum_series: degenerate tail-fit window");

    double resid = 0.0;
    for (const auto& [wn, wy] : window)
      resid = std::max(resid, std::abs(wy - fit.predict(coeffs, wn)));

    const double N = static_cast<double>(pass_end);
    double tail = 0.0;
    for (int i = 0; i <= degree; ++i)
      tail += coeffs[i] * factorial_small(i) / ipow(q - 1.0, i + 1);
    tail *= std::pow(N, 1.0 - q);
    tail -= 0.5 * coeffs[0] * std::pow(N, -static_cast<double>(q));
    tail -= (coeffs[1] - q * coeffs[0]) * std::pow(N, -static_cast<double>(q) - 1.0) / 12.0;
    resid_bound = resid * (std::pow(N, 1.0 - q) / (q - 1.0) + std::pow(N, -static_cast<double>(q)));

    est = acc.value() + tail;
    if (have_prev && std::abs(est - prev_est) <= 0.25 * target_error) break;
    if (pass_end >= term_budget)
      throw ConvergenceError("sum_series: tail estimates failed to stabilize within the term budget");
    prev_est = est;
    have_prev = true;
    pass_end = std::min(pass_end * 4, term_budget);
  }

  double error_bound = std::abs(est - prev_est) + resid_bound + 1e-15 * std::abs(est) + 1e-300;
  return {est, error_bound, n};
}

// ---------------------------------------------------------------------------
// Quadrature

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GK {
  double value;
  double err;
};

template <typename F>
GK gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  if (!std::isfinite(fc)) throw ConvergenceError("integrate_01: non-finite integrand");
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kXgk[i];
    double f1 = f(c - dx);
    double f2 = f(c + dx);
    if (!std::isfinite(f1) || !std::isfinite(f2))
      throw ConvergenceError("integrate_01: non-finite integrand");
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  return {resk * h, std::abs(resk - resg) * std::abs(h)};
}

template <typename F>
void adaptive(const F& f, double a, double b, double tol, int depth, double& value,
              double& err, int& splits) {
  GK r = gk15(f, a, b);
  if (r.err <= tol || depth >= 40) {
    value += r.value;
    err += r.err;
    return;
  }
  if (++splits > 100'000)
    throw ConvergenceError("integrate_01: subdivision budget exhausted");
  double mid = 0.5 * (a + b);
  adaptive(f, a, mid, 0.5 * tol, depth + 1, value, err, splits);
  adaptive(f, mid, b, 0.5 * tol, depth + 1, value, err, splits);
}

}  // namespace

OracleEstimate integrate_01(const std::function<double(double)>& f, double target_error) {
  if (!(target_error > 0.0)) throw DomainError("integrate_01: target_error must be positive");
  if (!f) throw DomainError("integrate_01: missing integrand");

  double value = 0.0, err = 0.0;
  int splits = 0;

  // central part
  adaptive(f, 0.1, 0.9, 0.25 * target_error, 0, value, err, splits);

  // left endpoint: x = e^(-u), dx = -x du
  auto left = [&f](double u) {
    double x = std::exp(-u);
    return f(x) * x;
  };
  const double u0 = std::log(10.0);
  double u = u0;
  for (int block = 0; block < 40; ++block) {
    double u1 = u + 30.0;
    double bval = 0.0, berr = 0.0;
    adaptive(left, u, u1, target_error / 16.0, 0, bval, berr, splits);
    value += bval;
    err += berr;
    u = u1;
    if (std::abs(bval) < target_error / 16.0 && block >= 1) break;
    if (block == 39) throw ConvergenceError("integrate_01: left endpoint did not converge");
  }

  // right endpoint: x = 1 - e^(-t); cut at t = 36 where 1-x reaches the last
  // double below 1, and bound the unreachable sliver by the edge density.
  auto right = [&f](double t) {
    double e = std::exp(-t);
    return f(1.0 - e) * e;
  };
  const double t0 = -std::log(0.1);
  const double t_max = 36.0;
  adaptive(right, t0, t_max, 0.25 * target_error, 0, value, err, splits);
  err += 2.0 * std::abs(right(t_max));

  return {value, err + 1e-16 * std::abs(value), 0};
}

// ---------------------------------------------------------------------------
// HarmonicTracker

HarmonicTracker::HarmonicTracker(double alpha, int max_order)
    : alpha_(alpha), max_order_(max_order) {
  if (max_order_ < 1 || max_order_ > 8)
    throw DomainError("HarmonicTracker: order must be in 1..8");
  reset();
}

void HarmonicTracker::reset() {
  n_ = 0;
  h_.assign(max_order_, 0.0);
  comp_.assign(max_order_, 0.0);
  if (alpha_ != 0.0)
    for (int m = 1; m <= max_order_; ++m) h_[m - 1] = shifted_harmonic(alpha_, m);
}

double HarmonicTracker::h(std::int64_t n, int m) {
  if (m < 1 || m > max_order_) throw DomainError("HarmonicTracker: order out of range");
  if (n < n_) reset();
  while (n_ < n) {
    ++n_;
    double inv = 1.0 / (static_cast<double>(n_) + alpha_);
    double p = inv;
    for (int mm = 0; mm < max_order_; ++mm) {
      double y = p - comp_[mm];
      double t = h_[mm] + y;
      comp_[mm] = (t - h_[mm]) - y;
      h_[mm] = t;
      p *= inv;
    }
  }
  return h_[m - 1];
}

}  // namespace hsums
