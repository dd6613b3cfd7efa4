#include "hsums/beta_log_integrals.hpp"

#include <cmath>
#include <cstring>
#include <list>
#include <unordered_map>

#include "hsums/harmonic.hpp"
#include "hsums/special_fn.hpp"

namespace hsums {

namespace {

constexpr int kMaxTotal = 8;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double ipow(double x, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

LogMomentTable::LogMomentTable(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0)) throw DomainError("log_moment: requires alpha > 0");
  for (auto& row : filled_) row.fill(false);
  for (auto& row : grid_) row.fill(0.0);
  h_.fill(0.0);
}

double LogMomentTable::value(int m, int k) {
  if (m < 0 || k < 0) throw DomainError("log_moment: requires m, k >= 0");
  if (m + k > kMaxTotal) throw UnsupportedError("log_moment: m + k > 8 unsupported");
  if (!filled_[m][k]) {
    grid_[m][k] = compute(m, k);
    filled_[m][k] = true;
  }
  return grid_[m][k];
}

double LogMomentTable::compute(int m, int k) {
  // base column: I(alpha, i, 0) = (-1)^i i! / alpha^(i+1)
  if (k == 0) {
    return (m % 2 == 0 ? 1.0 : -1.0) * factorial(m) / ipow(alpha_, m + 1);
  }
  // pure-k column: I(alpha, 0, j) from the lower entries and H^(j-i)_alpha
  if (m == 0) {
    double v = 0.0;
    for (int i = 0; i < k; ++i) {
      double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
      v += sign * factorial(k - i - 1) * binom(k - 1, i) * value(0, i) *
           shifted_harmonic(alpha_, k - i);
    }
    return v;
  }
  // mixed entries by the full recurrence
  double v = 0.0;
  for (int i = 0; i < m; ++i) {
    double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
    v += binom(m - 1, i) * factorial(m - i - 1) * sign / ipow(alpha_, m - i) * value(i, k);
  }
  for (int j = 0; j < k; ++j) {
    double sign = ((m + k - j) % 2 == 0) ? 1.0 : -1.0;
    double w = binom(k, j) * sign * factorial(m + k - j - 1) * value(0, j);
    v += w * shifted_harmonic(alpha_, m + k - j);
    v -= w * riemann_zeta(m + k - j);
  }
  for (int i = 1; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      double sign = ((m + k - i - j) % 2 == 0) ? 1.0 : -1.0;
      double w = binom(m - 1, i) * binom(k, j) * sign * factorial(m + k - i - j - 1) *
                 value(i, j);
      v += w * shifted_harmonic(alpha_, m + k - i - j);
      v -= w * riemann_zeta(m + k - i - j);
    }
  }
  return v;
}

namespace {

// Small per-thread cache of tables keyed by the exact bit pattern of alpha.
LogMomentTable& table_for(double alpha) {
  struct Entry {
    std::uint64_t key;
    LogMomentTable table;
  };
  static thread_local std::list<Entry> cache;
  std::uint64_t key;
  std::memcpy(&key, &alpha, sizeof(key));
  for (auto it = cache.begin(); it != cache.end(); ++it) {
    if (it->key == key) {
      cache.splice(cache.begin(), cache, it);
      return cache.front().table;
    }
  }
  cache.push_front({key, LogMomentTable(alpha)});
  if (cache.size() > 64) cache.pop_back();
  return cache.front().table;
}

}  // namespace

double log_moment(const LogMomentQuery& q) { return table_for(q.alpha).value(q.m, q.k); }

double log_moment(double alpha, int m, int k) { return log_moment({alpha, m, k}); }

double log_moment_closed(double alpha, int m, int k) {
  if (!(alpha > 0.0)) throw DomainError("log_moment_closed: requires alpha > 0");
  const double h1 = shifted_harmonic(alpha, 1);
  const double h2 = shifted_harmonic(alpha, 2);
  if (m == 0 && k == 1) return -h1 / alpha;
  if (m == 0 && k == 2) return (h1 * h1 + h2) / alpha;
  if (m == 1 && k == 1) return h1 / (alpha * alpha) - (riemann_zeta(2) - h2) / alpha;
  const double h3 = shifted_harmonic(alpha, 3);
  if (m == 0 && k == 3) return -(h1 * h1 * h1 + 3.0 * h1 * h2 + 2.0 * h3) / alpha;
  if (m == 1 && k == 2)
    return -(h1 * h1 + h2) / (alpha * alpha) + 2.0 * (riemann_zeta(3) - h3) / alpha +
           2.0 * (riemann_zeta(2) - h2) * h1 / alpha;
  if (m == 0 && k == 4) {
    const double h4 = shifted_harmonic(alpha, 4);
    return (ipow(h1, 4) + 6.0 * h1 * h1 * h2 + 8.0 * h1 * h3 + 3.0 * h2 * h2 + 6.0 * h4) /
           alpha;
  }
  throw UnsupportedError("log_moment_closed: supported (m,k) are (0,1),(0,2),(1,1),(0,3),(1,2),(0,4)");
}

double polylog_moment(double alpha, int p) {
  if (!(alpha > 0.0)) throw DomainError("polylog_moment: requires alpha > 0");
  if (p < 2) throw DomainError("polylog_moment: requires p >= 2");
  double sum = 0.0;
  for (int i = 1; i <= p - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    sum += sign / ipow(alpha, i) * riemann_zeta(p + 1 - i);
  }
  double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
  return sum - sign_p * shifted_harmonic(alpha, 1) / ipow(alpha, p);
}

double polylog_moment_shifted(double r, int p, double alpha) {
  if (!(r > 0.0)) throw DomainError("polylog_moment_shifted: requires r > 0");
  if (!(alpha > -1.0)) throw DomainError("polylog_moment_shifted: requires alpha > -1");
  if (p < 1) throw DomainError("polylog_moment_shifted: requires p >= 1");
  if (std::abs(r - alpha) < 1e-9)
    throw DomainError("polylog_moment_shifted: singular at r = alpha");
  const double d = r - alpha;
  double sum = 0.0;
  for (int i = 1; i <= p - 1; ++i) {
    double sign = (i % 2 == 1) ? 1.0 : -1.0;
    sum += sign / ipow(d, i) * hurwitz_zeta(p + 1 - i, alpha + 1.0);
  }
  double sign_p = (p % 2 == 1) ? 1.0 : -1.0;
  sum += sign_p * (shifted_harmonic(r, 1) - shifted_harmonic(alpha, 1)) / ipow(d, p);
  return sum;
}

}  // namespace hsums
