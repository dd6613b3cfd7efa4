#pragma once

#include <array>

#include "hsums/errors.hpp"

namespace hsums {

// I(alpha, m, k) = integral_0^1 x^(alpha-1) ln^m(x) ln^k(1-x) dx,
// alpha > 0, m, k >= 0, m + k <= 8.
struct LogMomentQuery {
  double alpha;
  int m;
  int k;
};

// Per-alpha memo table for the I(alpha, m, k) recurrence. The pure-k column is
// filled first, then mixed entries in increasing m; each entry consumes all
// lower (i, j) entries.
class LogMomentTable {
 public:
  explicit LogMomentTable(double alpha);
  double value(int m, int k);

 private:
  static constexpr int kMaxTotal = 8;
  double alpha_;
  std::array<double, 5> h_;  // H^(1..5)_alpha as needed lazily
  std::array<std::array<double, kMaxTotal + 1>, kMaxTotal + 1> grid_;
  std::array<std::array<bool, kMaxTotal + 1>, kMaxTotal + 1> filled_;
  double compute(int m, int k);
};

double log_moment(const LogMomentQuery& q);
double log_moment(double alpha, int m, int k);

// Direct closed forms for (m,k) in {(0,1),(0,2),(1,1),(0,3),(1,2),(0,4)},
// independent of the recurrence path.
double log_moment_closed(double alpha, int m, int k);

// integral_0^1 x^(alpha-1) Li_p(x) dx
//   = sum_{i=1}^{p-1} (-1)^(i-1) alpha^(-i) zeta(p+1-i) - (-1)^p H_alpha/alpha^p,
// which also equals sum_{n>=1} 1/(n^p (n+alpha)). Requires alpha > 0, p >= 2.
double polylog_moment(double alpha, int p);

// integral_0^1 x^(r-1) Li_{p,alpha}(x) dx
//   = sum_{i=1}^{p-1} (-1)^(i-1) (r-alpha)^(-i) zeta(p+1-i, alpha+1)
//     + (-1)^(p-1) (H_r - H_alpha)/(r-alpha)^p
// = sum_{n>=1} (n+alpha)^(-p)/(n+r). Requires r > 0, alpha > -1, r != alpha.
double polylog_moment_shifted(double r, int p, double alpha);

}  // namespace hsums
