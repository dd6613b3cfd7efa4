#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hsums/errors.hpp"

namespace hsums {

// Asymptotic shape of the series terms; must upper-bound the true decay.
//   inverse_square_log: a_n ~ P(ln n)/n^2 with deg P <= log_degree
//   inverse_power:      a_n ~ P(ln n)/n^q, q >= 2
//   geometric:          |a_{n+1}/a_n| <= ratio < 1 eventually
struct TailModel {
  enum class Kind { inverse_square_log, inverse_power, geometric };

  Kind kind = Kind::inverse_square_log;
  int power = 2;
  int log_degree = 1;
  double ratio = 0.5;

  static TailModel inverse_square_log(int log_degree = 3) {
    return {Kind::inverse_square_log, 2, log_degree, 0.0};
  }
  static TailModel inverse_power(int q, int log_degree = 0) {
    return {Kind::inverse_power, q, log_degree, 0.0};
  }
  static TailModel geometric(double ratio) { return {Kind::geometric, 2, 0, ratio}; }
};

// One series to be summed. The evaluator is called with strictly increasing n
// within a summation run, so it may keep incremental state.
struct SeriesTerm {
  std::function<double(std::int64_t)> evaluator;
  TailModel decay;
};

struct OracleEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  std::int64_t terms_used = 0;
};

// Term budget for sum_series; HARMONIC_SUMS_TERM_BUDGET overrides the
// default of 10^7.
std::int64_t default_term_budget();

// Compensated partial summation plus an analytic tail fitted on the last
// window of terms. Deterministic: identical inputs give bit-identical output.
// Throws ConvergenceError if successive tail-corrected estimates fail to
// stabilize within the budget.
OracleEstimate sum_series(const SeriesTerm& term, double target_error,
                          std::int64_t term_budget = default_term_budget());

// Adaptive Gauss-Kronrod integration of f over (0,1) with the endpoint
// substitutions x = e^(-u) near 0 and x = 1 - e^(-t) near 1, so integrable
// singularities of the form x^(alpha-1) ln^m x ln^k(1-x) are handled.
OracleEstimate integrate_01(const std::function<double(double)>& f, double target_error);

// Incremental supplier of H^(m)_{n+alpha} for m = 1..max_order. Cheap when n
// advances one step at a time (the sum_series access pattern); recomputes from
// the kernel on a backward jump.
class HarmonicTracker {
 public:
  HarmonicTracker(double alpha, int max_order);

  // H^(m)_{n+alpha}, 1 <= m <= max_order, n >= 0.
  double h(std::int64_t n, int m);

 private:
  void reset();
  double alpha_;
  int max_order_;
  std::int64_t n_ = 0;
  std::vector<double> h_;      // h_[m-1] = H^(m)_{n_+alpha}
  std::vector<double> comp_;   // Kahan carry per order
};

}  // namespace hsums
