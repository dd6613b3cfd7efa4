#pragma once

#include <string>

#include "hsums/oracle.hpp"

namespace hsums {

// Domain handling for the closed-form evaluators. strict enforces the stated
// hypotheses (alpha > max{k,r} or alpha > k > r); unchecked computes the
// formula anyway, for analytic-continuation experiments.
enum class Check { strict, unchecked };

// Affine recombination of the two base sums sum f/((n+k)(n+alpha)) and
// sum f/((n+r)(n+alpha)) into sum f/((n+r)(n+k)). Requires r != k.
double lemma_split(double alpha, int r, int k, double base_r, double base_k);

// sum_{n>=1} H_{n+alpha}/((n+r)(n+k)), r != k, alpha > max{k,r}.
double linear_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} H_{n+alpha}/((n+k)(n+alpha)), alpha > k >= 0.
double linear_sum_base(double alpha, int k, Check check = Check::strict);

// sum_{n>=1} H_{n+alpha-m}/((n+r)(n+k)); excluded points alpha = m+r-j and
// m+k-j (j = 1..m) raise ExclusionError naming the offending j.
double linear_sum_shift(double alpha, int m, int r, int k, Check check = Check::strict);

// sum_{n>=1} H^(2)_{n+alpha}/((n+k)(n+alpha)), alpha > k >= 0. For integer
// alpha-k the inner sum over H_{n+alpha-k}/n^2 has a closed form; otherwise it
// is evaluated by the summation oracle (the two-parameter order2_sum never
// needs it).
double order2_base(double alpha, int k, Check check = Check::strict);

// sum_{n>=1} H^(2)_{n+alpha}/((n+r)(n+k)), alpha > k > r >= 0.
double order2_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} H^(2)_{n+alpha-m}/((n+r)(n+k)) with the same exclusions as
// linear_sum_shift.
double order2_sum_shift(double alpha, int m, int r, int k, Check check = Check::strict);

// sum_{n>=1} (H^2 + H^(2))_{n+alpha}/((n+r)(n+k)), alpha > k > r >= 0.
double sq_plus_o2_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} (H^3 + 3 H H^(2) + 2 H^(3))_{n+alpha}/((n+r)(n+k)).
double cubic_combo_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} H^2_{n+alpha}/((n+r)(n+k)), alpha > k > r >= 0.
double square_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} H^(3)_{n+alpha}/((n+r)(n+k)), alpha > k > r >= 0.
double order3_sum(double alpha, int r, int k, Check check = Check::strict);

// sum_{n>=1} (H_{n+alpha-r} - H_{n+alpha-k})/n^p for p >= 2, 0 <= r < k,
// alpha > k.
double weighted_tail_sum(double alpha, int r, int k, int p, Check check = Check::strict);

// ---------------------------------------------------------------------------
// Family dispatch used by the CLI, the verification suites and the property
// tests.

enum class TwoFactorFamily {
  linear,
  linear_base,
  linear_shift,
  order2_base,
  order2,
  order2_shift,
  sq_plus_o2,
  cubic_combo,
  square,
  order3,
  weighted_tail,
};

struct TwoFactorSpec {
  TwoFactorFamily family;
  double alpha = 0.0;
  int r = 0;
  int k = 0;
  int m = 0;  // shift families only
  int p = 2;  // weighted_tail only
};

double evaluate(const TwoFactorSpec& spec, Check check = Check::strict);

// Brute-force summand for the same series, for oracle verification.
SeriesTerm series_term(const TwoFactorSpec& spec);

std::string family_name(TwoFactorFamily family);
std::string describe(const TwoFactorSpec& spec);

}  // namespace hsums
