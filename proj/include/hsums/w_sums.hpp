#pragma once

#include <string>
#include <vector>

#include "hsums/oracle.hpp"
#include "hsums/rational.hpp"

namespace hsums {

// W^(l)_{k,r}(p, m, alpha) = sum_{n>=1} (H^(m)_{n+alpha})^l / (n^p C(n+k+r, k)).
// Closed forms exist for (l,p,m) in {(1,0,1),(1,0,2),(2,0,1)} with k >= 2,
// alpha > k+r, and {(1,1,1),(1,1,2),(2,1,1)} with r = 0, k >= 1, alpha > k.
struct WSpec {
  int l;
  int p;
  int m;
  int k;
  int r;
  double alpha;
};

// 1/C(n+k+r,k) = sum_j weight_j/(n+shift_j), exact rational weights
// (-1)^(j+1) j C(k,j) over poles n+r+j, j = 1..k.
struct FlatDecomp {
  struct Pole {
    int shift;        // pole at n + shift
    Rational weight;
  };
  std::vector<Pole> poles;
  Rational eval_at(long long n) const;
};

// 1/C(n+k+r,k) = sum_j weight_j/((n+shift_a)(n+shift_b)) with weights
// k(-1)^(j+1) j C(k-1,j) over (n+r+1)(n+r+1+j), j = 1..k-1. Needs k >= 2.
struct PairedDecomp {
  struct Pair {
    int shift_a;
    int shift_b;
    Rational weight;
  };
  std::vector<Pair> pairs;
  Rational eval_at(long long n) const;
};

FlatDecomp binom_decomp_flat(int k, int r);
PairedDecomp binom_decomp_paired(int k, int r);

// Which decomposition feeds the two-factor evaluators. The two routes regroup
// the partial fractions differently, giving independent evaluation paths.
enum class WRoute { standard, flat, paired };

double w_sum(const WSpec& spec, WRoute route = WRoute::standard);

// Brute-force summand of the same W series for oracle verification.
SeriesTerm w_series_term(const WSpec& spec);

std::string describe(const WSpec& spec);

// sum_{n>=1} H_n^2/C(n+k,k) = k/(k-1) (zeta(2) - H^(2)_{k-1} + 2/(k-1)^2), k >= 2.
double classical_square_sum(int k);
SeriesTerm classical_square_series_term(int k);

// LHS minus RHS of the parametric-polylog symmetry identity, both sides by
// truncated summation; expected ~ 0. Requires p, m >= 2, r > 0 and all pole
// shifts positive (alpha, beta, r-alpha, r-beta > -1).
double polylog_symmetry_residual(int p, int m, double r, double alpha, double beta);

// sum_{n>=1} H_{n+2 alpha}/(n+alpha)^(p+m) for p + m odd (the symmetry
// identity degenerates to 0 = 0 for even weight). Requires alpha > 0,
// p, m >= 1, p + m >= 3.
double euler_shifted_sum(double alpha, int p, int m);
SeriesTerm euler_series_term(double alpha, int p, int m);

}  // namespace hsums
