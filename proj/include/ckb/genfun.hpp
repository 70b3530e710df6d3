#pragma once

#include <string>
#include <vector>

#include "ckb/laurent.hpp"
#include "ckb/series.hpp"

namespace ckb {

// Number of d-dissections / plane d-ary trees: C(dn, n) / ((d-1)n + 1).
Int t_dn(int d, long n);

enum class Method { Enum, Recursion, FixedPoint, Closed };
std::string method_name(Method m);
Method parse_method(const std::string& name);

// Weight polynomials w_{d,0} .. w_{d,N} with the method that produced them.
struct WeightTable {
  int d = 2;
  Method method = Method::Closed;
  std::vector<LaurentPoly> w;

  int max_n() const { return static_cast<int>(w.size()) - 1; }
  SeriesX to_series() const;
};

// w_0 = 1, w_{n+1}(t) = t * sum_k w_k(t^{-1}) w_{n-k}(t^{-1}).  d = 2 only.
WeightTable w_recursion(int n_max);

// Iterate Z -> 1 + t x (1 + t^{-1} x Z^d)^d from Z = 1, exactly N+1 times;
// the coefficient of x^k is stable after k+1 iterations.
WeightTable w_fixedpoint(int d, int N);

// Closed formulas for d = 2, by residue of n mod 3. Every summand is an
// exact nonnegative integer.
LaurentPoly w_closed(long n);
WeightTable w_closed_table(int n_max);

// Closed formulas for general d, by residue of m mod (d+1).
LaurentPoly w_closed_d(int d, long m);
WeightTable w_closed_d_table(int d, int n_max);

// The 2 <= j <= d branch evaluated at arbitrary j; its j = d+1 instance
// coincides with the j = 0 branch at n+1.
LaurentPoly w_closed_d_third_formula(int d, long n, long j);

// For d = 2: t(1+tx) - tW + 2tx^2 W^2 + x^3 W^4.
// For d >= 3: W - 1 - tx (1 + t^{-1} x W^d)^d.
SeriesX algebraic_residual(int d, const SeriesX& W);

// Fair dissections: C(dn, n)^2 / ((d-1)n + 1).
Int fair_formula(int d, long n);

// Eulerian dissections of the ((d+1)n+1)-cell polygon: C(d^2 n + d, n) / (dn + 1).
Int eulerian_formula(int d, long n);

// Largest w-index that can contribute to x^m of W(-x^s, x), s in {1,-1},
// from the sharp per-residue degree bounds (d = 2): w_{3k}, w_{3k+2} have
// exponents in [-k, k], w_{3k+1} in [1-k, k+1].
long spec_max_contributor(int m, bool inverse);

// W(-x, x) and W(-x^{-1}, x) as residuals against 1 and 0; coefficients are
// complete through x^complete (>= floor(2N/3); the table is built to N+1).
struct Specializations {
  SeriesX residual_at_minus_x;      // W(-x,x) - 1
  SeriesX residual_at_minus_inv_x;  // W(-x^{-1},x)
  int complete = 0;
};
Specializations specialization_check(int N);

// Array with entry[r][c] = coefficient of t^{r-c} in w_{r+c}; rows 0..N,
// columns 0..2N (row r is complete for c <= 2r).
struct ArrayA {
  std::vector<std::vector<Int>> rows;
};

struct RowColResult {
  SeriesX R;  // row sums,    W(sqrt x, sqrt x)
  SeriesX C;  // column sums, W(1/sqrt x, sqrt x)
  ArrayA array;
};
// Builds the weight table to 3N+1 internally so R and C are complete
// through x^N. Throws std::logic_error on a parity violation (nonzero
// coefficient with n + j odd).
RowColResult row_col_series(int N);

// Lagrange-inversion form of R: 1 + sum_n (sum_k C(2n,k) C(2n-k,n-1-2k) 2^-k) (4x)^n / n.
SeriesX r_series_lagrange(int N);

// Extremal sequences of the array: A_n = (w_{3n}, t^{-n}),
// B_n = (w_{3n+1}, t^{n+1}); A = 1 + x B^2 and B = A^2.
struct ExtremalAB {
  SeriesX A;
  SeriesX B;
};
ExtremalAB extremal_AB(int N);

// wtilde_n = w_n'(1); satisfies x - wt + x(4x+3) wt^2 = 0. ratio_at_N is
// 8 w_N'(1) / (3 t_{2,N}), the asymptotic-mean check value.
struct WPrimeSeries {
  SeriesX series;
  Rat ratio_at_N;
};
WPrimeSeries wprime_series(int N);

// ((d-1)n + 2 + (d+1)j)(w,t^{-j}) = ((d-1)n + 2 - (d+1)j)(w,t^j) for every
// entry of the table.
struct CoeffIdReport {
  bool pass = true;
  long fail_n = -1;
  long fail_j = 0;
};
CoeffIdReport coeffid_check(int d, const WeightTable& table);

// Conjectural positivity checks on Q_n(u,v) (homogenization of w_n):
// (a) Q_n(u,1) real-rooted, (b) nonzero roots of Q_n interleave those of
// Q_{n+3}, (c) Q_n(u,v) + Q_n(v,u) written in e1 = u+v, e2 = uv has
// nonnegative coefficients. A failure is a reportable finding.
struct PositivityReport {
  int n_max = 0;
  long first_fail_real_rooted = -1;
  long first_fail_interlacing = -1;
  long first_fail_positivity = -1;
  bool all_pass() const {
    return first_fail_real_rooted < 0 && first_fail_interlacing < 0 &&
           first_fail_positivity < 0;
  }
};
PositivityReport positivity_suite(int n_max);

// Q_n(u,1) as the coefficient list [u^0]..[u^deg].
std::vector<Int> homogenized_qn(const LaurentPoly& w_n, long n);

}  // namespace ckb
