#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ckb/series.hpp"

namespace ckb {

// The four linear partial differential operators. Each is a monomial
// prefactor times a product of first-order Euler factors c + a*(t d/dt) +
// b*(x d/dx), so a monomial t^j x^m maps to a single monomial times a
// rational scalar.
enum class OpTag { DL, DR, DLt, DRt };

struct OperatorId {
  OpTag tag;
  int d = 2;
};

std::string op_name(OperatorId op);

// First-order Euler factor c + a*(t d/dt) + b*(x d/dx).
struct EulerFactor {
  Rat c, a, b;
};

// Monomial prefactor pref_scalar * t^dt * x^dx times the factor product.
struct OperatorSpec {
  Rat pref_scalar;
  int dt = 0, dx = 0;
  std::vector<EulerFactor> factors;
};

// The factored form behind monomial_action (d = 2 display scaling) and
// monomial_action_general.
OperatorSpec operator_spec(OperatorId op);
OperatorSpec operator_spec_general(OperatorId op);

struct MonomialAction {
  Rat scalar;
  long j_out;
  long m_out;
};

// d = 2 reproduces the displayed second-order forms verbatim
// (DL: 4(1+j+m)(2-3j+m) t^{j+1} x^{m+1}, etc.); d >= 3 uses the general
// family with prefactors d*t*x, 1, d*x, t and half-integer factor slopes.
MonomialAction monomial_action(OperatorId op, long j, long m);

// The general family at every d, including d = 2 (where it equals the
// displayed operators divided by 4). The term-by-term factorial sums are
// stated in this normalization.
MonomialAction monomial_action_general(OperatorId op, long j, long m);

// True for DL / DLt, which raise the x-degree by one.
bool raises_x(OperatorId op);

// Series image with the completeness mark: orders above `complete` are
// dropped from comparisons (operators that raise the x-degree lose the top
// order).
struct AppliedSeries {
  SeriesXQ series;
  int complete;
};

AppliedSeries apply_operator(OperatorId op, const SeriesXQ& s);
AppliedSeries apply_operator_general(OperatorId op, const SeriesXQ& s);

// (DL - DR) W and (DLt - DRt) W; both vanish on complete orders when W is
// the checkerboard series.
std::pair<AppliedSeries, AppliedSeries> pde_residuals(int d, const SeriesX& w);

// 2t(1-W) + (d-1)x(d x W^{d-1} - t) W_x + (d+1)t(t + d x W^{d-1}) W_t,
// exact through W's order.
SeriesX corollary_residual(int d, const SeriesX& w);

// Coefficient identity restated on series:
// x Wb_x + 2 Wb + 3t Wb_t - (x W_x + 2 W - 3t W_t) with Wb = bar(W); zero
// for the d = 2 checkerboard series. For general d the slopes are (d-1)
// and (d+1).
SeriesX coeffid_series_residual(int d, const SeriesX& w);

// Reconstructs F from DL F = DR F and DLt F = DRt F with F = 1 + tx mod x^2,
// solving coefficients in increasing m from whichever equation has a nonzero
// pivot; when both pivots are nonzero, consistency is asserted. Throws
// std::logic_error if both pivots vanish at some m >= 2 (cannot happen) or
// on inconsistency.
SeriesX pde_solve(int d, int N);

struct TermwiseReport {
  bool pass = true;
  std::string first_fail;
  long cases_checked = 0;
};

// Operator applied to the single term x^m wtilde_m against the displayed
// factorial sums: the twelve d = 2 formulas.
TermwiseReport verify_termwise_d2(int n_max);
// The eight general-d formulas (j = 1 and 2 <= j <= d+1), general scaling.
TermwiseReport verify_termwise_general(int d, int n_max);

}  // namespace ckb
