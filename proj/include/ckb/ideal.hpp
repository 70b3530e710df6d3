#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ckb/multipoly.hpp"

namespace ckb {

// Variable list for differential-polynomial work: t, x, then the jet
// variables F_{t^a x^b} ordered by total order a+b, t-derivatives first.
// For max_order = 2 this is exactly t, x, F, F_t, F_x, F_tt, F_tx, F_xx.
struct JetVars {
  int max_order;

  explicit JetVars(int max_order);
  int nvars() const { return 2 + (max_order + 1) * (max_order + 2) / 2; }
  int t() const { return 0; }
  int x() const { return 1; }
  int f(int a, int b) const;           // index of F_{t^a x^b}
  std::pair<int, int> f_orders(int index) const;
  std::vector<std::string> names() const;
};

// Total derivative d/dt or d/dx treating every F_{a,b} as a function of
// (t, x): F_{a,b} differentiates to F_{a+1,b} resp. F_{a,b+1}.
MultiPoly total_derivative(const JetVars& vars, const MultiPoly& p, bool wrt_x);

using DerivKey = std::pair<int, int>;  // (a, b) of P_{t^a x^b}

// P = -t^{d-1} F + t^{d-1} + x (t + x F^d)^d, its formal partial
// derivatives up to order d (the ideal generators), K = dP/dF, and
// Q = (D_L - D_R) F, Qt = (Dt_L - Dt_R) F as differential polynomials.
struct IdealSystem {
  int d;
  JetVars vars;
  MultiPoly P;
  std::vector<std::pair<DerivKey, MultiPoly>> gens;  // (0,0) = P first, grlex on (a+b, a desc)
  MultiPoly K, Q, Qt;

  const MultiPoly& gen(int a, int b) const;
};

IdealSystem build_system(int d);

// Descending elimination h = d..1 with the rational-fraction-avoiding
// substitution F_v -> K F_v - P_v on the degree-homogeneous parts; yields
// Q0 in Q[t,x,F] with K^N Q = Q0 + sum cofactor * generator, N = sum floor(d/h).
struct Elimination {
  MultiPoly Q0;
  std::vector<std::pair<DerivKey, MultiPoly>> cofactors;  // orders 1..d
  int N = 0;
};
Elimination eliminate(const IdealSystem& sys, bool tilde);

// Exact division test of q0 by p as polynomials in F over Q[t,x] localized
// at x (the leading F-coefficient of P is x^{d+1}); the quotient is checked
// by remultiplication. Returns false on nonzero remainder.
bool divisibility_check(const MultiPoly& q0, const MultiPoly& p, const JetVars& vars,
                        MultiPoly* quotient = nullptr);

// Re-expands K^N Q - Q0 - sum cofactor*generator; exact zero proves the
// collected cofactors witness the congruence.
bool witness_is_exact(const IdealSystem& sys, const Elimination& e, bool tilde);

struct CertificateReport {
  int d = 2;
  int N = 0;
  bool divisible_q = false, divisible_qt = false;
  bool witness_q = false, witness_qt = false;
  bool witness_checked = true;
  size_t q0_terms = 0, qt0_terms = 0;
  double seconds = 0.0;

  bool pass() const {
    return divisible_q && divisible_qt && (!witness_checked || (witness_q && witness_qt));
  }
};

// Runs build_system, eliminate, divisibility_check for Q and Qt. The guard
// bounds d (default suite stops at 4; 5 and 6 sit behind a long-run flag).
CertificateReport ideal_certificate(int d, bool check_witness = true, int d_guard = 4);

// Elimination artifacts for export: quotient Q0/P plus all cofactors.
struct CertificateData {
  IdealSystem sys;
  Elimination q, qt;
  MultiPoly quotient_q, quotient_qt;
};
CertificateData certificate_data(int d);

}  // namespace ckb
