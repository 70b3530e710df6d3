#include "ckb/diffops.hpp"

#include <sstream>
#include <stdexcept>

#include "ckb/genfun.hpp"

namespace ckb {

std::string op_name(OperatorId op) {
  switch (op.tag) {
    case OpTag::DL: return "D_L";
    case OpTag::DR: return "D_R";
    case OpTag::DLt: return "Dt_L";
    case OpTag::DRt: return "Dt_R";
  }
  return "?";
}

bool raises_x(OperatorId op) { return op.tag == OpTag::DL || op.tag == OpTag::DLt; }

namespace {

using OperatorForm = OperatorSpec;

OperatorForm display_form_d2(OpTag tag) {
  switch (tag) {
    case OpTag::DL:
      return {Rat(4), 1, 1, {{Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(-3), Rat(1)}}};
    case OpTag::DR:
      return {Rat(1), 0, 0, {{Rat(0), Rat(3), Rat(1)}, {Rat(-2), Rat(3), Rat(1)}}};
    case OpTag::DLt:
      return {Rat(4), 0, 1, {{Rat(1), Rat(-1), Rat(1)}, {Rat(0), Rat(3), Rat(1)}}};
    case OpTag::DRt:
      return {Rat(1), 1, 0, {{Rat(2), Rat(-3), Rat(1)}, {Rat(0), Rat(-3), Rat(1)}}};
  }
  throw std::logic_error("unreachable");
}

OperatorForm general_form(OpTag tag, int d) {
  const Rat hp = make_rat(d + 1, 2), hm = make_rat(d - 1, 2), hd = make_rat(d, 2);
  OperatorForm f;
  switch (tag) {
    case OpTag::DL:
      f = {Rat(d), 1, 1, {{Rat(1), -hp, hm}}};
      for (int i = 1; i < d; ++i) f.factors.push_back({Rat(i), hd, hd});
      return f;
    case OpTag::DR:
      f = {Rat(1), 0, 0, {}};
      for (int i = 0; i < d; ++i) f.factors.push_back({Rat(-i), hp, hm});
      return f;
    case OpTag::DLt:
      f = {Rat(d), 0, 1, {{Rat(0), hp, hm}}};
      for (int i = 1; i < d; ++i) f.factors.push_back({Rat(i), -hd, hd});
      return f;
    case OpTag::DRt:
      f = {Rat(1), 1, 0, {}};
      for (int i = 0; i < d; ++i) f.factors.push_back({Rat(1 - i), -hp, hm});
      return f;
  }
  throw std::logic_error("unreachable");
}

OperatorForm form_of(OperatorId op, bool force_general) {
  if (op.d < 2) throw std::invalid_argument("operator: d >= 2");
  if (op.d == 2 && !force_general) return display_form_d2(op.tag);
  return general_form(op.tag, op.d);
}
}  // namespace

OperatorSpec operator_spec(OperatorId op) { return form_of(op, false); }
OperatorSpec operator_spec_general(OperatorId op) { return form_of(op, true); }

namespace {

MonomialAction act(const OperatorForm& f, long j, long m) {
  Rat s = f.pref_scalar;
  for (const auto& fac : f.factors) {
    s *= fac.c + fac.a * Rat(j) + fac.b * Rat(m);
    if (s == 0) break;
  }
  return {s, j + f.dt, m + f.dx};
}

AppliedSeries apply_form(const OperatorForm& f, const SeriesXQ& in) {
  const int N = in.order();
  AppliedSeries out{SeriesXQ(N), f.dx > 0 ? N - 1 : N};
  for (int m = 0; m <= N; ++m) {
    if (m + f.dx > N) break;
    in[m].for_each_term([&](long j, const Rat& c) {
      MonomialAction a = act(f, j, m);
      if (a.scalar != 0) out.series[static_cast<int>(a.m_out)].add_term(a.j_out, a.scalar * c);
    });
  }
  return out;
}

}  // namespace

MonomialAction monomial_action(OperatorId op, long j, long m) {
  return act(form_of(op, false), j, m);
}

MonomialAction monomial_action_general(OperatorId op, long j, long m) {
  return act(form_of(op, true), j, m);
}

AppliedSeries apply_operator(OperatorId op, const SeriesXQ& s) {
  return apply_form(form_of(op, false), s);
}

AppliedSeries apply_operator_general(OperatorId op, const SeriesXQ& s) {
  return apply_form(form_of(op, true), s);
}

std::pair<AppliedSeries, AppliedSeries> pde_residuals(int d, const SeriesX& w) {
  SeriesXQ wq = to_rational(w);
  AppliedSeries l = apply_operator({OpTag::DL, d}, wq);
  AppliedSeries r = apply_operator({OpTag::DR, d}, wq);
  AppliedSeries lt = apply_operator({OpTag::DLt, d}, wq);
  AppliedSeries rt = apply_operator({OpTag::DRt, d}, wq);
  return {AppliedSeries{l.series - r.series, std::min(l.complete, r.complete)},
          AppliedSeries{lt.series - rt.series, std::min(lt.complete, rt.complete)}};
}

SeriesX corollary_residual(int d, const SeriesX& w) {
  const int N = w.order();
  SeriesX t_series(N);
  t_series[0] = LaurentPoly::monomial(1, Int(1));
  SeriesX wd1 = SeriesX::one(N);
  for (int i = 0; i < d - 1; ++i) wd1 = wd1 * w;
  SeriesX dxwd1 = wd1.mul_monomial(0, 1, Int(d));  // d x W^{d-1}
  SeriesX theta_x = w.euler_x();                   // x W_x
  SeriesX theta_t = w.euler_t();                   // t W_t
  SeriesX res = (SeriesX::one(N) - w).mul_monomial(1, 0, Int(2));  // 2t(1-W)
  res = res + ((dxwd1 - t_series) * theta_x).mul_monomial(0, 0, Int(d - 1));
  res = res + ((t_series + dxwd1) * theta_t).mul_monomial(1, 0, Int(d + 1));
  return res;
}

SeriesX coeffid_series_residual(int d, const SeriesX& w) {
  const int N = w.order();
  SeriesX wb(N);
  for (int m = 0; m <= N; ++m) wb[m] = w[m].bar();
  SeriesX lhs = wb.euler_x().mul_monomial(0, 0, Int(d - 1)) +
                wb.mul_monomial(0, 0, Int(2)) +
                wb.euler_t().mul_monomial(0, 0, Int(d + 1));
  SeriesX rhs = w.euler_x().mul_monomial(0, 0, Int(d - 1)) +
                w.mul_monomial(0, 0, Int(2)) -
                w.euler_t().mul_monomial(0, 0, Int(d + 1));
  return lhs - rhs;
}

SeriesX pde_solve(int d, int N) {
  if (d < 2 || N < 0) throw std::invalid_argument("pde_solve: d >= 2, N >= 0");
  const OperatorForm fL = form_of({OpTag::DL, d}, false);
  const OperatorForm fR = form_of({OpTag::DR, d}, false);
  const OperatorForm fLt = form_of({OpTag::DLt, d}, false);
  const OperatorForm fRt = form_of({OpTag::DRt, d}, false);
  SeriesXQ f(N);
  f[0] = LaurentPolyQ::one();
  if (N >= 1) f[1] = LaurentPolyQ::monomial(1, Rat(1));
  for (int m = 2; m <= N; ++m) {
    for (long j = -m; j <= m + 1; ++j) {
      // DR is diagonal; DL feeds (j-1, m-1) -> (j, m).
      Rat pivot1 = act(fR, j, m).scalar;
      Rat src1 = act(fL, j - 1, m - 1).scalar * f[m - 1].coeff(j - 1);
      // DRt maps (j, m) -> (j+1, m); DLt feeds (j+1, m-1) -> (j+1, m).
      Rat pivot2 = act(fRt, j, m).scalar;
      Rat src2 = act(fLt, j + 1, m - 1).scalar * f[m - 1].coeff(j + 1);
      Rat value;
      if (pivot1 != 0) {
        value = src1 / pivot1;
        if (pivot2 != 0 && pivot2 * value != src2)
          throw std::logic_error("pde_solve: equations inconsistent at j=" +
                                 std::to_string(j) + " m=" + std::to_string(m));
      } else if (pivot2 != 0) {
        value = src2 / pivot2;
      } else {
        throw std::logic_error("pde_solve: both pivots vanish at j=" +
                               std::to_string(j) + " m=" + std::to_string(m));
      }
      if (value != 0) f[m].add_term(j, value);
    }
  }
  return to_integral(f);
}

namespace {

// Product of factorials with the Gamma convention in denominators: a
// negative argument in a denominator annihilates the term. A negative
// numerator argument is a transcription bug.
struct FactTerm {
  Int num = 1;
  bool dead = false;

  void mul_num_fact(long a) {
    if (a < 0) throw std::logic_error("termwise: negative numerator factorial");
    num *= factorial(a);
  }
  Rat over(std::initializer_list<long> dens) {
    Int den = 1;
    for (long a : dens) {
      if (a < 0) return Rat(0);
      den *= factorial(a);
    }
    Rat r = Rat(num) / Rat(den);
    r.canonicalize();
    return r;
  }
};

Rat fterm(std::initializer_list<long> nums, std::initializer_list<long> dens,
          long scale = 1) {
  FactTerm t;
  for (long a : nums) t.mul_num_fact(a);
  t.num *= scale;
  return t.over(dens);
}

// LHS: operator applied to the single term x^m w(t); returns the Laurent
// polynomial of the single output x-power (and that power).
std::pair<LaurentPolyQ, long> apply_single(const OperatorForm& f, long m,
                                           const LaurentPoly& w) {
  LaurentPolyQ out;
  w.for_each_term([&](long j, const Int& c) {
    MonomialAction a = act(f, j, m);
    if (a.scalar != 0) out.add_term(a.j_out, a.scalar * Rat(c));
  });
  return {out, m + f.dx};
}

struct TermwiseChecker {
  TermwiseReport rep;

  void compare(const std::string& label, const std::pair<LaurentPolyQ, long>& lhs,
               const LaurentPolyQ& rhs, long rhs_xpow) {
    ++rep.cases_checked;
    if (!rep.pass) return;
    bool ok = (lhs.first == rhs) && (lhs.first.is_zero() || lhs.second == rhs_xpow);
    if (!ok) {
      rep.pass = false;
      rep.first_fail = label;
    }
  }
};

}  // namespace

TermwiseReport verify_termwise_d2(int n_max) {
  TermwiseChecker ck;
  for (long n = 0; n <= n_max; ++n) {
    const LaurentPoly w0 = w_closed(3 * n), w1 = w_closed(3 * n + 1), w2 = w_closed(3 * n + 2);
    const OperatorForm DL = form_of({OpTag::DL, 2}, false);
    const OperatorForm DR = form_of({OpTag::DR, 2}, false);
    const OperatorForm DLt = form_of({OpTag::DLt, 2}, false);
    const OperatorForm DRt = form_of({OpTag::DRt, 2}, false);
    LaurentPolyQ rhs;
    auto label = [&](const char* c) { return std::string(c) + " n=" + std::to_string(n); };

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n + 1 - 2 * k, fterm({4 * n + 1 - 2 * k, 2 * n + 2 * k},
                                        {n + k, 3 * n - 3 * k, 3 * k, 2 * n - k}, 8));
    ck.compare(label("DL(x^{3n} w)"), apply_single(DL, 3 * n, w0), rhs, 3 * n + 1);

    rhs.clear();
    for (long k = 1; k <= n; ++k) {
      long kk = k - 1;
      rhs.add_term(n - 2 * kk, fterm({4 * n + 1 - 2 * kk, 2 * n + 2 + 2 * kk},
                                     {n + 1 + kk, 3 * n - 1 - 3 * kk, 3 * kk + 2, 2 * n - kk}, 8));
    }
    ck.compare(label("DL(x^{3n+1} w)"), apply_single(DL, 3 * n + 1, w1), rhs, 3 * n + 2);

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n + 1 - 2 * k,
                   fterm({4 * (n + 1) - 2 * k, 2 * (n + 1) + 2 * k},
                         {n + 1 + k, 3 * (n + 1) - 3 * k - 2, 3 * k + 1, 2 * (n + 1) - k}, 4));
    ck.compare(label("DL(x^{3n+2} w)"), apply_single(DL, 3 * n + 2, w2), rhs, 3 * n + 3);

    rhs.clear();
    for (long k = 0; k <= n - 1; ++k)
      rhs.add_term(n - 2 * k, fterm({4 * n - 2 * k, 2 * n + 2 * k},
                                    {n + k, 3 * n - 3 * k - 2, 3 * k + 1, 2 * n - k}, 4));
    ck.compare(label("DR(x^{3n} w)"), apply_single(DR, 3 * n, w0), rhs, 3 * n);

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n + 1 - 2 * k, fterm({4 * n + 1 - 2 * k, 2 * n + 2 * k},
                                        {n + k, 3 * n - 3 * k, 3 * k, 2 * n - k}, 8));
    ck.compare(label("DR(x^{3n+1} w)"), apply_single(DR, 3 * n + 1, w1), rhs, 3 * n + 1);

    rhs.clear();
    for (long k = 0; k <= n - 1; ++k)
      rhs.add_term(n - 2 * k, fterm({4 * n + 1 - 2 * k, 2 * n + 2 + 2 * k},
                                    {n + 1 + k, 3 * n - 1 - 3 * k, 3 * k + 2, 2 * n - k}, 8));
    ck.compare(label("DR(x^{3n+2} w)"), apply_single(DR, 3 * n + 2, w2), rhs, 3 * n + 2);

    rhs.clear();
    for (long k = 0; k <= n - 1; ++k)
      rhs.add_term(n - 2 * k, fterm({4 * n - 2 * k, 2 * n + 1 + 2 * k},
                                    {n + k, 3 * n - 3 * k - 1, 3 * k + 1, 2 * n - k}, 8));
    ck.compare(label("DLt(x^{3n} w)"), apply_single(DLt, 3 * n, w0), rhs, 3 * n + 1);

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n + 1 - 2 * k, fterm({4 * n + 2 - 2 * k, 2 * n + 1 + 2 * k},
                                        {n + k, 3 * n + 1 - 3 * k, 3 * k, 2 * n + 1 - k}, 8));
    ck.compare(label("DLt(x^{3n+1} w)"), apply_single(DLt, 3 * n + 1, w1), rhs, 3 * n + 2);

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n - 2 * k,
                   fterm({4 * (n + 1) - 2 - 2 * k, 2 * (n + 1) + 1 + 2 * k},
                         {n + 1 + k, 3 * (n + 1) - 3 * k - 3, 3 * k + 2, 2 * (n + 1) - 1 - k}, 8));
    ck.compare(label("DLt(x^{3n+2} w)"), apply_single(DLt, 3 * n + 2, w2), rhs, 3 * n + 3);

    rhs.clear();
    for (long k = 1; k <= n; ++k) {
      long kk = k - 1;
      rhs.add_term(n - 1 - 2 * kk, fterm({4 * n - 2 - 2 * kk, 2 * n + 1 + 2 * kk},
                                         {n + kk, 3 * n - 3 * kk - 3, 3 * kk + 2, 2 * n - 1 - kk}, 8));
    }
    ck.compare(label("DRt(x^{3n} w)"), apply_single(DRt, 3 * n, w0), rhs, 3 * n);

    rhs.clear();
    for (long k = 1; k <= n; ++k) {
      long kk = k - 1;
      rhs.add_term(n - 2 * kk, fterm({4 * n - 2 * kk, 2 * n + 1 + 2 * kk},
                                     {n + kk, 3 * n - 3 * kk - 1, 3 * kk + 1, 2 * n - kk}, 8));
    }
    ck.compare(label("DRt(x^{3n+1} w)"), apply_single(DRt, 3 * n + 1, w1), rhs, 3 * n + 1);

    rhs.clear();
    for (long k = 0; k <= n; ++k)
      rhs.add_term(n + 1 - 2 * k, fterm({4 * n + 2 - 2 * k, 2 * n + 1 + 2 * k},
                                        {n + k, 3 * n + 1 - 3 * k, 3 * k, 2 * n + 1 - k}, 8));
    ck.compare(label("DRt(x^{3n+2} w)"), apply_single(DRt, 3 * n + 2, w2), rhs, 3 * n + 2);
  }
  return ck.rep;
}

TermwiseReport verify_termwise_general(int d, int n_max) {
  if (d < 2 || d > 6)
    throw std::invalid_argument("verify_termwise_general: 2 <= d <= 6");
  TermwiseChecker ck;
  const long D = d;
  const OperatorForm DL = general_form(OpTag::DL, d);
  const OperatorForm DR = general_form(OpTag::DR, d);
  const OperatorForm DLt = general_form(OpTag::DLt, d);
  const OperatorForm DRt = general_form(OpTag::DRt, d);
  for (long n = 0; n <= n_max; ++n) {
    auto label = [&](const char* c, long j) {
      std::ostringstream os;
      os << c << " d=" << d << " n=" << n << " j=" << j;
      return os.str();
    };
    {
      const long m = (D + 1) * n + 1;
      const LaurentPoly w = w_closed_d(d, m);
      LaurentPolyQ rhs;
      for (long k = 1; k <= (D - 1) * n; ++k) {
        long kk = k - 1;
        rhs.add_term((D - 1) * n - 2 * kk,
                     fterm({D * D * n + D - D * kk - 1, D * n + D + D * kk},
                           {n + kk + 1, (D * D - 1) * n - (D + 1) * kk - 1,
                            D * kk + D + kk, D * n - kk}, D));
      }
      ck.compare(label("DL j=1", 1), apply_single(DL, m, w), rhs, m + 1);

      rhs.clear();
      for (long k = 0; k <= (D - 1) * n; ++k)
        rhs.add_term((D - 1) * n + 1 - 2 * k,
                     fterm({D * D * n + D - D * k, D * n + D * k},
                           {n + k, (D * D - 1) * n - (D + 1) * k, (D + 1) * k, D * n + 1 - k}));
      ck.compare(label("DR j=1", 1), apply_single(DR, m, w), rhs, m);

      rhs.clear();
      for (long k = 0; k <= (D - 1) * n; ++k)
        rhs.add_term((D - 1) * n + 1 - 2 * k,
                     fterm({D * D * n + D - D * k, D * n + D + D * k - 1},
                           {n + k, (D * D - 1) * n + D - (D + 1) * k - 1, (D + 1) * k,
                            D * n + 1 - k}, D));
      ck.compare(label("DLt j=1", 1), apply_single(DLt, m, w), rhs, m + 1);

      rhs.clear();
      for (long k = 1; k <= (D - 1) * n; ++k)
        rhs.add_term((D - 1) * n + 2 - 2 * k,
                     fterm({D * D * n + D - D * k, D * n + D * k},
                           {n + k, (D * D - 1) * n + D - (D + 1) * k, (D + 1) * k - D,
                            D * n + 1 - k}));
      ck.compare(label("DRt j=1", 1), apply_single(DRt, m, w), rhs, m);
    }
    for (long j = 2; j <= D + 1; ++j) {
      const long m = (D + 1) * n + j;
      const LaurentPoly w = w_closed_d(d, m);
      LaurentPolyQ rhs;
      for (long k = 0; k <= (D - 1) * n + j - 2; ++k)
        rhs.add_term((D - 1) * n + (j + 1) - 2 * (k + 1),
                     fterm({D * D * n + D * j - D * k - 1, D * n + D * (k + 1)},
                           {n + k + 1, (D * D - 1) * n + D * j - (D + 1) * (k + 1),
                            (D + 1) * (k + 1) - j, D * n + (j + 1) - (k + 1) - 1}, D));
      ck.compare(label("DL", j), apply_single(DL, m, w), rhs, m + 1);

      rhs.clear();
      for (long k = 0; k <= (D - 1) * n + j - 3; ++k)
        rhs.add_term((D - 1) * n + j - 2 - 2 * k,
                     fterm({D * D * n + D * (j - 1) - D * k, D * n + D * (k + 1)},
                           {n + k + 1, (D * D - 1) * n + D * (j - 2) - (D + 1) * k - 1,
                            (D + 1) * k + D - j + 2, D * n + j - k - 1}));
      ck.compare(label("DR", j), apply_single(DR, m, w), rhs, m);

      rhs.clear();
      const long omega = (j <= D) ? (D - 1) * n + j - 2 : (D - 1) * n + D - 2;
      for (long k = 0; k <= omega; ++k)
        rhs.add_term((D - 1) * n + j - 2 - 2 * k,
                     fterm({D * D * n + D * (j - 1) - D * k, D * n + 2 * D + D * k - 1},
                           {n + k + 1, (D * D - 1) * n + D * j - (D + 1) * (k + 1) - 1,
                            (D + 1) * k + D - j + 2, D * n + j - k - 1}, D));
      ck.compare(label("DLt", j), apply_single(DLt, m, w), rhs, m + 1);

      rhs.clear();
      const long alpha = (j == 2) ? 0 : 1;
      for (long k = alpha; k <= (D - 1) * n + j - 2; ++k)
        rhs.add_term((D - 1) * n + j - 1 - 2 * k,
                     fterm({D * D * n + D * (j - 1) - D * k, D * n + D + D * k},
                           {n + k + 1, (D * D - 1) * n + D * (j - 1) - (D + 1) * k - 1,
                            (D + 1) * k - j + 2, D * n + j - k - 1}));
      ck.compare(label("DRt", j), apply_single(DRt, m, w), rhs, m);
    }
  }
  return ck.rep;
}

}  // namespace ckb
