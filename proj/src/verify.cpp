#include "ckb/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ckb/diffops.hpp"
#include "ckb/genfun.hpp"
#include "ckb/ideal.hpp"
#include "ckb/trees.hpp"

namespace ckb {

namespace {

class Runner {
 public:
  explicit Runner(std::string suite) { rep_.suite = std::move(suite); }

  // Body returns true/false; exceptions become failures with the message.
  void check(const std::string& name, const std::string& params,
             const std::function<bool(std::string&)>& body) {
    Check c;
    c.name = name;
    c.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      std::string detail;
      c.status = body(detail) ? CheckStatus::Pass : CheckStatus::Fail;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.status = CheckStatus::Fail;
      c.detail = e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
    rep_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& params, const std::string& why) {
    rep_.checks.push_back({name, params, CheckStatus::Skip, why, 0.0});
  }

  VerifyReport take() { return std::move(rep_); }

 private:
  VerifyReport rep_;
};

std::string golden_w(int n) {
  static const char* table[] = {
      "0:1", "1:1", "0:2", "-1:1 1:4", "0:12 2:2", "-1:12 1:30",
      "-2:4 0:100 2:28", "-1:140 1:280 3:9", "-2:90 0:980 2:360",
      "-3:22 -1:1680 1:2940 3:220", "-2:1540 0:10584 2:4620 4:52"};
  return table[n];
}

bool tables_equal(const WeightTable& a, const WeightTable& b, int upto, std::string& why) {
  for (int n = 0; n <= upto; ++n)
    if (a.w[static_cast<size_t>(n)] != b.w[static_cast<size_t>(n)]) {
      why = "first difference at n = " + std::to_string(n);
      return false;
    }
  return true;
}

void crossmethod_suite(Runner& r, const VerifyOptions& opt) {
  const int n2 = opt.n_max;
  r.check("golden-table", "w_0..w_10 by recursion/fixedpoint/closed", [&](std::string& why) {
    WeightTable rec = w_recursion(10), fix = w_fixedpoint(2, 10), clo = w_closed_table(10);
    for (int n = 0; n <= 10; ++n) {
      if (rec.w[static_cast<size_t>(n)].to_text() != golden_w(n) ||
          fix.w[static_cast<size_t>(n)].to_text() != golden_w(n) ||
          clo.w[static_cast<size_t>(n)].to_text() != golden_w(n)) {
        why = "mismatch at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });
  r.check("recursion=fixedpoint=closed", "d=2, n<=" + std::to_string(n2),
          [&](std::string& why) {
            WeightTable rec = w_recursion(n2), fix = w_fixedpoint(2, n2),
                        clo = w_closed_table(n2);
            return tables_equal(rec, fix, n2, why) && tables_equal(fix, clo, n2, why);
          });
  const int n_enum2 = std::min(n2, 14);
  r.check("enum=closed", "d=2, n<=" + std::to_string(n_enum2), [&](std::string& why) {
    for (int n = 0; n <= n_enum2; ++n)
      if (w_enum(2, n, opt.guard) != w_closed(n)) {
        why = "mismatch at n = " + std::to_string(n);
        return false;
      }
    return true;
  });
  for (int d = 3; d <= opt.d_max; ++d) {
    r.check("fixedpoint=closed_d", "d=" + std::to_string(d) + ", N=" + std::to_string(opt.order),
            [&, d](std::string& why) {
              WeightTable fix = w_fixedpoint(d, opt.order);
              WeightTable clo = w_closed_d_table(d, opt.order);
              return tables_equal(fix, clo, opt.order, why);
            });
  }
  for (int d : {3, 4}) {
    if (d > opt.d_max) continue;
    const int ne = (d == 3) ? 8 : 6;
    r.check("enum=closed_d", "d=" + std::to_string(d) + ", n<=" + std::to_string(ne),
            [&, d, ne](std::string& why) {
              for (int n = 0; n <= ne; ++n)
                if (w_enum(d, n, opt.guard) != w_closed_d(d, n)) {
                  why = "mismatch at n = " + std::to_string(n);
                  return false;
                }
              return true;
            });
  }
  r.check("closed_d reproduces closed at d=2", "n<=" + std::to_string(std::min(n2, 40)),
          [&](std::string& why) {
            for (int n = 0; n <= std::min(n2, 40); ++n)
              if (w_closed_d(2, n) != w_closed(n)) {
                why = "mismatch at n = " + std::to_string(n);
                return false;
              }
            return true;
          });
}

void identities_suite(Runner& r, const VerifyOptions& opt) {
  r.check("coeffid", "d=2, n<=" + std::to_string(opt.n_max), [&](std::string& why) {
    auto rep = coeffid_check(2, w_closed_table(opt.n_max));
    if (!rep.pass) why = "fails at n=" + std::to_string(rep.fail_n) + " j=" + std::to_string(rep.fail_j);
    return rep.pass;
  });
  for (int d = 3; d <= opt.d_max; ++d)
    r.check("coeffid", "d=" + std::to_string(d) + ", n<=" + std::to_string(opt.order),
            [&, d](std::string& why) {
              auto rep = coeffid_check(d, w_fixedpoint(d, opt.order));
              if (!rep.pass)
                why = "fails at n=" + std::to_string(rep.fail_n) + " j=" + std::to_string(rep.fail_j);
              return rep.pass;
            });
  for (int d = 2; d <= opt.d_max; ++d)
    r.check("coeffid-series-form", "d=" + std::to_string(d) + ", N=" + std::to_string(opt.order),
            [&, d](std::string&) {
              SeriesX W = (d == 2 ? w_closed_table(opt.order) : w_closed_d_table(d, opt.order))
                              .to_series();
              return coeffid_series_residual(d, W).is_zero();
            });
  r.check("algebraic-equation", "d=2..d_max", [&](std::string& why) {
    for (int d = 2; d <= opt.d_max; ++d) {
      SeriesX W = (d == 2 ? w_closed_table(opt.order) : w_closed_d_table(d, opt.order)).to_series();
      if (!algebraic_residual(d, W).is_zero()) {
        why = "residual nonzero at d=" + std::to_string(d);
        return false;
      }
    }
    return true;
  });
  r.check("parity", "j = n (mod 2) for all computed tables", [&](std::string& why) {
    for (int d = 2; d <= opt.d_max; ++d) {
      WeightTable tab = (d == 2) ? w_closed_table(opt.n_max) : w_closed_d_table(d, opt.order);
      for (int n = 0; n <= tab.max_n(); ++n) {
        bool ok = true;
        tab.w[static_cast<size_t>(n)].for_each_term([&](long j, const Int&) {
          if ((j - n) % 2 != 0) ok = false;
        });
        if (!ok) {
          why = "violated at d=" + std::to_string(d) + " n=" + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  });
  r.check("degree-bound", "d=2: |j| <= (n+2)/3 and per-residue bounds",
          [&](std::string& why) {
            WeightTable tab = w_closed_table(opt.n_max);
            for (long n = 0; n <= tab.max_n(); ++n) {
              const LaurentPoly& w = tab.w[static_cast<size_t>(n)];
              long lo, hi;
              if (n % 3 == 1) { hi = n / 3 + 1; lo = 1 - n / 3; }
              else { hi = n / 3; lo = -n / 3; }
              bool ok = true;
              w.for_each_term([&](long j, const Int&) {
                if (3 * j > n + 2 || -3 * j > n + 2 || j > hi || j < lo) ok = false;
              });
              if (!ok) {
                why = "bound violated at n=" + std::to_string(n);
                return false;
              }
            }
            return true;
          });
  r.check("third-formula at j=d+1", "matches residue-0 formula at n+1, d<=d_max",
          [&](std::string& why) {
            for (int d = 2; d <= opt.d_max; ++d)
              for (long n = 0; n <= 3; ++n)
                if (w_closed_d_third_formula(d, n, d + 1) != w_closed_d(d, (d + 1) * (n + 1))) {
                  why = "d=" + std::to_string(d) + " n=" + std::to_string(n);
                  return false;
                }
            return true;
          });
}

void pde_suite(Runner& r, const VerifyOptions& opt) {
  const int N2 = std::max(opt.n_max, opt.order);
  for (int d = 2; d <= opt.d_max; ++d) {
    const int N = (d == 2) ? N2 : opt.order;
    r.check("pde-residuals", "d=" + std::to_string(d) + ", N=" + std::to_string(N),
            [&, d, N](std::string& why) {
              SeriesX W = (d == 2 ? w_closed_table(N) : w_closed_d_table(d, N)).to_series();
              auto [res, rest] = pde_residuals(d, W);
              if (!res.series.zero_through(res.complete)) {
                why = "(DL-DR)W nonzero";
                return false;
              }
              if (!rest.series.zero_through(rest.complete)) {
                why = "(DLt-DRt)W nonzero";
                return false;
              }
              return true;
            });
    r.check("corollary-pde", "d=" + std::to_string(d) + ", N=" + std::to_string(N),
            [&, d, N](std::string&) {
              SeriesX W = (d == 2 ? w_closed_table(N) : w_closed_d_table(d, N)).to_series();
              return corollary_residual(d, W).is_zero();
            });
    const int Ns = std::min(N, 20);
    r.check("pde-solve=fixedpoint", "d=" + std::to_string(d) + ", N=" + std::to_string(Ns),
            [&, d, Ns](std::string&) {
              return pde_solve(d, Ns) == w_fixedpoint(d, Ns).to_series();
            });
  }
  r.check("termwise-lemma", "d=2, n<=" + std::to_string(std::min(opt.n_max, 10)),
          [&](std::string& why) {
            auto rep = verify_termwise_d2(std::min(opt.n_max, 10));
            why = rep.first_fail;
            return rep.pass;
          });
  for (int d = 2; d <= std::min(opt.d_max, 6); ++d)
    r.check("termwise-general", "d=" + std::to_string(d) + ", n<=4", [&, d](std::string& why) {
      auto rep = verify_termwise_general(d, 4);
      why = rep.first_fail;
      return rep.pass;
    });
}

void ideal_suite(Runner& r, const VerifyOptions& opt) {
  const int d_guard = opt.long_run ? 6 : 4;
  for (int d = 2; d <= opt.d_max; ++d) {
    const std::string params = "d=" + std::to_string(d);
    if (d > d_guard) {
      r.skip("ideal-certificate", params, "behind long-run flag");
      continue;
    }
    r.check("ideal-certificate", params, [&, d](std::string& why) {
      auto rep = ideal_certificate(d, true, d_guard);
      std::ostringstream os;
      os << "N=" << rep.N << " |Q0|=" << rep.q0_terms << " |Qt0|=" << rep.qt0_terms;
      why = os.str();
      return rep.pass();
    });
  }
}

void specializations_suite(Runner& r, const VerifyOptions& opt) {
  const int N = opt.n_max;
  r.check("W(-x,x)=1 and W(-x^-1,x)=0", "N=" + std::to_string(N), [&](std::string& why) {
    auto sp = specialization_check(N);
    why = "complete through x^" + std::to_string(sp.complete);
    return sp.residual_at_minus_x.is_zero() && sp.residual_at_minus_inv_x.is_zero() &&
           sp.complete >= (2 * N) / 3;
  });
  const int NR = std::min(N, 40);
  r.check("R,C printed coefficients", "first six each", [&](std::string& why) {
    auto rc = row_col_series(5);
    const long Rv[] = {1, 4, 32, 384, 5376, 82176};
    const long Cv[] = {2, 8, 80, 1024, 14848, 231936};
    for (int i = 0; i <= 5; ++i) {
      if (rc.R[i] != LaurentPoly::constant(Int(Rv[i])) ||
          rc.C[i] != LaurentPoly::constant(Int(Cv[i]))) {
        why = "mismatch at index " + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  r.check("R,C quartic equations + Lagrange + even-restricted sums",
          "N=" + std::to_string(NR), [&](std::string& why) {
            auto rc = row_col_series(NR);
            const SeriesX &R = rc.R, &C = rc.C;
            const int NN = R.order();
            // 1 + x - R + 2x R^2 + x R^4 = 0
            SeriesX one = SeriesX::one(NN);
            SeriesX x_series(NN);
            if (NN >= 1) x_series[1] = LaurentPoly::one();
            SeriesX R2 = R * R;
            SeriesX resR = one + x_series - R + R2.mul_monomial(0, 1, Int(2)) +
                           (R2 * R2).mul_monomial(0, 1, Int(1));
            if (!resR.is_zero()) {
              why = "R quartic fails";
              return false;
            }
            // 2 - C + 2x C^2 + x^2 C^4 = 0
            SeriesX C2 = C * C;
            SeriesX resC = one + one - C + C2.mul_monomial(0, 1, Int(2)) +
                           (C2 * C2).mul_monomial(0, 2, Int(1));
            if (!resC.is_zero()) {
              why = "C quartic fails";
              return false;
            }
            if (R != r_series_lagrange(NN)) {
              why = "Lagrange form of R differs";
              return false;
            }
            // even-restricted sums: rows -> (R+1)/2, columns -> C/2
            WeightTable tab = w_closed_table(3 * NN + 1);
            auto entry = [&](long rr, long cc) -> Int {
              return (rr + cc > tab.max_n()) ? Int(0)
                                             : tab.w[static_cast<size_t>(rr + cc)].coeff(rr - cc);
            };
            for (long rr = 0; rr <= NN; ++rr) {
              Int s = 0;
              for (long cc = rr % 2; cc <= 2 * rr; cc += 2) s += entry(rr, cc);
              Int expect = R[static_cast<int>(rr)].coeff(0) + (rr == 0 ? 1 : 0);
              if (2 * s != expect) {
                why = "even-restricted row sum fails at r=" + std::to_string(rr);
                return false;
              }
            }
            for (long cc = 0; cc <= NN; ++cc) {
              Int s = 0;
              for (long rr = cc % 2; rr <= 2 * cc + 1; rr += 2) s += entry(rr, cc);
              if (2 * s != C[static_cast<int>(cc)].coeff(0)) {
                why = "even-restricted column sum fails at c=" + std::to_string(cc);
                return false;
              }
            }
            return true;
          });
  r.check("array golden rows", "rows 0..5 of the printed array", [&](std::string& why) {
    auto rc = row_col_series(5);
    // row 5 printed with 612 for (w_14, t^-4); computed value is 6120
    const std::vector<std::vector<long>> rows = {
        {1},
        {1, 2, 1},
        {0, 4, 12, 12, 4},
        {0, 2, 30, 100, 140, 90, 22},
        {0, 0, 28, 280, 980, 1680, 1540, 728, 140},
        {0, 0, 9, 360, 2940, 10584, 20790, 24024, 16380, 6120, 969}};
    for (size_t rr = 0; rr < rows.size(); ++rr)
      for (size_t cc = 0; cc < rows[rr].size(); ++cc)
        if (rc.array.rows[rr][cc] != rows[rr][cc]) {
          why = "entry (" + std::to_string(rr) + "," + std::to_string(cc) + ") differs";
          return false;
        }
    return true;
  });
  r.check("extremal A,B", "golden + A=1+xB^2, B=A^2 through N=" + std::to_string(NR),
          [&](std::string& why) {
            auto ab = extremal_AB(NR);
            const long Av[] = {1, 1, 4, 22, 140, 969, 7084};
            const long Bv[] = {1, 2, 9, 52, 340, 2394, 17710};
            for (int i = 0; i <= 6 && i <= NR; ++i)
              if (ab.A[i].coeff(0) != Av[i] || ab.B[i].coeff(0) != Bv[i]) {
                why = "sequence mismatch at n=" + std::to_string(i);
                return false;
              }
            SeriesX one = SeriesX::one(ab.A.order());
            if (ab.A != one + (ab.B * ab.B).mul_monomial(0, 1, Int(1))) {
              why = "A = 1 + x B^2 fails";
              return false;
            }
            if (ab.B != ab.A * ab.A) {
              why = "B = A^2 fails";
              return false;
            }
            return true;
          });
  r.check("derivative series", "x - Wt + x(4x+3)Wt^2 = 0, N=" + std::to_string(N),
          [&](std::string& why) {
            auto wp = wprime_series(N);
            const SeriesX& s = wp.series;
            const long first[] = {0, 1, 0, 3, 4, 18};
            for (int i = 0; i <= 5 && i <= N; ++i)
              if (s[i].coeff(0) != first[i]) {
                why = "initial terms differ at n=" + std::to_string(i);
                return false;
              }
            SeriesX sq = s * s;
            SeriesX res(s.order());
            if (s.order() >= 1) res[1] = LaurentPoly::one();
            res = res - s + sq.mul_monomial(0, 1, Int(3)) + sq.mul_monomial(0, 2, Int(4));
            if (!res.is_zero()) {
              why = "quadratic residual nonzero";
              return false;
            }
            return true;
          });
}

void noncomm_suite(Runner& r, const VerifyOptions& opt) {
  const int L = std::min(std::max(opt.order, 8), 12);
  r.check("displayed terms", "length <= 8", [&](std::string& why) {
    FreeWordSeries N = noncomm_N(8);
    struct Term { const char* w; long c; };
    // every displayed term of the series, including the coefficient-2 family
    const Term expected[] = {
        {"UV", 1}, {"UUU", 1}, {"UVVU", 1}, {"UUVV", 1},
        {"UVVVV", 1}, {"UVUUU", 1}, {"UUVUU", 1}, {"UUUVU", 1}, {"UUUUV", 1},
        {"UUUUUU", 2}, {"UUUVVV", 2}, {"UUVVVU", 2}, {"UVVVUU", 2},
        {"UUVUVV", 1}, {"UVVUVU", 1}, {"UUVVUV", 1}, {"UVVUUV", 1},
        {"UVUUVV", 1}, {"UVUVVU", 1}};
    for (const auto& e : expected)
      if (N.coeff(e.w) != e.c) {
        why = std::string("coefficient of ") + e.w + " wrong";
        return false;
      }
    // all words start with U and have length n+2
    for (const auto& [w, c] : N.coeffs())
      if (w.empty() || w[0] != 'U') {
        why = "word not starting with U";
        return false;
      }
    return true;
  });
  r.check("N = UV + U (V^-1 Nbar)^2", "length <= " + std::to_string(L), [&](std::string& why) {
    FreeWordSeries N = noncomm_N(L);
    FreeWordSeries quot = N.bar().left_quotient('V');
    FreeWordSeries rhs = FreeWordSeries(L);
    rhs.add_term("UV", Int(1));
    FreeWordSeries u(L);
    u.add_term("U", Int(1));
    rhs = rhs + u * (quot * quot);
    if (!(N == rhs)) {
      why = "identity fails";
      return false;
    }
    return true;
  });
}

void conjectures_suite(Runner& r, const VerifyOptions& opt) {
  const int n_pos = std::min(opt.n_max, 24);
  r.check("positivity-conjectures", "n<=" + std::to_string(n_pos), [&](std::string& why) {
    auto rep = positivity_suite(n_pos);
    std::ostringstream os;
    if (rep.first_fail_real_rooted >= 0)
      os << "real-rootedness fails at n=" << rep.first_fail_real_rooted << "; ";
    if (rep.first_fail_interlacing >= 0)
      os << "interlacing fails at n=" << rep.first_fail_interlacing << "; ";
    if (rep.first_fail_positivity >= 0)
      os << "symmetric positivity fails at n=" << rep.first_fail_positivity << "; ";
    why = os.str().empty() ? "all conjecture checks hold" : os.str();
    return rep.all_pass();
  });
  r.check("conjdfair", "fair counts for d<=" + std::to_string(opt.d_max), [&](std::string& why) {
    for (int d = 2; d <= opt.d_max; ++d) {
      WeightTable tab = (d == 2) ? w_closed_table(opt.order) : w_closed_d_table(d, opt.order);
      for (long n = 0; 2 * n <= tab.max_n(); ++n)
        if (tab.w[static_cast<size_t>(2 * n)].coeff(0) != fair_formula(d, n)) {
          why = "d=" + std::to_string(d) + " n=" + std::to_string(n);
          return false;
        }
    }
    return true;
  });
  r.check("known-typo", "(w_14, t^-4): computed 6120 vs printed 612", [&](std::string& why) {
    Int computed = w_closed(14).coeff(-4);
    Int enumerated = w_enum(2, 14, opt.guard).coeff(-4);
    if (computed != 6120 || enumerated != 6120) {
      why = "computed value is " + computed.get_str();
      return false;
    }
    why = "expected discrepancy with the printed table confirmed (6120 != 612)";
    return true;
  });
}

void eulerian_suite(Runner& r, const VerifyOptions& opt) {
  r.check("eulerian enum=formula", "d=2, n<=4", [&](std::string& why) {
    for (long n = 0; n <= 4; ++n)
      if (eulerian_count_enum(2, n, opt.guard) != eulerian_formula(2, n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
  r.check("eulerian enum=formula", "d=3, n<=3", [&](std::string& why) {
    // t_{3,13} ~ 3.0e8 exceeds the default guard; the eulerian filter prunes
    // the walk so an explicit higher guard is safe here.
    Int guard = std::max(opt.guard, Int(400000000));
    for (long n = 0; n <= 3; ++n)
      if (eulerian_count_enum(3, n, guard) != eulerian_formula(3, n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
  r.check("eulerian formula = B sequence", "d=2, n<=6", [&](std::string& why) {
    auto ab = extremal_AB(6);
    for (long n = 0; n <= 6; ++n)
      if (eulerian_formula(2, n) != ab.B[static_cast<int>(n)].coeff(0)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
}

void fair_suite(Runner& r, const VerifyOptions& opt) {
  r.check("fair const-term=formula", "d=2, n<=" + std::to_string(opt.n_max / 2),
          [&](std::string& why) {
            WeightTable tab = w_closed_table(opt.n_max);
            for (long n = 0; 2 * n <= tab.max_n(); ++n)
              if (tab.w[static_cast<size_t>(2 * n)].coeff(0) != fair_formula(2, n)) {
                why = "n=" + std::to_string(n);
                return false;
              }
            return true;
          });
  r.check("fair formula=lattice paths", "n<=6", [&](std::string& why) {
    for (int n = 0; n <= 6; ++n)
      if (fair_formula(2, n) != lattice_path_count(n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
  r.check("fair enum", "(2,n<=5), (3,n<=3)", [&](std::string& why) {
    for (long n = 0; n <= 5; ++n)
      if (fair_count_enum(2, n, opt.guard) != fair_formula(2, n)) {
        why = "d=2 n=" + std::to_string(n);
        return false;
      }
    for (long n = 0; n <= 3; ++n)
      if (fair_count_enum(3, n, opt.guard) != fair_formula(3, n)) {
        why = "d=3 n=" + std::to_string(n);
        return false;
      }
    return true;
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"all",      "crossmethod",     "identities", "pde",  "ideal",
          "specializations", "noncomm", "conjectures", "eulerian", "fair"};
}

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
  Runner r(suite);
  bool known = false;
  auto want = [&](const char* name) {
    bool w = (suite == name) || suite == "all";
    known = known || (suite == name);
    return w;
  };
  if (want("crossmethod")) crossmethod_suite(r, opt);
  if (want("identities")) identities_suite(r, opt);
  if (want("pde")) pde_suite(r, opt);
  if (want("ideal")) ideal_suite(r, opt);
  if (want("specializations")) specializations_suite(r, opt);
  if (want("noncomm")) noncomm_suite(r, opt);
  if (want("conjectures")) conjectures_suite(r, opt);
  if (want("eulerian")) eulerian_suite(r, opt);
  if (want("fair")) fair_suite(r, opt);
  if (!known && suite != "all")
    throw std::invalid_argument("unknown suite '" + suite + "'");
  return r.take();
}

std::string report_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << "\n";
  size_t width = 0;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks) {
    const char* st = c.status == CheckStatus::Pass   ? "PASS"
                     : c.status == CheckStatus::Fail ? "FAIL"
                                                     : "SKIP";
    os << "  " << st << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
       << c.params;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (rep.pass() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

std::string report_timings(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << c.ms;
    os << "  " << ms.str() << " ms  " << c.name << " " << c.params << "\n";
  }
  return os.str();
}

}  // namespace ckb
