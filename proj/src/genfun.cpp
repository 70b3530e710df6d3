#include "ckb/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "ckb/sturm.hpp"

namespace ckb {

Int t_dn(int d, long n) {
  if (d < 2 || n < 0) throw std::invalid_argument("t_dn: need d >= 2, n >= 0");
  return exact_div(binomial(static_cast<long>(d) * n, n), Int((d - 1) * n + 1));
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Enum: return "enum";
    case Method::Recursion: return "recursion";
    case Method::FixedPoint: return "fixedpoint";
    case Method::Closed: return "closed";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "enum") return Method::Enum;
  if (name == "recursion") return Method::Recursion;
  if (name == "fixedpoint") return Method::FixedPoint;
  if (name == "closed") return Method::Closed;
  throw std::invalid_argument("unknown method '" + name + "'");
}

SeriesX WeightTable::to_series() const {
  SeriesX s(max_n());
  for (int n = 0; n <= max_n(); ++n) s[n] = w[static_cast<size_t>(n)];
  return s;
}

WeightTable w_recursion(int n_max) {
  if (n_max < 0) throw std::invalid_argument("w_recursion: n_max >= 0");
  WeightTable tab;
  tab.d = 2;
  tab.method = Method::Recursion;
  tab.w.push_back(LaurentPoly::one());
  std::vector<LaurentPoly> bars{LaurentPoly::one()};
  for (int n = 0; n < n_max; ++n) {
    LaurentPoly acc;
    for (int k = 0; k <= n; ++k) acc.add_mul(bars[static_cast<size_t>(k)],
                                             bars[static_cast<size_t>(n - k)]);
    tab.w.push_back(acc.shifted(1));
    bars.push_back(tab.w.back().bar());
  }
  return tab;
}

namespace {

SeriesX series_pow_chain(const SeriesX& s, int e) {
  if (e == 0) return SeriesX::one(s.order());
  SeriesX r = s;
  for (int i = 1; i < e; ++i) r = r * s;
  return r;
}

// 1 + t x (1 + t^{-1} x Z^d)^d at Z's truncation order.
SeriesX dissection_map(int d, const SeriesX& z) {
  const int o = z.order();
  SeriesX inner = SeriesX::one(o) + series_pow_chain(z, d).mul_monomial(-1, 1, Int(1));
  return SeriesX::one(o) + series_pow_chain(inner, d).mul_monomial(1, 1, Int(1));
}

}  // namespace

WeightTable w_fixedpoint(int d, int N) {
  if (d < 2 || N < 0) throw std::invalid_argument("w_fixedpoint: d >= 2, N >= 0");
  SeriesX z = SeriesX::one(0);
  SeriesX prev = z;
  for (int i = 1; i <= N + 1; ++i) {
    const int o = std::min(i, N);
    prev = z.truncated(o);
    z = dissection_map(d, prev);
  }
  if (!z.equal_through(prev.truncated(N), N))
    throw std::logic_error("w_fixedpoint: iterate not stable after N+1 steps");
  WeightTable tab;
  tab.d = d;
  tab.method = Method::FixedPoint;
  for (int n = 0; n <= N; ++n) tab.w.push_back(z[n]);
  return tab;
}

LaurentPoly w_closed(long n) {
  if (n < 0) throw std::invalid_argument("w_closed: n >= 0");
  const long q = n / 3, r = n % 3;
  LaurentPoly w;
  if (r == 0) {
    for (long k = 0; k <= q; ++k)
      w.set_coeff(q - 2 * k,
                  exact_div(binomial(4 * q - 2 * k, q + k) * binomial(2 * q + 2 * k, 3 * k),
                            Int(3 * k + 1)));
  } else if (r == 1) {
    for (long k = 0; k <= q; ++k)
      w.set_coeff(q + 1 - 2 * k,
                  exact_div(binomial(4 * q + 2 - 2 * k, q + k) * binomial(2 * q + 2 * k, 3 * k),
                            Int(2 * q + 1 - k)));
  } else {
    for (long k = 0; k <= q; ++k)
      w.set_coeff(q - 2 * k,
                  exact_div(binomial(4 * q + 2 - 2 * k, q + 1 + k) *
                                binomial(2 * q + 2 + 2 * k, 3 * k + 1),
                            Int(3 * k + 2)));
  }
  return w;
}

WeightTable w_closed_table(int n_max) {
  WeightTable tab;
  tab.d = 2;
  tab.method = Method::Closed;
  for (long n = 0; n <= n_max; ++n) tab.w.push_back(w_closed(n));
  return tab;
}

LaurentPoly w_closed_d(int d, long m) {
  if (d < 2 || m < 0) throw std::invalid_argument("w_closed_d: d >= 2, m >= 0");
  const long dd = d;
  const long n = m / (dd + 1), j = m % (dd + 1);
  LaurentPoly w;
  if (j == 0) {
    for (long k = 0; k <= (dd - 1) * n; ++k)
      w.set_coeff((dd - 1) * n - 2 * k,
                  exact_div(binomial(dd * dd * n - dd * k, n + k) *
                                binomial(dd * (n + k), (dd + 1) * k),
                            Int((dd + 1) * k + 1)));
  } else if (j == 1) {
    for (long k = 0; k <= (dd - 1) * n; ++k)
      w.set_coeff((dd - 1) * n + 1 - 2 * k,
                  exact_div(binomial(dd * dd * n + dd - dd * k, n + k) *
                                binomial(dd * (n + k), (dd + 1) * k),
                            Int(dd * n + 1 - k)));
  } else {
    for (long k = 0; k <= (dd - 1) * n + j - 2; ++k)
      w.set_coeff((dd - 1) * n + j - 2 - 2 * k,
                  exact_div(binomial(dd * dd * n + dd * (j - 1) - dd * k, n + 1 + k) *
                                binomial(dd * n + dd + dd * k, (dd + 1) * k + dd - j + 1),
                            Int((dd + 1) * k + dd - j + 2)));
  }
  return w;
}

LaurentPoly w_closed_d_third_formula(int d, long n, long j) {
  const long dd = d;
  LaurentPoly w;
  for (long k = 0; k <= (dd - 1) * n + j - 2; ++k)
    w.set_coeff((dd - 1) * n + j - 2 - 2 * k,
                exact_div(binomial(dd * dd * n + dd * (j - 1) - dd * k, n + 1 + k) *
                              binomial(dd * n + dd + dd * k, (dd + 1) * k + dd - j + 1),
                          Int((dd + 1) * k + dd - j + 2)));
  return w;
}

WeightTable w_closed_d_table(int d, int n_max) {
  WeightTable tab;
  tab.d = d;
  tab.method = Method::Closed;
  for (long m = 0; m <= n_max; ++m) tab.w.push_back(w_closed_d(d, m));
  return tab;
}

SeriesX algebraic_residual(int d, const SeriesX& W) {
  const int N = W.order();
  if (d == 2) {
    SeriesX res(N);
    res[0] = LaurentPoly::monomial(1, Int(1));                 // t
    if (N >= 1) res[1] = LaurentPoly::monomial(2, Int(1));     // t^2 x
    SeriesX w2 = W * W;
    res = res - W.mul_monomial(1, 0, Int(1));                  // - t W
    res = res + w2.mul_monomial(1, 2, Int(2));                 // + 2 t x^2 W^2
    res = res + (w2 * w2).mul_monomial(0, 3, Int(1));          // + x^3 W^4
    return res;
  }
  return W - dissection_map(d, W);
}

Int fair_formula(int d, long n) {
  if (d < 2 || n < 0) throw std::invalid_argument("fair_formula: d >= 2, n >= 0");
  Int b = binomial(static_cast<long>(d) * n, n);
  return exact_div(b * b, Int((d - 1) * n + 1));
}

Int eulerian_formula(int d, long n) {
  if (d < 2 || n < 0) throw std::invalid_argument("eulerian_formula: d >= 2, n >= 0");
  return exact_div(binomial(static_cast<long>(d) * d * n + d, n),
                   Int(static_cast<long>(d) * n + 1));
}

long spec_max_contributor(int m, bool inverse) {
  if (m % 2 != 0) return -1;  // j = n (mod 2) forces n +- j even
  return 3L * m / 2 + (inverse ? 1 : 0);
}

Specializations specialization_check(int N) {
  if (N < 2) throw std::invalid_argument("specialization_check: N >= 2");
  const int T = N + 1;
  WeightTable tab = w_closed_table(T);
  int complete = 0;
  while (complete + 1 <= T &&
         spec_max_contributor(complete + 1, false) <= T &&
         spec_max_contributor(complete + 1, true) <= T)
    ++complete;
  Specializations out{SeriesX(complete), SeriesX(complete), complete};
  for (int n = 0; n <= T; ++n) {
    tab.w[static_cast<size_t>(n)].for_each_term([&](long j, const Int& c) {
      Int signed_c = (j % 2 != 0) ? Int(-c) : c;
      long m1 = n + j, m2 = n - j;
      if (m1 >= 0 && m1 <= complete)
        out.residual_at_minus_x[static_cast<int>(m1)].add_term(0, signed_c);
      if (m2 >= 0 && m2 <= complete)
        out.residual_at_minus_inv_x[static_cast<int>(m2)].add_term(0, signed_c);
    });
  }
  out.residual_at_minus_x[0].add_term(0, Int(-1));  // against the constant 1
  return out;
}

RowColResult row_col_series(int N) {
  if (N < 0) throw std::invalid_argument("row_col_series: N >= 0");
  const int T = 3 * N + 1;
  WeightTable tab = w_closed_table(T);
  for (int n = 0; n <= T; ++n)
    tab.w[static_cast<size_t>(n)].for_each_term([&](long j, const Int&) {
      if ((n + j) % 2 != 0)
        throw std::logic_error("row_col_series: parity violation at n=" +
                               std::to_string(n) + " j=" + std::to_string(j));
    });
  auto entry = [&](long r, long c) -> Int {
    long n = r + c;
    if (n > T) return 0;
    return tab.w[static_cast<size_t>(n)].coeff(r - c);
  };
  RowColResult out{SeriesX(N), SeriesX(N), {}};
  for (long r = 0; r <= N; ++r) {
    Int sum = 0;
    for (long c = 0; c <= 2 * r; ++c) sum += entry(r, c);
    out.R[static_cast<int>(r)] = LaurentPoly::constant(sum);
  }
  for (long c = 0; c <= N; ++c) {
    Int sum = 0;
    for (long r = 0; r <= 2 * c + 1; ++r) sum += entry(r, c);
    out.C[static_cast<int>(c)] = LaurentPoly::constant(sum);
  }
  out.array.rows.resize(static_cast<size_t>(N) + 1);
  for (long r = 0; r <= N; ++r) {
    auto& row = out.array.rows[static_cast<size_t>(r)];
    row.reserve(static_cast<size_t>(2 * N) + 1);
    for (long c = 0; c <= 2 * N; ++c) row.push_back(entry(r, c));
  }
  return out;
}

SeriesX r_series_lagrange(int N) {
  SeriesX R = SeriesX::one(N);
  for (long n = 1; n <= N; ++n) {
    Int sum = 0;  // sum_k C(2n,k) C(2n-k, n-1-2k) 2^(2n-k), then / n
    for (long k = 0; 2 * k <= n - 1; ++k) {
      Int term = binomial(2 * n, k) * binomial(2 * n - k, n - 1 - 2 * k);
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                   static_cast<unsigned long>(2 * n - k));
      sum += term;
    }
    R[static_cast<int>(n)] = LaurentPoly::constant(exact_div(sum, Int(n)));
  }
  return R;
}

ExtremalAB extremal_AB(int N) {
  if (N < 0) throw std::invalid_argument("extremal_AB: N >= 0");
  WeightTable tab = w_closed_table(3 * N + 1);
  ExtremalAB out{SeriesX(N), SeriesX(N)};
  for (long n = 0; n <= N; ++n) {
    out.A[static_cast<int>(n)] =
        LaurentPoly::constant(tab.w[static_cast<size_t>(3 * n)].coeff(-n));
    out.B[static_cast<int>(n)] =
        LaurentPoly::constant(tab.w[static_cast<size_t>(3 * n + 1)].coeff(n + 1));
  }
  return out;
}

WPrimeSeries wprime_series(int N) {
  if (N < 0) throw std::invalid_argument("wprime_series: N >= 0");
  WPrimeSeries out{SeriesX(N), Rat(0)};
  Int last = 0;
  for (long n = 0; n <= N; ++n) {
    Int v = w_closed(n).derivative_at_one();
    out.series[static_cast<int>(n)] = LaurentPoly::constant(v);
    if (n == N) last = v;
  }
  out.ratio_at_N = Rat(8 * last) / Rat(3 * t_dn(2, N));
  return out;
}

CoeffIdReport coeffid_check(int d, const WeightTable& table) {
  CoeffIdReport rep;
  for (int n = 0; n <= table.max_n() && rep.pass; ++n) {
    const LaurentPoly& w = table.w[static_cast<size_t>(n)];
    w.for_each_term([&](long j, const Int& c) {
      if (!rep.pass) return;
      Int lhs = Int((d - 1) * static_cast<long>(n) + 2 + (d + 1) * j) * w.coeff(-j);
      Int rhs = Int((d - 1) * static_cast<long>(n) + 2 - (d + 1) * j) * c;
      if (lhs != rhs) {
        rep.pass = false;
        rep.fail_n = n;
        rep.fail_j = j;
      }
    });
  }
  return rep;
}

std::vector<Int> homogenized_qn(const LaurentPoly& w_n, long n) {
  std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
  w_n.for_each_term([&](long j, const Int& c) {
    if ((n + j) % 2 != 0)
      throw std::logic_error("homogenized_qn: parity violation");
    coeffs[static_cast<size_t>((n + j) / 2)] = c;
  });
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

namespace {

// Nonzero-root part of Q_n(u,1) as a QPoly (strip u^valuation).
QPoly stripped_qn(const std::vector<Int>& coeffs) {
  size_t v = 0;
  while (v < coeffs.size() && coeffs[v] == 0) ++v;
  QPoly p;
  for (size_t i = v; i < coeffs.size(); ++i) p.emplace_back(coeffs[i]);
  return qpoly_trim(std::move(p));
}

bool real_rooted(const QPoly& p) {
  if (qpoly_degree(p) <= 0) return true;
  QPoly s = qpoly_squarefree(p);
  auto chain = sturm_chain(s);
  return sturm_count_all(chain) == qpoly_degree(s);
}

bool interlaces(const QPoly& smaller, const QPoly& larger) {
  QPoly p = qpoly_squarefree(smaller), q = qpoly_squarefree(larger);
  if (qpoly_degree(p) < 0 || qpoly_degree(q) < 1) return qpoly_degree(p) <= 0;
  if (qpoly_degree(qpoly_gcd(p, q)) > 0) return false;  // shared root
  auto ip = isolate_real_roots(p);
  auto iq = isolate_real_roots(q);
  if (iq.size() != ip.size() + 1) return false;
  auto chain_p = sturm_chain(p);
  auto chain_q = sturm_chain(q);
  // Refine until no p-interval overlaps a q-interval (no common roots, so
  // this terminates).
  bool overlap = true;
  while (overlap) {
    overlap = false;
    for (auto& a : ip)
      for (auto& b : iq)
        if (a.first < b.second && b.first < a.second) {
          refine_root(chain_p, a.first, a.second);
          refine_root(chain_q, b.first, b.second);
          overlap = true;
        }
  }
  // Expect q p q p ... p q in sorted order.
  for (size_t i = 0; i < ip.size(); ++i) {
    if (!(iq[i].second <= ip[i].first)) return false;
    if (!(ip[i].second <= iq[i + 1].first)) return false;
  }
  return true;
}

bool symmetric_reduction_nonneg(const LaurentPoly& w, long n) {
  // Q_n(u,v) + Q_n(v,u) rewritten in e1 = u+v, e2 = uv: each entry (j, c)
  // contributes c*(u^a v^b + u^b v^a) with a = (n+j)/2, b = (n-j)/2, i.e.
  // 2c e2^a when j = 0 and c e2^min(a,b) p_|j| otherwise, with power sums
  // p_k = e1 p_{k-1} - e2 p_{k-2}, p_0 = 2, p_1 = e1.
  // grid[i][j2] = coefficient of e1^i e2^j2.
  const size_t sz = static_cast<size_t>(n) + 2;
  std::vector<std::vector<Int>> grid(sz, std::vector<Int>(sz, Int(0)));
  std::vector<std::vector<std::vector<Int>>> p;  // p[k][i][j2]
  p.push_back({{Int(2)}});
  p.push_back({{Int(0)}, {Int(1)}});
  for (long k = 2; k <= n; ++k) {
    std::vector<std::vector<Int>> cur(static_cast<size_t>(k) + 1,
                                      std::vector<Int>(static_cast<size_t>(k) + 1, Int(0)));
    const auto& p1 = p[static_cast<size_t>(k - 1)];
    for (size_t i = 0; i < p1.size(); ++i)
      for (size_t j = 0; j < p1[i].size(); ++j)
        if (p1[i][j] != 0) cur[i + 1][j] += p1[i][j];
    const auto& p2 = p[static_cast<size_t>(k - 2)];
    for (size_t i = 0; i < p2.size(); ++i)
      for (size_t j = 0; j < p2[i].size(); ++j)
        if (p2[i][j] != 0) cur[i][j + 1] -= p2[i][j];
    p.push_back(std::move(cur));
  }
  w.for_each_term([&](long j, const Int& c) {
    const long lo = (n - std::labs(j)) / 2, k = std::labs(j);
    if (k == 0) {
      grid[0][static_cast<size_t>(lo)] += 2 * c;
      return;
    }
    const auto& pk = p[static_cast<size_t>(k)];
    for (size_t i = 0; i < pk.size(); ++i)
      for (size_t jj = 0; jj < pk[i].size(); ++jj)
        if (pk[i][jj] != 0) grid[i][jj + static_cast<size_t>(lo)] += c * pk[i][jj];
  });
  for (const auto& row : grid)
    for (const auto& v : row)
      if (v < 0) return false;
  return true;
}

}  // namespace

PositivityReport positivity_suite(int n_max) {
  PositivityReport rep;
  rep.n_max = n_max;
  WeightTable tab = w_closed_table(n_max + 3);
  std::vector<QPoly> stripped(static_cast<size_t>(n_max) + 4);
  for (long n = 0; n <= n_max + 3; ++n)
    stripped[static_cast<size_t>(n)] =
        stripped_qn(homogenized_qn(tab.w[static_cast<size_t>(n)], n));
  for (long n = 0; n <= n_max && rep.first_fail_real_rooted < 0; ++n)
    if (!real_rooted(stripped[static_cast<size_t>(n)])) rep.first_fail_real_rooted = n;
  for (long n = 0; n + 3 <= n_max + 3 && n <= n_max && rep.first_fail_interlacing < 0; ++n)
    if (!interlaces(stripped[static_cast<size_t>(n)], stripped[static_cast<size_t>(n + 3)]))
      rep.first_fail_interlacing = n;
  for (long n = 0; n <= n_max && rep.first_fail_positivity < 0; ++n)
    if (!symmetric_reduction_nonneg(tab.w[static_cast<size_t>(n)], n))
      rep.first_fail_positivity = n;
  return rep;
}

}  // namespace ckb
