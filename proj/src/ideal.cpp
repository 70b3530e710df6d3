#include "ckb/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ckb/diffops.hpp"
#include "ckb/trees.hpp"

namespace ckb {

JetVars::JetVars(int max_order_) : max_order(max_order_) {
  if (max_order < 0) throw std::invalid_argument("JetVars: order >= 0");
}

int JetVars::f(int a, int b) const {
  const int h = a + b;
  if (a < 0 || b < 0 || h > max_order)
    throw std::invalid_argument("JetVars: derivative order out of range");
  // orders 0..h-1 occupy h(h+1)/2 slots; within order h, a runs h..0
  return 2 + h * (h + 1) / 2 + (h - a);
}

std::pair<int, int> JetVars::f_orders(int index) const {
  int rem = index - 2;
  int h = 0;
  while (rem >= h + 1) {
    rem -= h + 1;
    ++h;
  }
  return {h - rem, rem};
}

std::vector<std::string> JetVars::names() const {
  std::vector<std::string> out{"t", "x"};
  for (int h = 0; h <= max_order; ++h)
    for (int a = h; a >= 0; --a) {
      std::string s = "F";
      if (h > 0) s += "_" + std::string(static_cast<size_t>(a), 't') +
                      std::string(static_cast<size_t>(h - a), 'x');
      out.push_back(s);
    }
  return out;
}

MultiPoly total_derivative(const JetVars& vars, const MultiPoly& p, bool wrt_x) {
  const int nv = vars.nvars();
  const int expl = wrt_x ? vars.x() : vars.t();
  MultiPoly r(nv);
  for (const auto& [m, c] : p.terms()) {
    if (m[static_cast<size_t>(expl)] > 0) {
      Mono n = m;
      n[static_cast<size_t>(expl)] -= 1;
      r.add_term(n, c * Rat(m[static_cast<size_t>(expl)]));
    }
    for (int idx = 2; idx < nv; ++idx) {
      const int e = m[static_cast<size_t>(idx)];
      if (e == 0) continue;
      auto [a, b] = vars.f_orders(idx);
      const int up = wrt_x ? vars.f(a, b + 1) : vars.f(a + 1, b);
      Mono n = m;
      n[static_cast<size_t>(idx)] -= 1;
      n[static_cast<size_t>(up)] += 1;
      r.add_term(n, c * Rat(e));
    }
  }
  return r;
}

namespace {

MultiPoly apply_factor(const JetVars& vars, const EulerFactor& f, const MultiPoly& m) {
  MultiPoly r = m.scaled(f.c);
  if (f.a != 0)
    r += (MultiPoly::variable(vars.nvars(), vars.t()) * total_derivative(vars, m, false))
             .scaled(f.a);
  if (f.b != 0)
    r += (MultiPoly::variable(vars.nvars(), vars.x()) * total_derivative(vars, m, true))
             .scaled(f.b);
  return r;
}

MultiPoly apply_operator_symbolic(const JetVars& vars, const OperatorSpec& spec) {
  MultiPoly m = MultiPoly::variable(vars.nvars(), vars.f(0, 0));
  for (auto it = spec.factors.rbegin(); it != spec.factors.rend(); ++it)
    m = apply_factor(vars, *it, m);
  MultiPoly pref = MultiPoly::constant(vars.nvars(), spec.pref_scalar);
  for (int i = 0; i < spec.dt; ++i) pref = pref * MultiPoly::variable(vars.nvars(), vars.t());
  for (int i = 0; i < spec.dx; ++i) pref = pref * MultiPoly::variable(vars.nvars(), vars.x());
  return pref * m;
}

}  // namespace

const MultiPoly& IdealSystem::gen(int a, int b) const {
  for (const auto& [k, g] : gens)
    if (k.first == a && k.second == b) return g;
  throw std::invalid_argument("IdealSystem::gen: no such generator");
}

IdealSystem build_system(int d) {
  if (d < 2) throw std::invalid_argument("build_system: d >= 2");
  JetVars vars(d);
  const int nv = vars.nvars();
  const MultiPoly t = MultiPoly::variable(nv, vars.t());
  const MultiPoly x = MultiPoly::variable(nv, vars.x());
  const MultiPoly F = MultiPoly::variable(nv, vars.f(0, 0));
  const MultiPoly td1 = t.pow(d - 1);
  const MultiPoly inner = t + x * F.pow(d);  // t + x F^d
  MultiPoly P = td1 - td1 * F + x * inner.pow(d);
  MultiPoly K = -td1 + (x * x * inner.pow(d - 1) * F.pow(d - 1)).scaled(Rat(d * d));

  IdealSystem sys{d, vars, P, {}, K, MultiPoly(nv), MultiPoly(nv)};
  // generators P_{t^a x^b}, order 0..d, t-derivatives first within an order
  std::vector<MultiPoly> prev{P};
  sys.gens.emplace_back(DerivKey{0, 0}, P);
  for (int h = 1; h <= d; ++h) {
    std::vector<MultiPoly> cur;
    // within order h: (a, b) = (h, 0), (h-1, 1), ..., (0, h);
    // P_{a,b} = d/dt of prev[(a-1,b)] for a >= 1, else d/dx of prev[(0,b-1)]
    for (int a = h; a >= 0; --a) {
      const int b = h - a;
      MultiPoly g = (a >= 1) ? total_derivative(vars, prev[static_cast<size_t>(h - a)], false)
                             : total_derivative(vars, prev.back(), true);
      cur.push_back(g);
      sys.gens.emplace_back(DerivKey{a, b}, std::move(g));
    }
    prev = std::move(cur);
  }
  sys.Q = apply_operator_symbolic(vars, operator_spec({OpTag::DL, d})) -
          apply_operator_symbolic(vars, operator_spec({OpTag::DR, d}));
  sys.Qt = apply_operator_symbolic(vars, operator_spec({OpTag::DLt, d})) -
           apply_operator_symbolic(vars, operator_spec({OpTag::DRt, d}));
  return sys;
}

Elimination eliminate(const IdealSystem& sys, bool tilde) {
  const JetVars& vars = sys.vars;
  const int nv = vars.nvars();
  const MultiPoly& K = sys.K;
  Elimination out;
  MultiPoly cur = tilde ? sys.Qt : sys.Q;
  std::map<DerivKey, MultiPoly> cof;

  for (int h = sys.d; h >= 1; --h) {
    const int dh = sys.d / h;
    out.N += dh;
    std::vector<int> hv;
    for (int a = h; a >= 0; --a) hv.push_back(vars.f(a, h - a));
    auto parts = cur.split_by_degree(hv);
    if (static_cast<int>(parts.size()) - 1 > dh)
      throw std::logic_error("eliminate: degree in order-h variables exceeds floor(d/h)");
    std::vector<MultiPoly> Kp{MultiPoly::constant(nv, Rat(1))};
    for (int i = 0; i < dh; ++i) Kp.push_back(Kp.back() * K);

    MultiPoly next(nv);
    std::map<DerivKey, MultiPoly> ncof;
    for (size_t jdeg = 0; jdeg < parts.size(); ++jdeg) {
      const MultiPoly& part = parts[jdeg];
      const MultiPoly& Kpad = Kp[static_cast<size_t>(dh) - jdeg];
      for (const auto& [mono, c] : part.terms()) {
        Mono base = mono;
        std::vector<int> fvars;  // order-h variable indices with multiplicity
        for (int idx : hv) {
          for (int e = 0; e < mono[static_cast<size_t>(idx)]; ++e) fvars.push_back(idx);
          base[static_cast<size_t>(idx)] = 0;
        }
        MultiPoly pre(nv);
        pre.add_term(base, c);
        // suffix products of K*F_v over the factors to the right
        std::vector<MultiPoly> suffix(fvars.size() + 1, MultiPoly::constant(nv, Rat(1)));
        for (size_t i = fvars.size(); i-- > 0;)
          suffix[i] = MultiPoly::variable(nv, fvars[i]) * K * suffix[i + 1];
        for (size_t i = 0; i < fvars.size(); ++i) {
          auto [a, b] = vars.f_orders(fvars[i]);
          MultiPoly contrib = Kpad * pre * suffix[i + 1];
          auto [it, inserted] = ncof.emplace(DerivKey{a, b}, contrib);
          if (!inserted) it->second += contrib;
          pre = pre * (MultiPoly::variable(nv, fvars[i]) * K - sys.gen(a, b));
        }
        next += Kpad * pre;
      }
    }
    const MultiPoly& Kdh = Kp[static_cast<size_t>(dh)];
    for (auto& [key, c0] : cof) c0 = Kdh * c0;
    for (auto& [key, cn] : ncof) {
      auto [it, inserted] = cof.emplace(key, cn);
      if (!inserted) it->second += cn;
    }
    cur = std::move(next);
  }
  // no derivative variable of order >= 1 may remain
  for (const auto& [m, c] : cur.terms())
    for (int idx = 3; idx < nv; ++idx)
      if (m[static_cast<size_t>(idx)] != 0)
        throw std::logic_error("eliminate: derivative variable left in Q0");
  out.Q0 = std::move(cur);
  for (auto& [key, c0] : cof) out.cofactors.emplace_back(key, std::move(c0));
  return out;
}

bool divisibility_check(const MultiPoly& q0, const MultiPoly& p, const JetVars& vars,
                        MultiPoly* quotient) {
  const int nv = vars.nvars();
  const int iF = vars.f(0, 0), ix = vars.x();
  const int dP = p.degree_in(iF);
  auto deg_f = [&](const MultiPoly& r) { return r.degree_in(iF); };
  MultiPoly rem = q0, quo(nv);
  long xshift = 0;
  while (!rem.is_zero() && deg_f(rem) >= dP) {
    const int dr = deg_f(rem);
    // multiply remainder and quotient by the leading coefficient x^{d+1}
    MultiPoly xlead = MultiPoly::variable(nv, ix).pow(vars.max_order + 1);
    rem = rem * xlead;
    quo = quo * xlead;
    xshift += vars.max_order + 1;
    MultiPoly co(nv);
    for (const auto& [m, c] : rem.terms())
      if (m[static_cast<size_t>(iF)] == dr) {
        Mono n = m;
        n[static_cast<size_t>(iF)] = dr - dP;
        n[static_cast<size_t>(ix)] -= vars.max_order + 1;  // divide by lc = x^{d+1}
        if (n[static_cast<size_t>(ix)] < 0) throw std::logic_error("divisibility: x underflow");
        co.add_term(n, c);
      }
    quo += co;
    rem -= co * p;
  }
  if (!rem.is_zero()) return false;
  // strip the accumulated x power off the quotient; it must divide exactly
  MultiPoly q(nv);
  for (const auto& [m, c] : quo.terms()) {
    Mono n = m;
    n[static_cast<size_t>(ix)] -= static_cast<int32_t>(xshift);
    if (n[static_cast<size_t>(ix)] < 0) return false;
    q.add_term(n, c);
  }
  if (q * p != q0) return false;
  if (quotient) *quotient = q;
  return true;
}

bool witness_is_exact(const IdealSystem& sys, const Elimination& e, bool tilde) {
  MultiPoly total = tilde ? sys.Qt : sys.Q;
  for (int i = 0; i < e.N; ++i) total = total * sys.K;
  total -= e.Q0;
  for (const auto& [key, c] : e.cofactors) total -= c * sys.gen(key.first, key.second);
  return total.is_zero();
}

CertificateReport ideal_certificate(int d, bool check_witness, int d_guard) {
  if (d < 2) throw std::invalid_argument("ideal_certificate: d >= 2");
  if (d > d_guard)
    throw GuardExceeded("ideal_certificate: d = " + std::to_string(d) +
                        " exceeds guard " + std::to_string(d_guard) +
                        " (use the long-run flag)");
  const auto start = std::chrono::steady_clock::now();
  CertificateReport rep;
  rep.d = d;
  rep.witness_checked = check_witness;
  IdealSystem sys = build_system(d);
  Elimination eq = eliminate(sys, false);
  Elimination eqt = eliminate(sys, true);
  rep.N = eq.N;
  rep.q0_terms = eq.Q0.term_count();
  rep.qt0_terms = eqt.Q0.term_count();
  rep.divisible_q = divisibility_check(eq.Q0, sys.P, sys.vars);
  rep.divisible_qt = divisibility_check(eqt.Q0, sys.P, sys.vars);
  if (check_witness) {
    rep.witness_q = witness_is_exact(sys, eq, false);
    rep.witness_qt = witness_is_exact(sys, eqt, true);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CertificateData certificate_data(int d) {
  CertificateData data{build_system(d), {}, {}, MultiPoly(), MultiPoly()};
  data.q = eliminate(data.sys, false);
  data.qt = eliminate(data.sys, true);
  if (!divisibility_check(data.q.Q0, data.sys.P, data.sys.vars, &data.quotient_q) ||
      !divisibility_check(data.qt.Q0, data.sys.P, data.sys.vars, &data.quotient_qt))
    throw std::logic_error("certificate_data: P does not divide Q0");
  return data;
}

}  // namespace ckb
