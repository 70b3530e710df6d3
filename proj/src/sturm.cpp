#include "ckb/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckb {

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int qpoly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat qpoly_eval(const QPoly& p, const Rat& x) {
  Rat v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

QPoly qpoly_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  return qpoly_trim(std::move(d));
}

QPoly qpoly_rem(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::invalid_argument("qpoly_rem: division by zero poly");
  QPoly r = a;
  const int db = qpoly_degree(b);
  while (qpoly_degree(r) >= db) {
    Rat q = r.back() / b.back();
    const int shift = qpoly_degree(r) - db;
    for (int i = 0; i <= db; ++i)
      r[static_cast<size_t>(i + shift)] -= q * b[static_cast<size_t>(i)];
    r = qpoly_trim(std::move(r));
  }
  return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_trim(std::move(a));
  b = qpoly_trim(std::move(b));
  while (!b.empty()) {
    QPoly r = qpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

QPoly qpoly_squarefree(const QPoly& p) {
  QPoly g = qpoly_gcd(p, qpoly_derivative(p));
  if (qpoly_degree(g) <= 0) return qpoly_trim(p);
  // exact division p / g
  QPoly r = qpoly_trim(p), q(p.size(), Rat(0));
  const int dg = qpoly_degree(g);
  while (qpoly_degree(r) >= dg) {
    Rat c = r.back() / g.back();
    int shift = qpoly_degree(r) - dg;
    q[static_cast<size_t>(shift)] = c;
    for (int i = 0; i <= dg; ++i)
      r[static_cast<size_t>(i + shift)] -= c * g[static_cast<size_t>(i)];
    r = qpoly_trim(std::move(r));
  }
  if (!r.empty()) throw std::logic_error("qpoly_squarefree: non-exact division");
  return qpoly_trim(std::move(q));
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(qpoly_trim(p));
  if (chain[0].empty()) return chain;
  chain.push_back(qpoly_derivative(chain[0]));
  while (!chain.back().empty() && qpoly_degree(chain.back()) > 0) {
    QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {
int sign_of(const Rat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(qpoly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_inf(const std::vector<QPoly>& chain, int dir) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sign_of(p.back());
    if (dir < 0 && (qpoly_degree(p) % 2 == 1)) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
}  // namespace

int sturm_count(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const std::vector<QPoly>& chain) {
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

Rat root_bound(const QPoly& p) {
  if (qpoly_degree(p) < 1) return Rat(1);
  Rat m(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat a = abs(p[i] / p.back());
    if (a > m) m = a;
  }
  return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  QPoly q = qpoly_trim(p);
  if (qpoly_degree(q) < 1) return out;
  auto chain = sturm_chain(q);
  Rat b = root_bound(q);
  // roots lie in (-b, b]; b itself cannot be a root (strict Cauchy bound)
  std::vector<std::pair<Rat, Rat>> work{{-b, b}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int cnt = sturm_count(chain, lo, hi);
    if (cnt == 0) continue;
    if (cnt == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rat mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b2) { return a.first < b2.first; });
  return out;
}

void refine_root(const std::vector<QPoly>& chain, Rat& a, Rat& b) {
  Rat mid = (a + b) / 2;
  if (sturm_count(chain, a, mid) == 1)
    b = mid;
  else
    a = mid;
}

}  // namespace ckb
