#include "ckb/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ckb {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Mono(static_cast<size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  Mono m(static_cast<size_t>(nvars), 0);
  m[static_cast<size_t>(index)] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Rat MultiPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("MultiPoly: monomial arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check(o);
  MultiPoly r(nvars_);
  Mono m(static_cast<size_t>(nvars_), 0);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, inserted] = r.terms_.emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
  MultiPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(nvars_, Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<size_t>(var)]));
  return terms_.empty() ? -1 : d;
}

int MultiPoly::degree_in(const std::vector<int>& vars) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int v : vars) s += m[static_cast<size_t>(v)];
    d = std::max(d, s);
  }
  return d;
}

std::vector<MultiPoly> MultiPoly::split_by_degree(const std::vector<int>& vars) const {
  int dmax = std::max(0, degree_in(vars));
  std::vector<MultiPoly> parts(static_cast<size_t>(dmax) + 1, MultiPoly(nvars_));
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int v : vars) s += m[static_cast<size_t>(v)];
    parts[static_cast<size_t>(s)].terms_.emplace(m, c);
  }
  return parts;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<size_t>(var)];
    if (e == 0) continue;
    Mono n = m;
    n[static_cast<size_t>(var)] = e - 1;
    r.add_term(n, c * Rat(e));
  }
  return r;
}

MultiPoly MultiPoly::substituted(int var, const MultiPoly& value) const {
  check(value);
  // Group by exponent of var, then Horner over the grouped parts.
  int dmax = degree_in(var);
  if (dmax <= 0) return *this;
  std::vector<MultiPoly> by_exp(static_cast<size_t>(dmax) + 1, MultiPoly(nvars_));
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int e = n[static_cast<size_t>(var)];
    n[static_cast<size_t>(var)] = 0;
    by_exp[static_cast<size_t>(e)].add_term(n, c);
  }
  MultiPoly acc = by_exp[static_cast<size_t>(dmax)];
  for (int e = dmax - 1; e >= 0; --e) acc = acc * value + by_exp[static_cast<size_t>(e)];
  return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Display highest grlex terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.get_str();
    if (!first) {
      if (cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool any_var = false;
    std::ostringstream vs;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (any_var) vs << "*";
      any_var = true;
      vs << names.at(i);
      if (m[i] != 1) vs << "^" << m[i];
    }
    if (!any_var) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << vs.str();
    }
  }
  return os.str();
}

}  // namespace ckb
