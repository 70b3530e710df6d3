#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckb/numeric.hpp"

namespace ckb {

// Laurent polynomial in t with exact coefficients (Int or Rat).
//
// Logically a finitely supported map exponent -> coefficient; stored densely
// over the span [min_exp, max_exp] with the ends always trimmed to nonzero
// coefficients, so equality is structural and zero is the empty span.
// Interior zeros (parity gaps) are skipped by the term iteration.
template <class C>
class LaurentPolyT {
 public:
  LaurentPolyT() = default;

  static LaurentPolyT monomial(long j, C c) {
    LaurentPolyT p;
    if (c != 0) {
      p.min_ = j;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }
  static LaurentPolyT constant(C c) { return monomial(0, std::move(c)); }
  static LaurentPolyT one() { return constant(C(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const { return min_; }
  long max_exp() const { return min_ + static_cast<long>(coeffs_.size()) - 1; }

  C coeff(long j) const {
    if (coeffs_.empty() || j < min_ || j > max_exp()) return C(0);
    return coeffs_[static_cast<size_t>(j - min_)];
  }

  // Number of nonzero terms.
  size_t term_count() const {
    size_t k = 0;
    for (const auto& c : coeffs_)
      if (c != 0) ++k;
    return k;
  }

  template <class F>
  void for_each_term(F&& f) const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) f(min_ + static_cast<long>(i), coeffs_[i]);
  }

  std::vector<std::pair<long, C>> terms() const {
    std::vector<std::pair<long, C>> out;
    for_each_term([&](long j, const C& c) { out.emplace_back(j, c); });
    return out;
  }

  void set_coeff(long j, C c) {
    if (c == 0) {
      if (!coeffs_.empty() && j >= min_ && j <= max_exp())
        coeffs_[static_cast<size_t>(j - min_)] = C(0);
      trim();
      return;
    }
    reserve_span(j, j);
    coeffs_[static_cast<size_t>(j - min_)] = std::move(c);
  }

  void add_term(long j, const C& c) {
    if (c == 0) return;
    reserve_span(j, j);
    coeffs_[static_cast<size_t>(j - min_)] += c;
    trim();
  }

  friend LaurentPolyT operator+(const LaurentPolyT& a, const LaurentPolyT& b) {
    LaurentPolyT r = a;
    r += b;
    return r;
  }
  LaurentPolyT& operator+=(const LaurentPolyT& b) {
    if (b.is_zero()) return *this;
    reserve_span(b.min_, b.max_exp());
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
      coeffs_[static_cast<size_t>(b.min_ - min_) + i] += b.coeffs_[i];
    trim();
    return *this;
  }
  friend LaurentPolyT operator-(const LaurentPolyT& a, const LaurentPolyT& b) {
    LaurentPolyT r = a;
    r -= b;
    return r;
  }
  LaurentPolyT& operator-=(const LaurentPolyT& b) {
    if (b.is_zero()) return *this;
    reserve_span(b.min_, b.max_exp());
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
      coeffs_[static_cast<size_t>(b.min_ - min_) + i] -= b.coeffs_[i];
    trim();
    return *this;
  }
  LaurentPolyT operator-() const {
    LaurentPolyT r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  // Exact convolution product; support within [min_a+min_b, max_a+max_b].
  friend LaurentPolyT operator*(const LaurentPolyT& a, const LaurentPolyT& b) {
    LaurentPolyT r;
    if (a.is_zero() || b.is_zero()) return r;
    r.min_ = a.min_ + b.min_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    accumulate_product(r, a, b);
    r.trim();
    return r;
  }

  // *this += a*b without building a temporary product.
  void add_mul(const LaurentPolyT& a, const LaurentPolyT& b) {
    if (a.is_zero() || b.is_zero()) return;
    reserve_span(a.min_ + b.min_, a.max_exp() + b.max_exp());
    accumulate_product(*this, a, b);
    trim();
  }

  LaurentPolyT& operator*=(const C& s) {
    if (s == 0) {
      clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend LaurentPolyT operator*(const LaurentPolyT& a, const C& s) {
    LaurentPolyT r = a;
    r *= s;
    return r;
  }

  // t |-> t^{-1}: coefficient of t^j becomes coefficient of t^{-j}.
  LaurentPolyT bar() const {
    LaurentPolyT r;
    if (is_zero()) return r;
    r.min_ = -max_exp();
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return r;
  }

  // Multiply by t^k.
  LaurentPolyT shifted(long k) const {
    LaurentPolyT r = *this;
    r.min_ += k;
    return r;
  }

  // d/dt, then times t: j * coeff stays at exponent j.
  LaurentPolyT euler_t() const {
    LaurentPolyT r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] *= C(r.min_ + static_cast<long>(i));
    r.trim();
    return r;
  }

  C eval_one() const {
    C s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  // Sum of j * coeff_j, i.e. d/dt evaluated at t = 1.
  C derivative_at_one() const {
    C s(0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
      s += coeffs_[i] * C(min_ + static_cast<long>(i));
    return s;
  }

  friend bool operator==(const LaurentPolyT& a, const LaurentPolyT& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.coeffs_.empty()) return true;
    return a.min_ == b.min_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPolyT& a, const LaurentPolyT& b) {
    return !(a == b);
  }

  void clear() {
    coeffs_.clear();
    min_ = 0;
  }

  // Canonical text form: sorted "j:coefficient" pairs, decimal coefficients.
  std::string to_text() const {
    std::ostringstream os;
    bool first = true;
    for_each_term([&](long j, const C& c) {
      if (!first) os << " ";
      first = false;
      os << j << ":" << coeff_str(c);
    });
    if (first) os << "0";
    return os.str();
  }

  // Human form, e.g. "12 + 2*t^2" or "t^-1 + 4*t".
  std::string to_human() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each_term([&](long j, const C& c) {
      std::string cs = coeff_str(c);
      if (!first) {
        if (!cs.empty() && cs[0] == '-') {
          os << " - ";
          cs = cs.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      if (j == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << "t";
        if (j != 1) os << "^" << j;
      }
    });
    return os.str();
  }

 private:
  static std::string coeff_str(const Int& c) { return c.get_str(); }
  static std::string coeff_str(const Rat& c) { return c.get_str(); }

  static void accumulate_product(LaurentPolyT& acc, const LaurentPolyT& a,
                                 const LaurentPolyT& b) {
    const long off = a.min_ + b.min_ - acc.min_;
    for (size_t ia = 0; ia < a.coeffs_.size(); ++ia) {
      if (a.coeffs_[ia] == 0) continue;
      for (size_t ib = 0; ib < b.coeffs_.size(); ++ib) {
        if (b.coeffs_[ib] == 0) continue;
        add_mul_coeff(acc.coeffs_[static_cast<size_t>(off) + ia + ib],
                      a.coeffs_[ia], b.coeffs_[ib]);
      }
    }
  }

  static void add_mul_coeff(Int& acc, const Int& a, const Int& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static void add_mul_coeff(Rat& acc, const Rat& a, const Rat& b) {
    acc += a * b;
  }

  void reserve_span(long lo, long hi) {
    if (coeffs_.empty()) {
      min_ = lo;
      coeffs_.assign(static_cast<size_t>(hi - lo + 1), C(0));
      return;
    }
    if (lo < min_) {
      std::vector<C> grown(static_cast<size_t>(min_ - lo), C(0));
      grown.insert(grown.end(), std::make_move_iterator(coeffs_.begin()),
                   std::make_move_iterator(coeffs_.end()));
      coeffs_ = std::move(grown);
      min_ = lo;
    }
    if (hi > max_exp()) coeffs_.resize(static_cast<size_t>(hi - min_ + 1), C(0));
  }

  void trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      clear();
      return;
    }
    size_t tail = coeffs_.size();
    while (tail > 0 && coeffs_[tail - 1] == 0) --tail;
    if (lead > 0)
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    coeffs_.resize(tail - lead);
    min_ += static_cast<long>(lead);
  }

  long min_ = 0;
  std::vector<C> coeffs_;
};

using LaurentPoly = LaurentPolyT<Int>;
using LaurentPolyQ = LaurentPolyT<Rat>;

inline LaurentPolyQ to_rational(const LaurentPoly& p) {
  LaurentPolyQ q;
  p.for_each_term([&](long j, const Int& c) { q.set_coeff(j, Rat(c)); });
  return q;
}

// Inverse of to_rational; throws std::logic_error on non-integral coefficient.
inline LaurentPoly to_integral(const LaurentPolyQ& p) {
  LaurentPoly z;
  p.for_each_term([&](long j, const Rat& c) { z.set_coeff(j, rat_to_int(c)); });
  return z;
}

}  // namespace ckb
