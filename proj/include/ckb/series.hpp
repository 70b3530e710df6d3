#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ckb/laurent.hpp"

namespace ckb {

// Truncated power series in x with LaurentPolyT<C> coefficients: the algebra
// of Laurent-polynomials-in-t power series, cut at x^order.
//
// The truncation order is an explicit field checked on every binary
// operation, never inferred.
template <class C>
class SeriesXT {
 public:
  using Coeff = LaurentPolyT<C>;

  explicit SeriesXT(int order) : terms_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("SeriesXT: negative order");
  }

  static SeriesXT one(int order) {
    SeriesXT s(order);
    s.terms_[0] = Coeff::one();
    return s;
  }

  int order() const { return static_cast<int>(terms_.size()) - 1; }

  const Coeff& operator[](int m) const { return terms_.at(static_cast<size_t>(m)); }
  Coeff& operator[](int m) { return terms_.at(static_cast<size_t>(m)); }

  bool is_zero() const {
    for (const auto& t : terms_)
      if (!t.is_zero()) return false;
    return true;
  }

  // Leading zero orders count, order()+1 when the series is zero.
  int valuation() const {
    for (int m = 0; m <= order(); ++m)
      if (!terms_[static_cast<size_t>(m)].is_zero()) return m;
    return order() + 1;
  }

  friend SeriesXT operator+(const SeriesXT& a, const SeriesXT& b) {
    check_orders(a, b);
    SeriesXT r = a;
    for (int m = 0; m <= r.order(); ++m) r[m] += b[m];
    return r;
  }
  friend SeriesXT operator-(const SeriesXT& a, const SeriesXT& b) {
    check_orders(a, b);
    SeriesXT r = a;
    for (int m = 0; m <= r.order(); ++m) r[m] -= b[m];
    return r;
  }

  // Truncated Cauchy product to the common order.
  friend SeriesXT operator*(const SeriesXT& a, const SeriesXT& b) {
    check_orders(a, b);
    SeriesXT r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (b[j].is_zero()) continue;
        r[i + j].add_mul(a[i], b[j]);
      }
    }
    return r;
  }

  SeriesXT pow(int e) const {
    SeriesXT r = one(order());
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Multiply by the monomial c * t^jt * x^k (k >= 0; top orders fall off).
  SeriesXT mul_monomial(long jt, int k, const C& c) const {
    SeriesXT r(order());
    for (int m = 0; m + k <= order(); ++m)
      r[m + k] = terms_[static_cast<size_t>(m)].shifted(jt) * c;
    return r;
  }

  SeriesXT scale_poly(const Coeff& p) const {
    SeriesXT r(order());
    for (int m = 0; m <= order(); ++m) r[m].add_mul(terms_[static_cast<size_t>(m)], p);
    return r;
  }

  // x * d/dx: coefficient of x^m scaled by m.
  SeriesXT euler_x() const {
    SeriesXT r = *this;
    for (int m = 0; m <= order(); ++m) r[m] *= C(m);
    return r;
  }

  // t * d/dt applied coefficient-wise.
  SeriesXT euler_t() const {
    SeriesXT r(order());
    for (int m = 0; m <= order(); ++m) r[m] = terms_[static_cast<size_t>(m)].euler_t();
    return r;
  }

  SeriesXT truncated(int new_order) const {
    SeriesXT r(new_order);
    for (int m = 0; m <= new_order && m <= order(); ++m) r[m] = (*this)[m];
    return r;
  }

  friend bool operator==(const SeriesXT& a, const SeriesXT& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SeriesXT& a, const SeriesXT& b) { return !(a == b); }

  bool equal_through(const SeriesXT& b, int upto) const {
    for (int m = 0; m <= upto; ++m)
      if ((*this)[m] != b[m]) return false;
    return true;
  }

  bool zero_through(int upto) const {
    for (int m = 0; m <= upto && m <= order(); ++m)
      if (!terms_[static_cast<size_t>(m)].is_zero()) return false;
    return true;
  }

 private:
  static void check_orders(const SeriesXT& a, const SeriesXT& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("SeriesXT: truncation order mismatch (" +
                                  std::to_string(a.order()) + " vs " +
                                  std::to_string(b.order()) + ")");
  }

  std::vector<Coeff> terms_;
};

using SeriesX = SeriesXT<Int>;
using SeriesXQ = SeriesXT<Rat>;

inline SeriesXQ to_rational(const SeriesX& s) {
  SeriesXQ q(s.order());
  for (int m = 0; m <= s.order(); ++m) q[m] = to_rational(s[m]);
  return q;
}

inline SeriesX to_integral(const SeriesXQ& s) {
  SeriesX z(s.order());
  for (int m = 0; m <= s.order(); ++m) z[m] = to_integral(s[m]);
  return z;
}

}  // namespace ckb
