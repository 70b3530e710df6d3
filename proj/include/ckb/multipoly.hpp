#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ckb/numeric.hpp"

namespace ckb {

// Monomial exponent vector over a fixed variable list.
using Mono = std::vector<int32_t>;

// Graded lexicographic: total degree first, then lexicographic on the
// exponent vector in the fixed variable order.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Exact-rational sparse multivariate polynomial with nonnegative exponents.
// The variable list is external (see ideal.hpp for the jet variables
// t, x, F, F_t, F_x, F_tt, F_tx, F_xx, ...); operands must agree on the
// number of variables.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat, GrlexLess>& terms() const { return terms_; }

  Rat coeff(const Mono& m) const;
  void add_term(const Mono& m, const Rat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const Rat& s) const;
  MultiPoly pow(int e) const;

  // Degree in one variable / in a set of variables.
  int degree_in(int var) const;
  int degree_in(const std::vector<int>& vars) const;

  // Split into homogeneous parts by joint degree in the given variables;
  // result[k] collects the degree-k part (size = max degree + 1).
  std::vector<MultiPoly> split_by_degree(const std::vector<int>& vars) const;

  // Partial derivative with respect to one variable (no chain rule).
  MultiPoly derivative(int var) const;

  // Substitute variable -> polynomial (exponents must stay small).
  MultiPoly substituted(int var, const MultiPoly& value) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check(const MultiPoly& o) const;

  int nvars_;
  std::map<Mono, Rat, GrlexLess> terms_;
};

}  // namespace ckb
