#pragma once

#include <map>
#include <string>

#include "ckb/numeric.hpp"

namespace ckb {

// Length-truncated series over the free monoid on {U, V} with Int
// coefficients. Words longer than max_len are discarded by every operation;
// no zero coefficients are stored.
class FreeWordSeries {
 public:
  explicit FreeWordSeries(int max_len);

  int max_len() const { return max_len_; }
  const std::map<std::string, Int>& coeffs() const { return coeffs_; }

  Int coeff(const std::string& word) const;
  void add_term(const std::string& word, const Int& c);

  bool is_zero() const { return coeffs_.empty(); }
  size_t term_count() const { return coeffs_.size(); }

  FreeWordSeries operator+(const FreeWordSeries& o) const;
  FreeWordSeries operator-(const FreeWordSeries& o) const;
  // Concatenation (Cauchy) product.
  FreeWordSeries operator*(const FreeWordSeries& o) const;
  bool operator==(const FreeWordSeries& o) const;

  // Transpose U <-> V in every word.
  FreeWordSeries bar() const;

  // Strip the given leading letter from every word. Throws
  // std::invalid_argument if some supported word does not start with it.
  FreeWordSeries left_quotient(char letter) const;

  std::string to_string() const;

 private:
  void check_len(const FreeWordSeries& o) const;

  int max_len_;
  std::map<std::string, Int> coeffs_;
};

}  // namespace ckb
