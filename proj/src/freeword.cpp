#include "ckb/freeword.hpp"

#include <sstream>
#include <stdexcept>

namespace ckb {

FreeWordSeries::FreeWordSeries(int max_len) : max_len_(max_len) {
  if (max_len < 0) throw std::invalid_argument("FreeWordSeries: negative length cap");
}

Int FreeWordSeries::coeff(const std::string& word) const {
  auto it = coeffs_.find(word);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void FreeWordSeries::add_term(const std::string& word, const Int& c) {
  if (static_cast<int>(word.size()) > max_len_ || c == 0) return;
  for (char ch : word)
    if (ch != 'U' && ch != 'V')
      throw std::invalid_argument("FreeWordSeries: alphabet is {U,V}");
  Int& slot = coeffs_[word];
  slot += c;
  if (slot == 0) coeffs_.erase(word);
}

void FreeWordSeries::check_len(const FreeWordSeries& o) const {
  if (max_len_ != o.max_len_)
    throw std::invalid_argument("FreeWordSeries: length cap mismatch");
}

FreeWordSeries FreeWordSeries::operator+(const FreeWordSeries& o) const {
  check_len(o);
  FreeWordSeries r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, c);
  return r;
}

FreeWordSeries FreeWordSeries::operator-(const FreeWordSeries& o) const {
  check_len(o);
  FreeWordSeries r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, -c);
  return r;
}

FreeWordSeries FreeWordSeries::operator*(const FreeWordSeries& o) const {
  check_len(o);
  FreeWordSeries r(max_len_);
  for (const auto& [wa, ca] : coeffs_) {
    const int la = static_cast<int>(wa.size());
    for (const auto& [wb, cb] : o.coeffs_) {
      if (la + static_cast<int>(wb.size()) > max_len_) continue;
      r.add_term(wa + wb, ca * cb);
    }
  }
  return r;
}

bool FreeWordSeries::operator==(const FreeWordSeries& o) const {
  return max_len_ == o.max_len_ && coeffs_ == o.coeffs_;
}

FreeWordSeries FreeWordSeries::bar() const {
  FreeWordSeries r(max_len_);
  for (const auto& [w, c] : coeffs_) {
    std::string t = w;
    for (char& ch : t) ch = (ch == 'U') ? 'V' : 'U';
    r.add_term(t, c);
  }
  return r;
}

FreeWordSeries FreeWordSeries::left_quotient(char letter) const {
  FreeWordSeries r(max_len_);
  for (const auto& [w, c] : coeffs_) {
    if (w.empty() || w[0] != letter)
      throw std::invalid_argument(
          "left_quotient: supported word '" + w + "' does not start with '" +
          std::string(1, letter) + "'");
    r.add_term(w.substr(1), c);
  }
  return r;
}

std::string FreeWordSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << (w.empty() ? "1" : w);
  }
  return os.str();
}

}  // namespace ckb
