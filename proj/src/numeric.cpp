#include "ckb/numeric.hpp"

namespace ckb {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::logic_error("exact_div by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::logic_error("exact_div: " + a.get_str() + " not divisible by " +
                           b.get_str());
  return q;
}

Int rat_to_int(const Rat& r) {
  if (!is_integer(r))
    throw std::logic_error("rat_to_int: value is not integral: " + r.get_str());
  return r.get_num();
}

std::string int_to_string(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& s) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_int: bad integer literal '" + s + "'");
  return v;
}

}  // namespace ckb
