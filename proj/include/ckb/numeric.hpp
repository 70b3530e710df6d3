#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ckb {

// Exact arbitrary-precision integers and rationals. Everything in this
// library is exact; there is no floating point outside of report text.
using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);
Int factorial(long n);

// Quotient a/b, throwing std::logic_error when b does not divide a.
// Closed-formula summands use this: a non-exact division is a bug, not data.
Int exact_div(const Int& a, const Int& b);

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Integer value of a rational known to be integral.
Int rat_to_int(const Rat& r);

std::string int_to_string(const Int& v);
Int parse_int(const std::string& s);

}  // namespace ckb
