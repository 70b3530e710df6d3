#pragma once

#include <utility>
#include <vector>

#include "ckb/numeric.hpp"

namespace ckb {

// Dense univariate polynomial over Rat, coefficient of x^i at index i,
// leading coefficient nonzero (zero polynomial = empty vector).
using QPoly = std::vector<Rat>;

QPoly qpoly_trim(QPoly p);
int qpoly_degree(const QPoly& p);           // -1 for zero
Rat qpoly_eval(const QPoly& p, const Rat& x);
QPoly qpoly_derivative(const QPoly& p);
// Remainder of a by b (b nonzero).
QPoly qpoly_rem(const QPoly& a, const QPoly& b);
// Monic gcd.
QPoly qpoly_gcd(QPoly a, QPoly b);
// p / gcd(p, p'); same root set, all roots simple.
QPoly qpoly_squarefree(const QPoly& p);

// Sturm chain p, p', -rem(...), ...
std::vector<QPoly> sturm_chain(const QPoly& p);

// Number of distinct real roots in (a, b], exact.
int sturm_count(const std::vector<QPoly>& chain, const Rat& a, const Rat& b);
// Over all of R.
int sturm_count_all(const std::vector<QPoly>& chain);

// Cauchy bound: all real roots lie in [-B, B].
Rat root_bound(const QPoly& p);

// Isolating intervals (a, b] for every distinct real root of a squarefree
// polynomial, sorted; each interval holds exactly one root.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p);

// Shrink an isolating interval of p until it no longer straddles any
// endpoint of the other list; used for exact interleaving comparison.
void refine_root(const std::vector<QPoly>& chain, Rat& a, Rat& b);

}  // namespace ckb
