#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ckb/freeword.hpp"
#include "ckb/laurent.hpp"

namespace ckb {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap on the number of trees a brute-force enumeration may visit.
inline const Int& default_enum_guard() {
  static const Int g(50000000);
  return g;
}

// Rooted plane tree in which every internal node has exactly d ordered
// children, stored as the preorder type word (1 = internal, 0 = leaf,
// length d*n + 1). A d-dissection of a marked polygon corresponds to one
// such tree: the marked edge maps to the root, leaves are the unmarked
// boundary edges in counterclockwise order after the marked edge.
struct DissectionTree {
  int d = 2;
  long n = 0;                  // internal nodes; leaves = (d-1)n + 1
  std::vector<uint8_t> pre;    // preorder types

  bool operator==(const DissectionTree&) const = default;
};

// Black = even depth (contains the marked polygon at depth 0), white = odd.
// e_b/e_w are boundary-edge colour counts, defined for d = 2 only (set to -1
// otherwise). The degenerate n = 0 tree has one black marked edge and one
// white unmarked edge.
struct ColourStats {
  long n_b = 0;
  long n_w = 0;
  long e_b = -1;
  long e_w = -1;
};

ColourStats colour_stats(const DissectionTree& tree);

// Canonical balanced-parenthesis encoding: leaf -> "", internal ->
// "(" c1 ")" "(" c2 ")" ... "(" c_{d-1} ")" c_d. Exactly (d-1)n pairs;
// at d = 2 this is the classical Dyck-word bijection.
std::string paren_encoding(const DissectionTree& tree);
DissectionTree parse_paren(int d, std::string_view code);

// Visits every plane d-ary tree with n internal nodes exactly once, in
// lexicographic order of paren_encoding. Throws GuardExceeded when
// t_{d,n} > guard, std::invalid_argument on d < 2 or n < 0.
void for_each_tree(int d, long n, const std::function<void(const DissectionTree&)>& visit,
                   const Int& guard = default_enum_guard());

std::vector<DissectionTree> enum_trees(int d, long n,
                                       const Int& guard = default_enum_guard());

// Tree at a given position of the enumeration order; index < t_{d,n}.
DissectionTree tree_by_index(int d, long n, const Int& index,
                             const Int& guard = default_enum_guard());

// Weight polynomial by brute force: sum of t^{n_b - n_w} over all trees.
LaurentPoly w_enum(int d, long n, const Int& guard = default_enum_guard());

// Boundary colour word (d = 2 only): length n+2, letter 0 is 'U' for the
// marked edge, letter i >= 1 the colour of the parent triangle of the i-th
// leaf in planar order ('U' black, 'V' white). n = 0 gives "UV".
std::string boundary_word(const DissectionTree& tree);

// Sum of boundary words over all triangulations with n + 2 <= L.
FreeWordSeries noncomm_N(int L);

// Dissections into (d+1)n + 1 polygons whose boundary is all black
// (equivalently every leaf hangs from an even-depth internal node).
Int eulerian_count_enum(int d, long n, const Int& guard = default_enum_guard());

// Dissections into 2n polygons with n_b = n_w = n.
Int fair_count_enum(int d, long n, const Int& guard = default_enum_guard());

// Brute-force count of 2n-step lattice paths with steps (+-1,0),(0,+-1)
// from the origin, ending on x = y, staying in -x <= y <= x.
Int lattice_path_count(int n, int guard_n = 8);

}  // namespace ckb
