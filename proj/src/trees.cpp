#include "ckb/trees.hpp"

#include <cstdlib>
#include <stdexcept>

#include "ckb/genfun.hpp"

namespace ckb {

namespace {

void check_dn(int d, long n) {
  if (d < 2) throw std::invalid_argument("tree enumeration: d must be >= 2");
  if (n < 0) throw std::invalid_argument("tree enumeration: n must be >= 0");
}

void check_guard(int d, long n, const Int& guard, const char* what) {
  Int total = t_dn(d, n);
  if (total > guard)
    throw GuardExceeded(std::string(what) + ": t_{" + std::to_string(d) + "," +
                        std::to_string(n) + "} = " + total.get_str() +
                        " exceeds guard " + guard.get_str());
}

// Preorder DFS over slot parities. At every slot the internal option is
// taken first, which is exactly lexicographic order of paren_encoding: the
// internal branch emits '(' next, the leaf branch ')' or end of string.
//
// State: r = internal nodes still to place, stack of pending slot parities
// (top = next preorder slot). A leaf is feasible only if some other slot
// remains to absorb the remaining budget.
struct TreeDfs {
  int d;
  long r = 0;
  std::vector<uint8_t> parity;  // pending slots, top = back
  std::vector<uint8_t> pre;

  // Pruning knobs.
  bool eulerian = false;   // leaves only at odd depth
  long even_pending = 0;   // pending slots of even parity (eulerian prune)
  bool track_diff = false; // n_b - n_w running difference with |diff|<=r prune
  long diff = 0;

  std::function<void()> on_tree;

  void run(long n) {
    r = n;
    parity.assign(1, 0);
    even_pending = 1;
    pre.clear();
    pre.reserve(static_cast<size_t>(d) * static_cast<size_t>(n) + 1);
    descend();
  }

  void descend() {
    if (parity.empty()) {
      on_tree();
      return;
    }
    const uint8_t p = parity.back();
    const long child_even = (p == 0) ? 0 : d;  // children have parity p ^ 1
    // internal first
    if (r >= 1) {
      parity.pop_back();
      even_pending -= (p == 0);
      for (int i = 0; i < d; ++i) parity.push_back(p ^ 1);
      even_pending += child_even;
      --r;
      diff += (p == 0) ? 1 : -1;
      pre.push_back(1);
      descend_pruned();
      pre.pop_back();
      diff -= (p == 0) ? 1 : -1;
      ++r;
      for (int i = 0; i < d; ++i) parity.pop_back();
      even_pending -= child_even;
      even_pending += (p == 0);
      parity.push_back(p);
    }
    // leaf: some other slot must remain to absorb the budget; in the
    // eulerian filter a leaf may not hang from an odd-depth parent
    bool leaf_ok = (r == 0 || parity.size() >= 2);
    if (eulerian && p == 0) leaf_ok = false;
    if (leaf_ok) {
      parity.pop_back();
      even_pending -= (p == 0);
      pre.push_back(0);
      descend_pruned();
      pre.pop_back();
      even_pending += (p == 0);
      parity.push_back(p);
    }
  }

  void descend_pruned() {
    if (eulerian && r < even_pending) return;
    if (track_diff && std::abs(diff) > r) return;
    descend();
  }
};

}  // namespace

ColourStats colour_stats(const DissectionTree& tree) {
  ColourStats st;
  if (tree.n == 0) {
    if (tree.d == 2) {
      st.e_b = 1;
      st.e_w = 1;
    }
    return st;
  }
  std::vector<uint8_t> parity = {0};
  long black_leaf_parents = 0, white_leaf_parents = 0;
  for (uint8_t type : tree.pre) {
    uint8_t p = parity.back();
    parity.pop_back();
    if (type) {
      (p == 0 ? st.n_b : st.n_w) += 1;
      for (int i = 0; i < tree.d; ++i) parity.push_back(p ^ 1);
    } else {
      // leaf at parity p, parent at parity p^1... parent is the node that
      // pushed this slot, at parity p^1 fliped: parent parity = p ^ 1.
      ((p ^ 1) == 0 ? black_leaf_parents : white_leaf_parents) += 1;
    }
  }
  if (tree.d == 2) {
    st.e_b = 1 + black_leaf_parents;  // marked edge is black
    st.e_w = white_leaf_parents;
  }
  return st;
}

std::string paren_encoding(const DissectionTree& tree) {
  std::string out;
  size_t pos = 0;
  // Recursive over preorder positions.
  std::function<void()> emit = [&]() {
    uint8_t type = tree.pre.at(pos++);
    if (!type) return;  // leaf -> ""
    for (int i = 0; i < tree.d - 1; ++i) {
      out.push_back('(');
      emit();
      out.push_back(')');
    }
    emit();  // last child bare
  };
  emit();
  return out;
}

DissectionTree parse_paren(int d, std::string_view code) {
  if (d < 2) throw std::invalid_argument("parse_paren: d must be >= 2");
  DissectionTree tree;
  tree.d = d;
  size_t pos = 0;
  std::function<void(size_t)> parse = [&](size_t end) {
    if (pos == end) {
      tree.pre.push_back(0);
      return;
    }
    tree.pre.push_back(1);
    ++tree.n;
    for (int i = 0; i < d - 1; ++i) {
      if (pos >= end || code[pos] != '(')
        throw std::invalid_argument("parse_paren: malformed encoding");
      // find matching ')'
      size_t depth = 0, j = pos;
      for (; j < end; ++j) {
        if (code[j] == '(') ++depth;
        else if (code[j] == ')' && --depth == 0) break;
      }
      if (j >= end) throw std::invalid_argument("parse_paren: unbalanced");
      ++pos;          // consume '('
      parse(j);       // child i
      pos = j + 1;    // consume ')'
    }
    parse(end);  // last child
  };
  parse(code.size());
  if (pos != code.size())
    throw std::invalid_argument("parse_paren: trailing characters");
  return tree;
}

void for_each_tree(int d, long n, const std::function<void(const DissectionTree&)>& visit,
                   const Int& guard) {
  check_dn(d, n);
  check_guard(d, n, guard, "for_each_tree");
  TreeDfs dfs;
  dfs.d = d;
  DissectionTree tree;
  tree.d = d;
  tree.n = n;
  dfs.on_tree = [&]() {
    tree.pre = dfs.pre;
    visit(tree);
  };
  dfs.run(n);
}

std::vector<DissectionTree> enum_trees(int d, long n, const Int& guard) {
  std::vector<DissectionTree> out;
  for_each_tree(d, n, [&](const DissectionTree& t) { out.push_back(t); }, guard);
  return out;
}

DissectionTree tree_by_index(int d, long n, const Int& index, const Int& guard) {
  check_dn(d, n);
  if (index < 0 || index >= t_dn(d, n))
    throw std::invalid_argument("tree_by_index: index out of range");
  check_guard(d, n, guard, "tree_by_index");
  DissectionTree found;
  Int seen = 0;
  struct Done {};
  try {
    for_each_tree(d, n, [&](const DissectionTree& t) {
      if (seen == index) {
        found = t;
        throw Done{};
      }
      ++seen;
    }, guard);
  } catch (const Done&) {
    return found;
  }
  throw std::logic_error("tree_by_index: enumeration ended early");
}

LaurentPoly w_enum(int d, long n, const Int& guard) {
  check_dn(d, n);
  check_guard(d, n, guard, "w_enum");
  // Histogram of n_b - n_w over all trees; diff ranges in [-n, n].
  std::vector<Int> hist(static_cast<size_t>(2 * n + 1), Int(0));
  TreeDfs dfs;
  dfs.d = d;
  dfs.on_tree = [&]() { hist[static_cast<size_t>(dfs.diff + n)] += 1; };
  dfs.run(n);
  LaurentPoly w;
  for (long j = -n; j <= n; ++j) {
    const Int& c = hist[static_cast<size_t>(j + n)];
    if (c != 0) w.set_coeff(j, c);
  }
  return w;
}

std::string boundary_word(const DissectionTree& tree) {
  if (tree.d != 2) throw std::invalid_argument("boundary_word: d = 2 only");
  if (tree.n == 0) return "UV";
  std::string out = "U";
  std::vector<uint8_t> parity = {0};
  for (uint8_t type : tree.pre) {
    uint8_t p = parity.back();
    parity.pop_back();
    if (type) {
      for (int i = 0; i < 2; ++i) parity.push_back(p ^ 1);
    } else {
      out.push_back(((p ^ 1) == 0) ? 'U' : 'V');  // parent colour
    }
  }
  return out;
}

FreeWordSeries noncomm_N(int L) {
  if (L < 2) throw std::invalid_argument("noncomm_N: L must be >= 2");
  FreeWordSeries N(L);
  for (long n = 0; n + 2 <= L; ++n) {
    for_each_tree(2, n, [&](const DissectionTree& t) {
      N.add_term(boundary_word(t), Int(1));
    });
  }
  return N;
}

Int eulerian_count_enum(int d, long n, const Int& guard) {
  check_dn(d, n);
  if (n < 0) throw std::invalid_argument("eulerian_count_enum: n >= 0");
  long internal = (static_cast<long>(d) + 1) * n + 1;
  check_guard(d, internal, guard, "eulerian_count_enum");
  Int count = 0;
  TreeDfs dfs;
  dfs.d = d;
  dfs.eulerian = true;
  dfs.on_tree = [&]() { count += 1; };
  dfs.run(internal);
  return count;
}

Int fair_count_enum(int d, long n, const Int& guard) {
  check_dn(d, n);
  check_guard(d, 2 * n, guard, "fair_count_enum");
  Int count = 0;
  TreeDfs dfs;
  dfs.d = d;
  dfs.track_diff = true;
  dfs.on_tree = [&]() {
    if (dfs.diff == 0) count += 1;
  };
  dfs.run(2 * n);
  return count;
}

namespace {
Int lattice_dfs(int steps_left, int x, int y) {
  if (y > x || y < -x) return 0;
  if (steps_left == 0) return (x == y) ? 1 : 0;
  Int c = 0;
  c += lattice_dfs(steps_left - 1, x + 1, y);
  c += lattice_dfs(steps_left - 1, x - 1, y);
  c += lattice_dfs(steps_left - 1, x, y + 1);
  c += lattice_dfs(steps_left - 1, x, y - 1);
  return c;
}
}  // namespace

Int lattice_path_count(int n, int guard_n) {
  if (n < 0) throw std::invalid_argument("lattice_path_count: n >= 0");
  if (n > guard_n)
    throw GuardExceeded("lattice_path_count: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(guard_n));
  return lattice_dfs(2 * n, 0, 0);
}

}  // namespace ckb
