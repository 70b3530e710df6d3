#include "ckb/svg.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

namespace ckb {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // avoid -0.000
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

}  // namespace

std::string dissection_svg(const DissectionTree& tree) {
  const int d = tree.d;
  const long n = tree.n;
  const long M = (d - 1) * n + 2;  // polygon vertices
  const double cx = 200.0, cy = 200.0, radius = 180.0;
  auto vx = [&](long i) {
    double a = -M_PI / 2 + 2.0 * M_PI * static_cast<double>(((i % M) + M) % M) / static_cast<double>(M);
    return std::pair<double, double>(cx + radius * std::cos(a), cy + radius * std::sin(a));
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n";

  if (n == 0) {
    auto [x0, y0] = vx(0);
    auto [x1, y1] = vx(1);
    os << "  <line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
       << "\" y2=\"" << fmt(y1) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    os << "  <line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1)
       << "\" y2=\"" << fmt(y1) << "\" stroke=\"#000\" stroke-width=\"5\"/>\n";
    os << "</svg>\n";
    return os.str();
  }

  // subtree internal-node counts per preorder position
  std::vector<long> size(tree.pre.size(), 0);
  {
    size_t pos0 = 0;
    std::function<long()> count = [&]() -> long {
      size_t me = pos0++;
      if (!tree.pre[me]) return 0;
      long s = 1;
      for (int i = 0; i < d; ++i) s += count();
      size[me] = s;
      return s;
    };
    count();
  }

  // cells: region with base edge (v_arc_start = v, arc end = u), arc from v
  // counterclockwise to u spanning (d-1)*k + 1 boundary edges
  struct Cell {
    std::vector<long> verts;
    bool black;
  };
  std::vector<Cell> cells;
  size_t pos = 0;
  std::function<void(long, long, int)> walk = [&](long v, long u, int depth) {
    size_t me = pos++;
    if (!tree.pre[me]) return;
    Cell cell;
    cell.black = (depth % 2 == 0);
    cell.verts.push_back(u);  // base edge endpoints first: u -> v ccw
    cell.verts.push_back(v);
    long c = v;
    std::vector<std::pair<long, long>> child_spans;
    for (int i = 0; i < d; ++i) {
      long k = size[pos];  // child subtree internal count
      long next = c + (d - 1) * k + 1;
      child_spans.emplace_back(c, next);
      if (i < d - 1) cell.verts.push_back(next);
      // child has base edge (c, next), processed in preorder now
      walk(c, next, depth + 1);
      c = next;
    }
    cells.push_back(std::move(cell));
  };
  walk(1, M, 0);

  // draw white cells first, black on top (shared diagonals stay crisp)
  for (bool black : {false, true}) {
    for (const auto& cell : cells) {
      if (cell.black != black) continue;
      os << "  <polygon points=\"";
      for (size_t i = 0; i < cell.verts.size(); ++i) {
        auto [px, py] = vx(cell.verts[i]);
        if (i) os << " ";
        os << fmt(px) << "," << fmt(py);
      }
      os << "\" fill=\"" << (black ? "#303030" : "#ffffff")
         << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    }
  }
  auto [mx0, my0] = vx(0);
  auto [mx1, my1] = vx(1);
  os << "  <line x1=\"" << fmt(mx0) << "\" y1=\"" << fmt(my0) << "\" x2=\"" << fmt(mx1)
     << "\" y2=\"" << fmt(my1) << "\" stroke=\"#000\" stroke-width=\"6\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace ckb
