#pragma once

// The triangular lattice, drawn with one family of lines vertical, is the
// arrangement of three line families:
//
//   L-   polar direction -pi/6, level sets of u(x,y) = y + x/sqrt(3)
//   L+   polar direction +pi/6, level sets of v(x,y) = x/sqrt(3) - y
//   Loo  vertical,              level sets of w(x,y) = 2x/sqrt(3) = u + v
//
// Lines are labelled by their (signed, lattice-unit) distance from the
// centre along the horizontal axis; consecutive parallel lines differ by 1.
// A unit triangle is bounded by one line of each family and is identified by
// the triple (l, l', l'') of their labels. Its apex sits on the vertical
// line w = l + l', one column away from its vertical side at w = l'', so
//
//   l + l' - l'' = -1   left-pointing triangle,
//   l + l' - l'' = +1   right-pointing triangle,
//
// and any other value means the three lines do not bound a unit triangle.
//
// The hexagon with side lengths a,b,c,a,b,c (clockwise from the south-west
// side) is enclosed by the lines labelled +-(b+c)/2 in L-, +-(a+b)/2 in L+
// and +-(a+c)/2 in Loo. Labels are half-integers when the corresponding side
// sum is odd, so all labels are stored doubled.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holeyhex/common.hpp"

namespace holeyhex {

enum class Orient : std::uint8_t { left = 0, right = 1 };

inline char orient_char(Orient o) { return o == Orient::left ? 'L' : 'R'; }

struct HexDims {
  int a = 1, b = 1, c = 1;

  friend bool operator==(const HexDims&, const HexDims&) = default;
};

inline HexDims make_dims(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    fail(Errc::out_of_bounds, "hexagon sides must be >= 1, got (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  return HexDims{a, b, c};
}

// A unit triangle, stored as doubled line labels so half-integer labels stay
// exact. Canonical order is (l'' asc, l asc, left before right); it fixes the
// vertex labelling used by every determinant downstream.
struct TriTriple {
  int l2 = 0;    // doubled L- label
  int lp2 = 0;   // doubled L+ label
  int lpp2 = 0;  // doubled Loo label
  Orient orient = Orient::left;

  friend bool operator==(const TriTriple&, const TriTriple&) = default;
  friend std::strong_ordering operator<=>(const TriTriple& x, const TriTriple& y) {
    if (auto c = x.lpp2 <=> y.lpp2; c != 0) return c;
    if (auto c = x.l2 <=> y.l2; c != 0) return c;
    if (auto c = static_cast<int>(x.orient) <=> static_cast<int>(y.orient); c != 0) return c;
    return x.lp2 <=> y.lp2;
  }
};

inline std::string to_string(const TriTriple& t) {
  return "(" + std::to_string(t.l2) + "/2," + std::to_string(t.lp2) + "/2," +
         std::to_string(t.lpp2) + "/2," + orient_char(t.orient) + ")";
}

// A lattice vertex in the (u, v) line-coordinate system, doubled.
struct LatticeVertex {
  int u2 = 0;
  int v2 = 0;

  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

// Cartesian position (unit triangle side = 1) of a lattice vertex;
// x = sqrt(3)/2 * (u+v), y = (u-v)/2. Only the correlation tooling needs it.
inline std::pair<double, double> vertex_xy(const LatticeVertex& p) {
  const double sqrt3 = 1.7320508075688772;
  return {sqrt3 * 0.25 * (p.u2 + p.v2), 0.25 * (p.u2 - p.v2)};
}

// Orientation of the triangle bounded by the lines u = l, v = l', w = l'',
// derived from where the three pairwise intersections fall. Returns nothing
// when the lines do not bound a unit triangle.
inline std::optional<Orient> orient_of_lines(int l2, int lp2, int lpp2) {
  const int apex_offset2 = l2 + lp2 - lpp2;  // doubled w(apex) - w(side)
  if (apex_offset2 == -2) return Orient::left;
  if (apex_offset2 == 2) return Orient::right;
  return std::nullopt;
}

inline TriTriple triangle_at(int l2, int lp2, int lpp2) {
  auto o = orient_of_lines(l2, lp2, lpp2);
  if (!o)
    fail(Errc::inconsistent_triple, "lines (" + std::to_string(l2) + "/2," + std::to_string(lp2) +
                                        "/2," + std::to_string(lpp2) +
                                        "/2) do not bound a unit triangle");
  return TriTriple{l2, lp2, lpp2, *o};
}

inline TriTriple make_triple(int l2, int lp2, int lpp2, Orient orient) {
  TriTriple t = triangle_at(l2, lp2, lpp2);
  if (t.orient != orient)
    fail(Errc::inconsistent_triple,
         "triple " + to_string(TriTriple{l2, lp2, lpp2, orient}) + " has orientation " +
             orient_char(t.orient) + ", not " + orient_char(orient));
  return t;
}

// Corner vertices: apex first, then the two ends of the vertical side.
inline std::array<LatticeVertex, 3> corners(const TriTriple& t) {
  if (t.orient == Orient::left)
    return {LatticeVertex{t.l2, t.lp2}, LatticeVertex{t.l2, t.lp2 + 2},
            LatticeVertex{t.l2 + 2, t.lp2}};
  return {LatticeVertex{t.l2, t.lp2}, LatticeVertex{t.l2, t.lp2 - 2},
          LatticeVertex{t.l2 - 2, t.lp2}};
}

inline int shared_vertex_count(const TriTriple& s, const TriTriple& t) {
  auto cs = corners(s);
  auto ct = corners(t);
  int n = 0;
  for (const auto& p : cs)
    for (const auto& q : ct)
      if (p == q) ++n;
  return n;
}

inline bool shares_edge(const TriTriple& s, const TriTriple& t) {
  return shared_vertex_count(s, t) == 2;
}

inline bool shares_point_or_edge(const TriTriple& s, const TriTriple& t) {
  return shared_vertex_count(s, t) >= 1;
}

// The three opposite-orientation triangles sharing an edge with t, before any
// region clipping. For a left triangle these are its horizontal, left-leaning
// and right-leaning rhombus partners.
inline std::array<TriTriple, 3> edge_partners(const TriTriple& t) {
  if (t.orient == Orient::left)
    return {TriTriple{t.l2 + 2, t.lp2 + 2, t.lpp2, Orient::right},
            TriTriple{t.l2 + 2, t.lp2, t.lpp2 - 2, Orient::right},
            TriTriple{t.l2, t.lp2 + 2, t.lpp2 - 2, Orient::right}};
  return {TriTriple{t.l2 - 2, t.lp2 - 2, t.lpp2, Orient::left},
          TriTriple{t.l2 - 2, t.lp2, t.lpp2 + 2, Orient::left},
          TriTriple{t.l2, t.lp2 - 2, t.lpp2 + 2, Orient::left}};
}

// Membership of a (consistent) triple in the hexagon. The triangle lies in H
// exactly when all three of its corners are inside the six boundary lines,
// which reduces to per-label ranges; labels must also sit on the line grid
// (l2 has the parity of b+c, and so on).
inline bool in_hexagon(const HexDims& d, const TriTriple& t) {
  const int bc = d.b + d.c, ab = d.a + d.b, ac = d.a + d.c;
  if (((t.l2 - bc) & 1) || ((t.lp2 - ab) & 1) || ((t.lpp2 - ac) & 1)) return false;
  if (t.orient == Orient::left)
    return t.l2 >= -bc && t.l2 <= bc - 2 && t.lp2 >= -ab && t.lp2 <= ab - 2 &&
           t.lpp2 >= 2 - ac && t.lpp2 <= ac;
  return t.l2 >= 2 - bc && t.l2 <= bc && t.lp2 >= 2 - ab && t.lp2 <= ab && t.lpp2 >= -ac &&
         t.lpp2 <= ac - 2;
}

class Region {
 public:
  Region() = default;
  Region(HexDims dims, std::vector<TriTriple> holes) : dims_(dims), holes_(std::move(holes)) {
    std::sort(holes_.begin(), holes_.end());
  }

  const HexDims& dims() const { return dims_; }
  const std::vector<TriTriple>& holes() const { return holes_; }

  bool is_hole(const TriTriple& t) const {
    return std::binary_search(holes_.begin(), holes_.end(), t);
  }

  // In the hexagon and not removed.
  bool contains(const TriTriple& t) const { return in_hexagon(dims_, t) && !is_hole(t); }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  HexDims dims_;
  std::vector<TriTriple> holes_;  // sorted canonical
};

inline Region build_region(int a, int b, int c, const std::vector<TriTriple>& holes) {
  HexDims dims = make_dims(a, b, c);
  std::vector<TriTriple> checked;
  checked.reserve(holes.size());
  for (const TriTriple& h : holes) {
    TriTriple t = make_triple(h.l2, h.lp2, h.lpp2, h.orient);  // throws InconsistentTriple
    if (!in_hexagon(dims, t))
      fail(Errc::out_of_bounds, "hole " + to_string(t) + " lies outside the hexagon");
    checked.push_back(t);
  }
  std::sort(checked.begin(), checked.end());
  if (std::adjacent_find(checked.begin(), checked.end()) != checked.end())
    fail(Errc::duplicate, "duplicate hole triangle");
  return Region(dims, std::move(checked));
}

// All unit triangles of the region in canonical order. For the hole-free
// hexagon there are ab+bc+ca of each orientation.
inline std::vector<TriTriple> enumerate_triangles(const Region& region) {
  const HexDims& d = region.dims();
  const int bc = d.b + d.c, ac = d.a + d.c;
  std::vector<TriTriple> out;
  out.reserve(static_cast<std::size_t>(2 * (d.a * d.b + d.b * d.c + d.c * d.a)));
  for (int lpp2 = -ac; lpp2 <= ac; lpp2 += 2) {
    for (int l2 = -bc; l2 <= bc; l2 += 2) {
      // At fixed (l'', l) each orientation pins l'.
      TriTriple left{l2, lpp2 - 2 - l2, lpp2, Orient::left};
      if (region.contains(left)) out.push_back(left);
      TriTriple right{l2, lpp2 + 2 - l2, lpp2, Orient::right};
      if (region.contains(right)) out.push_back(right);
    }
  }
  return out;
}

inline std::vector<TriTriple> hexagon_triangles(const HexDims& d) {
  return enumerate_triangles(Region(d, {}));
}

struct HoleComponent {
  std::vector<TriTriple> triangles;  // canonical order
  int charge = 0;                    // #right-pointing - #left-pointing
};

// Partition of the holes into maximal components connected via shared edges
// or points.
inline std::vector<HoleComponent> hole_components(const Region& region) {
  const auto& holes = region.holes();
  const std::size_t n = holes.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (shares_point_or_edge(holes[i], holes[j])) parent[find(i)] = find(j);

  std::vector<HoleComponent> comps;
  std::vector<std::ptrdiff_t> comp_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<std::ptrdiff_t>(comps.size());
      comps.emplace_back();
    }
    HoleComponent& comp = comps[static_cast<std::size_t>(comp_of[root])];
    comp.triangles.push_back(holes[i]);
    comp.charge += holes[i].orient == Orient::right ? 1 : -1;
  }
  return comps;
}

// Removes, to a fixpoint, every rhombus that is forced: a triangle with
// exactly one in-region edge partner must be tiled with that partner in every
// tiling. Throws Untileable when a remaining triangle has no partner at all.
inline Region forced_closure(const Region& region) {
  std::set<TriTriple> removed(region.holes().begin(), region.holes().end());
  const HexDims dims = region.dims();
  auto alive = [&](const TriTriple& t) {
    return in_hexagon(dims, t) && !removed.count(t);
  };

  std::vector<TriTriple> triangles = enumerate_triangles(region);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const TriTriple& t : triangles) {
      if (!alive(t)) continue;
      std::optional<TriTriple> only;
      int degree = 0;
      for (const TriTriple& p : edge_partners(t)) {
        if (alive(p)) {
          ++degree;
          only = p;
        }
      }
      if (degree == 0)
        fail(Errc::untileable, "triangle " + to_string(t) + " has no available partner");
      if (degree == 1) {
        removed.insert(t);
        removed.insert(*only);
        changed = true;
      }
    }
  }
  return Region(dims, std::vector<TriTriple>(removed.begin(), removed.end()));
}

}  // namespace holeyhex
