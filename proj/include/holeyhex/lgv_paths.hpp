#pragma once

// Tilings as families of non-intersecting lattice paths. The map
//
//   psi((x, y, z)) = ((x + y + z)/2, (x - y - z)/2)
//
// sends triangle triples to points of the half-integer grid Z_{a,c} x Z_{a,b}
// (Z_{p,q} = integers shifted by 1/2 when p+q is even); a horizontal rhombus
// becomes a unit east step, a left-leaning rhombus a unit north step, and a
// right-leaning rhombus collapses to a point. Start points come from the
// south-west boundary and the north-east edges of holes, end points from the
// north-east boundary and the south-west edges of holes. The pairwise path
// counts form the lattice path matrix whose determinant is the signed count
// of non-intersecting path families.

#include <vector>

#include "holeyhex/exact_linalg.hpp"
#include "holeyhex/lattice.hpp"

namespace holeyhex {

// A point of Z_{a,c} x Z_{a,b}, doubled so half-integer coordinates are exact.
struct LatticePoint {
  int x2 = 0;
  int y2 = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x2) + "/2," + std::to_string(p.y2) + "/2)";
}

// psi on raw doubled labels. The halving must be exact; consistent triangle
// triples always satisfy that, so a failure means corrupted coordinates.
inline LatticePoint psi_raw(int l2, int lp2, int lpp2) {
  const int s = l2 + lp2 + lpp2;
  const int d = l2 - lp2 - lpp2;
  if ((s & 1) || (d & 1))
    fail(Errc::parity_violation, "psi of labels with mismatched parity");
  return LatticePoint{s / 2, d / 2};
}

inline LatticePoint psi(const TriTriple& t) { return psi_raw(t.l2, t.lp2, t.lpp2); }

// psi with the codomain parity check: x lives on Z_{a,c}, y on Z_{a,b}.
inline LatticePoint psi_checked(const HexDims& d, const TriTriple& t) {
  LatticePoint p = psi(t);
  if (((p.x2 - (d.a + d.c - 1)) & 1) || ((p.y2 - (d.a + d.b - 1)) & 1))
    fail(Errc::parity_violation,
         "psi image " + to_string(p) + " is not on the half-integer grid of the hexagon");
  return p;
}

// Number of monotone north/east lattice paths from p to q.
inline Int path_count(const LatticePoint& from, const LatticePoint& to) {
  return binom2((to.x2 - from.x2) + (to.y2 - from.y2), to.x2 - from.x2);
}

// The a start points along the south-west boundary: the images under psi of
// the left-pointing triangles of the south-west edge, in index order.
inline std::vector<LatticePoint> boundary_starts(const HexDims& d) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(d.a));
  for (int i = 1; i <= d.a; ++i)
    out.push_back(LatticePoint{2 * i - (1 + d.a + d.c), (d.a - d.b + 1) - 2 * i});
  return out;
}

// The a end points along the north-east boundary.
inline std::vector<LatticePoint> boundary_ends(const HexDims& d) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(d.a));
  for (int j = 1; j <= d.a; ++j)
    out.push_back(LatticePoint{2 * j - (1 + d.a - d.c), (d.a + d.b + 1) - 2 * j});
  return out;
}

// Left-pointing triangles of the south-west boundary edge, in index order.
inline std::vector<TriTriple> southwest_edge_triangles(const HexDims& d) {
  std::vector<TriTriple> out;
  out.reserve(static_cast<std::size_t>(d.a));
  for (int i = 1; i <= d.a; ++i)
    out.push_back(make_triple(-(d.b + d.c), (d.b - d.a) + 2 * (i - 1), 2 * i - (d.a + d.c),
                              Orient::left));
  return out;
}

// Right-pointing triangles of the north-east boundary edge, in index order.
inline std::vector<TriTriple> northeast_edge_triangles(const HexDims& d) {
  std::vector<TriTriple> out;
  out.reserve(static_cast<std::size_t>(d.a));
  for (int j = 1; j <= d.a; ++j)
    out.push_back(
        make_triple(d.b + d.c, 2 * j - (d.a + d.b), (d.c - d.a) + 2 * (j - 1), Orient::right));
  return out;
}

// Path starts created by holes: left-pointing triangles (outside the
// south-west edge) whose right-leaning partner is missing from the region.
// In a hole-free hexagon the defining predicate fires exactly on the
// south-west edge, so these are always hole-adjacent.
inline std::vector<TriTriple> hole_start_triangles(const Region& region) {
  std::vector<TriTriple> sw = southwest_edge_triangles(region.dims());
  std::vector<TriTriple> out;
  for (const TriTriple& t : enumerate_triangles(region)) {
    if (t.orient != Orient::left) continue;
    if (std::find(sw.begin(), sw.end(), t) != sw.end()) continue;
    TriTriple partner{t.l2, t.lp2 + 2, t.lpp2 - 2, Orient::right};
    if (!region.contains(partner)) out.push_back(t);
  }
  return out;
}

// Path ends created by holes: right-pointing triangles (outside the
// north-east edge) whose right-leaning partner is missing from the region.
inline std::vector<TriTriple> hole_end_triangles(const Region& region) {
  std::vector<TriTriple> ne = northeast_edge_triangles(region.dims());
  std::vector<TriTriple> out;
  for (const TriTriple& t : enumerate_triangles(region)) {
    if (t.orient != Orient::right) continue;
    if (std::find(ne.begin(), ne.end(), t) != ne.end()) continue;
    TriTriple partner{t.l2, t.lp2 - 2, t.lpp2 + 2, Orient::left};
    if (!region.contains(partner)) out.push_back(t);
  }
  return out;
}

struct PathEndpoints {
  std::vector<LatticePoint> starts;
  std::vector<LatticePoint> ends;
};

// Endpoints for a general region: boundary points first, then the psi images
// of the hole-adjacent triangles in canonical order.
inline PathEndpoints region_endpoints(const Region& region) {
  const HexDims& d = region.dims();
  PathEndpoints pe;
  pe.starts = boundary_starts(d);
  pe.ends = boundary_ends(d);
  for (const TriTriple& t : hole_start_triangles(region)) pe.starts.push_back(psi_checked(d, t));
  for (const TriTriple& t : hole_end_triangles(region)) pe.ends.push_back(psi_checked(d, t));
  return pe;
}

// Endpoints for the one-pair case: removing the right-pointing triangle w
// creates the start point s_{a+1} = psi(w), removing the left-pointing b the
// end point e_{a+1} = psi(b).
inline PathEndpoints pair_endpoints(const HexDims& d, const TriTriple& w, const TriTriple& b) {
  if (w.orient != Orient::right || b.orient != Orient::left)
    fail(Errc::domain_error, "pair must be one right-pointing and one left-pointing triangle");
  if (!in_hexagon(d, w) || !in_hexagon(d, b))
    fail(Errc::out_of_bounds, "removed pair must lie inside the hexagon");
  PathEndpoints pe;
  pe.starts = boundary_starts(d);
  pe.ends = boundary_ends(d);
  pe.starts.push_back(psi_checked(d, w));
  pe.ends.push_back(psi_checked(d, b));
  return pe;
}

// The (a+1) x (a+1) lattice path matrix for the pair (w, b), written with the
// same four binomial cases the endpoint differences produce:
//   rows/cols <= a:            binom(b+c, c+j-i)
//   last row (start at psi(w)): binom((b+c)/2 - rx - ry, j - rx - (a-c+1)/2)
//   last col (end at psi(b)):   binom(lx + ly + (b+c)/2, lx - i + (a+c+1)/2)
//   corner:                     binom(lx + ly - rx - ry, lx - rx)
// Every argument must be integer-valued; binom2 hard-fails otherwise.
inline IntMatrix path_matrix(const HexDims& d, const TriTriple& w, const TriTriple& b) {
  if (w.orient != Orient::right || b.orient != Orient::left)
    fail(Errc::domain_error, "pair must be one right-pointing and one left-pointing triangle");
  if (!in_hexagon(d, w) || !in_hexagon(d, b))
    fail(Errc::out_of_bounds, "removed pair must lie inside the hexagon");
  const LatticePoint r = psi_checked(d, w);  // (rx, ry), doubled
  const LatticePoint l = psi_checked(d, b);  // (lx, ly), doubled
  const int a = d.a;
  const std::size_t n = static_cast<std::size_t>(a) + 1;
  IntMatrix m(n, n);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j)
      m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          binom2(2 * (d.b + d.c), 2 * (d.c + j - i));
  for (int j = 1; j <= a; ++j)
    m.at(n - 1, static_cast<std::size_t>(j - 1)) =
        binom2((d.b + d.c) - r.x2 - r.y2, 2 * j - r.x2 - (a - d.c + 1));
  for (int i = 1; i <= a; ++i)
    m.at(static_cast<std::size_t>(i - 1), n - 1) =
        binom2(l.x2 + l.y2 + (d.b + d.c), l.x2 - 2 * i + (a + d.c + 1));
  m.at(n - 1, n - 1) = binom2(l.x2 + l.y2 - r.x2 - r.y2, l.x2 - r.x2);
  return m;
}

// Determinant of the pairwise path-count matrix; by the Lindstrom and
// Gessel-Viennot lemma this equals the signed sum over non-intersecting path
// families connecting the starts to the ends.
template <class CountFn>
Int lgv_signed_count(const std::vector<LatticePoint>& starts,
                     const std::vector<LatticePoint>& ends, const CountFn& count) {
  if (starts.size() != ends.size())
    fail(Errc::domain_error, "start and end point counts differ");
  IntMatrix m(starts.size(), ends.size());
  for (std::size_t i = 0; i < starts.size(); ++i)
    for (std::size_t j = 0; j < ends.size(); ++j) m.at(i, j) = count(starts[i], ends[j]);
  return det_exact(m);
}

inline Int lgv_signed_count(const std::vector<LatticePoint>& starts,
                            const std::vector<LatticePoint>& ends) {
  return lgv_signed_count(starts, ends,
                          [](const LatticePoint& s, const LatticePoint& e) { return path_count(s, e); });
}

}  // namespace holeyhex
