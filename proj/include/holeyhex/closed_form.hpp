#pragma once

// Closed forms in exact rational arithmetic: MacMahon's product for the
// hole-free count, the LU factorisation of the lattice path matrix, and the
// entries of the inverse Kasteleyn matrix built from the alternating
// binomial sum g. Factorials of negative integers appear only in
// denominators, where they make the whole term vanish (the same convention
// that zeroes out-of-range binomials); a negative factorial in a numerator
// would be a domain bug and hard-fails.

#include <utility>
#include <vector>

#include "holeyhex/exact_linalg.hpp"
#include "holeyhex/lattice.hpp"
#include "holeyhex/lgv_paths.hpp"
#include "holeyhex/matching_graph.hpp"

namespace holeyhex {

// prod_{i<=a} prod_{j<=b} prod_{k<=c} (i+j+k-1)/(i+j+k-2); the number of
// rhombus tilings of the hole-free hexagon (equivalently of plane partitions
// in an a x b x c box). Empty product when any side is 0.
inline Int macmahon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) fail(Errc::domain_error, "macmahon of negative side");
  Rat value(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) value *= Rat(i + j + k - 1, i + j + k - 2);
  if (denominator(value) != 1) fail(Errc::domain_error, "macmahon product not integral");
  return numerator(value);
}

namespace detail {

// 1/n! as a rational, with 1/(negative)! = 0.
inline Rat inv_factorial(long n) {
  if (n < 0) return Rat(0);
  return Rat(Int(1), factorial(n));
}

inline Int num_factorial(long n) {
  if (n < 0) fail(Errc::domain_error, "negative factorial in numerator");
  return factorial(n);
}

}  // namespace detail

// Entries of the unit lower factor L (top-left a x a block). Vanishes for
// j > i and for i - j > c.
inline Rat lu_A(int b, int c, int i, int j) {
  Rat num = Rat(detail::num_factorial(c) * detail::num_factorial(i - 1) *
                detail::num_factorial(b + j - 1));
  Rat den = detail::inv_factorial(j - 1) * detail::inv_factorial(b + i - 1) *
            detail::inv_factorial(i - j) * detail::inv_factorial(c - i + j);
  return num * den;
}

// Entries of the upper factor U (top-left a x a block). Vanishes for i > j
// and for j - i > b.
inline Rat lu_C(int b, int c, int i, int j) {
  Rat num = Rat(detail::num_factorial(b) * detail::num_factorial(j - 1) *
                detail::num_factorial(b + c + i - 1));
  Rat den = detail::inv_factorial(b + i - 1) * detail::inv_factorial(c + j - 1) *
            detail::inv_factorial(j - i) * detail::inv_factorial(b + i - j);
  return num * den;
}

// Last-row entries of L; r is the doubled psi image of the removed
// right-pointing triangle.
inline Rat lu_B(int a, int b, int c, const LatticePoint& r, int j) {
  Rat sum(0);
  for (int v = 1; v <= j; ++v) {
    Rat term = Rat(detail::num_factorial(b + j - 1) * detail::num_factorial(c + v - 1) *
                   detail::num_factorial(b + j - v - 1));
    term *= detail::inv_factorial(b - 1) * detail::inv_factorial(v - 1) *
            detail::inv_factorial(j - v) * detail::inv_factorial(b + c + j - 1);
    term *= Rat(binom2((b + c) - r.x2 - r.y2, 2 * v - (a - c + 1) - r.x2));
    if ((j - v) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

// Last-column entries of U; l is the doubled psi image of the removed
// left-pointing triangle.
inline Rat lu_D(int a, int b, int c, const LatticePoint& l, int i) {
  Rat sum(0);
  for (int v = 1; v <= i; ++v) {
    Rat term = Rat(detail::num_factorial(i - 1) * detail::num_factorial(b + v - 1) *
                   detail::num_factorial(c + i - v - 1));
    term *= detail::inv_factorial(c - 1) * detail::inv_factorial(v - 1) *
            detail::inv_factorial(b + i - 1) * detail::inv_factorial(i - v);
    term *= Rat(binom2((b + c) + l.x2 + l.y2, (a + c + 1) + l.x2 - 2 * v));
    if ((i - v) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

// LU factors of path_matrix(d, w, b): L is unit lower triangular, U upper
// triangular, and L * U reproduces the path matrix exactly.
inline std::pair<RatMatrix, RatMatrix> lu_factors(const HexDims& d, const TriTriple& w,
                                                  const TriTriple& b) {
  if (w.orient != Orient::right || b.orient != Orient::left)
    fail(Errc::domain_error, "pair must be one right-pointing and one left-pointing triangle");
  const LatticePoint r = psi_checked(d, w);
  const LatticePoint l = psi_checked(d, b);
  const int a = d.a;
  const std::size_t n = static_cast<std::size_t>(a) + 1;
  RatMatrix L(n, n), U(n, n);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) {
      L.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = lu_A(d.b, d.c, i, j);
      U.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = lu_C(d.b, d.c, i, j);
    }
  for (int j = 1; j <= a; ++j)
    L.at(n - 1, static_cast<std::size_t>(j - 1)) = lu_B(a, d.b, d.c, r, j);
  L.at(n - 1, n - 1) = 1;
  Rat corner = Rat(binom2(l.x2 + l.y2 - r.x2 - r.y2, l.x2 - r.x2));
  for (int v = 1; v <= a; ++v)
    corner -= lu_B(a, d.b, d.c, r, v) * lu_D(a, d.b, d.c, l, v);
  for (int i = 1; i <= a; ++i)
    U.at(static_cast<std::size_t>(i - 1), n - 1) = lu_D(a, d.b, d.c, l, i);
  U.at(n - 1, n - 1) = corner;
  return {std::move(L), std::move(U)};
}

// The alternating sum
//   g(u,v,w,x,y,z) = sum_{s=1}^{z} (-1)^{z-s} C(v+s-1, s-1) C(w+z-s-1, w-1)
//                    C(v/2 + w/2 + x + y, x - s + u/2 + w/2 + 1/2)
// with x, y passed doubled. The third coefficient's arguments must be
// integer-valued; odd parities there signal a coordinate bug.
inline Rat g_fn(int u, int v, int w, int x2, int y2, int z) {
  if (z < 1) fail(Errc::domain_error, "g_fn needs z >= 1");
  Rat sum(0);
  for (int s = 1; s <= z; ++s) {
    Int term = binom_int(v + s - 1, s - 1) * binom_int(w + z - s - 1, w - 1) *
               binom2(v + w + x2 + y2, x2 - 2 * s + u + w + 1);
    if ((z - s) % 2 != 0) term = -term;
    sum += Rat(term);
  }
  return sum;
}

// 1-based position of a triangle inside the hole-free hexagon's canonical
// vertex ordering of its colour class.
inline int canonical_index(const HexDims& d, const TriTriple& t) {
  if (!in_hexagon(d, t)) fail(Errc::out_of_bounds, to_string(t) + " is outside the hexagon");
  int idx = 0;
  for (const TriTriple& s : hexagon_triangles(d)) {
    if (s.orient != t.orient) continue;
    ++idx;
    if (s == t) return idx;
  }
  fail(Errc::vertex_not_present, to_string(t) + " not found in canonical order");
}

struct KEntry {
  Rat value;   // includes the alternating sign factor
  int i = 0;   // canonical white index of w
  int j = 0;   // canonical black index of b
};

// Parity of the L- line index of a triangle. The sign of an inverse entry
// alternates with the L- line of each removed triangle; this is the invariant
// the A * K = +-I test pins down. (An index-position parity cannot express it:
// the two parity classes need not split a colour class evenly.)
inline int lline_parity(const HexDims& d, int l2) {
  return ((l2 + ((d.b + d.c) & 1)) / 2) & 1;
}

namespace detail {

inline Rat k_entry_value(const HexDims& d, const LatticePoint& iw, const LatticePoint& jb) {
  const int a = d.a, b = d.b, c = d.c;
  Rat bracket = Rat(binom2(jb.x2 + jb.y2 - iw.x2 - iw.y2, jb.x2 - iw.x2));
  for (int t = 1; t <= a; ++t) {
    Rat num = g_fn(a, b, c, jb.x2, jb.y2, t) * g_fn(a, c, b, -iw.y2, -iw.x2, t);
    Int den = binom_int(b + c + t - 1, b + t - 1) * binom_int(b + t - 1, t - 1);
    bracket -= num / Rat(den);
  }
  // psi_1 + psi_2 recovers the L- label, so the parity factor is intrinsic to
  // the two lattice points.
  const int sign = lline_parity(d, iw.x2 + iw.y2) ^ lline_parity(d, jb.x2 + jb.y2);
  return sign ? Rat(-bracket) : bracket;
}

}  // namespace detail

// Entry K_{w,b} of the inverse Kasteleyn matrix (up to one global sign per
// hexagon): w must be right-pointing (white), b left-pointing (black).
inline KEntry k_entry(const HexDims& d, const TriTriple& w, const TriTriple& b) {
  if (w.orient != Orient::right || b.orient != Orient::left)
    fail(Errc::domain_error, "k_entry expects a right-pointing w and a left-pointing b");
  KEntry e;
  e.i = canonical_index(d, w);
  e.j = canonical_index(d, b);
  e.value = detail::k_entry_value(d, psi_checked(d, w), psi_checked(d, b));
  return e;
}

// Full inverse Kasteleyn matrix, rows indexed by white vertices and columns
// by black vertices in canonical order. Entries are independent, so the fill
// is parallel; the result is identical to the sequential computation.
inline RatMatrix k_matrix(const HexDims& d) {
  const long per_colour = static_cast<long>(d.a) * d.b + static_cast<long>(d.b) * d.c +
                          static_cast<long>(d.c) * d.a;
  if (per_colour > 400)
    fail(Errc::too_large,
         "k_matrix guarded at ab+bc+ca <= 400, got " + std::to_string(per_colour));
  DualGraph g = dual_graph(Region(d, {}));
  const std::size_t n = g.whites.size();
  RatMatrix K(n, n);
  K.row_labels.reserve(n);
  K.col_labels.reserve(n);
  for (const TriTriple& w : g.whites) K.row_labels.push_back(to_string(w));
  for (const TriTriple& b : g.blacks) K.col_labels.push_back(to_string(b));
  std::vector<LatticePoint> wpts(n), bpts(n);
  for (std::size_t i = 0; i < n; ++i) {
    wpts[i] = psi_checked(d, g.whites[i]);
    bpts[i] = psi_checked(d, g.blacks[i]);
  }
  parallel_for(n, [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) K.at(r, c) = detail::k_entry_value(d, wpts[r], bpts[c]);
  });
  return K;
}

}  // namespace holeyhex
