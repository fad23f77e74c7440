#pragma once

// Top-level tiling counters. Three routes compute the same number three
// different ways:
//
//   KasteleynDet  |det| of the punctured bi-adjacency matrix; its size grows
//                 with the region.
//   KenyonMinor   MacMahon count times |det| of the inverse-Kasteleyn minor
//                 indexed by the removed vertices; its size grows with the
//                 holes only.
//   PathMatrix    |det| of the (a+1) x (a+1) lattice path matrix for a single
//                 removed pair.
//
// Verification mode runs every applicable route plus the brute-force oracle
// and fails loudly on disagreement.

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "holeyhex/closed_form.hpp"
#include "holeyhex/lgv_paths.hpp"
#include "holeyhex/matching_graph.hpp"
#include "holeyhex/oracle.hpp"

namespace holeyhex {

enum class Route { kasteleyn_det, kenyon_minor, path_matrix, oracle };

inline const char* route_name(Route r) {
  switch (r) {
    case Route::kasteleyn_det: return "KasteleynDet";
    case Route::kenyon_minor: return "KenyonMinor";
    case Route::path_matrix: return "PathMatrix";
    case Route::oracle: return "Oracle";
  }
  return "?";
}

struct CountResult {
  Int count;
  Route route = Route::kasteleyn_det;
  std::optional<int> epsilon;  // global sign, when one was calibrated
};

// |det| of the punctured Kasteleyn matrix. Requires an admissibility
// preserving or inducing hole set, otherwise the determinant counts signed
// matchings and this operation refuses.
inline CountResult count_kasteleyn(const Region& region) {
  Admissibility cls = classify_admissibility(region);
  Region reduced = region;
  if (cls == Admissibility::inducing) {
    reduced = forced_closure(region);  // cannot throw here: closure succeeded during classify
  } else if (cls == Admissibility::neither) {
    try {
      forced_closure(region);
    } catch (const Error& e) {
      if (e.code() == Errc::untileable) return CountResult{Int(0), Route::kasteleyn_det, {}};
      throw;
    }
    fail(Errc::not_admissible,
         "hole set neither preserves nor induces admissibility; |det| would count signed "
         "matchings (use the signed counter instead)");
  }
  DualGraph g = dual_graph(reduced);
  if (g.blacks.size() != g.whites.size())
    return CountResult{Int(0), Route::kasteleyn_det, {}};  // unbalanced, no perfect matching
  return CountResult{abs_int(det_exact(kasteleyn_matrix(g))), Route::kasteleyn_det, {}};
}

// |det| of the punctured Kasteleyn matrix without any admissibility check:
// the signed perfect matching count.
inline Int signed_matching_count(const Region& region) {
  DualGraph g = dual_graph(region);
  if (g.blacks.size() != g.whites.size())
    fail(Errc::unbalanced_colors, "signed matching count needs equal colour classes");
  return abs_int(det_exact(kasteleyn_matrix(g)));
}

// MacMahon count times |det| of the inverse-Kasteleyn minor on the removed
// vertices. Equals the tiling count for admissibility inducing hole sets and
// the signed matching count always.
inline CountResult count_kenyon(const HexDims& d, const std::vector<TriTriple>& v) {
  std::vector<TriTriple> whites, blacks;
  for (const TriTriple& t : v) (t.orient == Orient::right ? whites : blacks).push_back(t);
  if (whites.size() != blacks.size())
    fail(Errc::unbalanced_colors, "removed set must have equally many whites and blacks");
  std::sort(whites.begin(), whites.end());
  std::sort(blacks.begin(), blacks.end());
  const std::size_t k = whites.size();
  RatMatrix minor(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) minor.at(r, c) = k_entry(d, whites[r], blacks[c]).value;
  Rat scaled = Rat(macmahon(d.a, d.b, d.c)) * det_exact(minor);
  if (denominator(scaled) != 1)
    fail(Errc::domain_error, "Kenyon minor count is not integral; labelling bug");
  return CountResult{abs_int(numerator(scaled)), Route::kenyon_minor, {}};
}

// |det| of the lattice path matrix for one removed right/left pair. Equals
// the tiling count of the pair-punctured hexagon when the pair induces
// admissibility, and |det| of the pair-punctured Kasteleyn matrix always.
inline CountResult count_pathmatrix(const HexDims& d, const TriTriple& w, const TriTriple& b) {
  return CountResult{abs_int(det_exact(path_matrix(d, w, b))), Route::path_matrix, {}};
}

// The single sign relating the two determinants over every removed pair:
//
//   det(A minus {b, w}) = epsilon * (-1)^{i+j} * (-1)^{lambda(w)+lambda(b)}
//                         * det(path matrix of (w, b))
//
// where (i, j) are the 1-based canonical positions of (w, b) and lambda is
// the L- line parity (the same factor the inverse entries carry). The
// magnitudes agree pair by pair; epsilon is global per hexagon, and any
// pair-dependence means the labelling convention is broken.
inline int calibrate_sign(const HexDims& d) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int>, int> cache;
  {
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find({d.a, d.b, d.c});
    if (it != cache.end()) return it->second;
  }
  if (d.a > 4 || d.b > 4 || d.c > 4)
    fail(Errc::too_large, "sign calibration sweeps all pairs; capped at sides <= 4");
  DualGraph g = dual_graph(Region(d, {}));
  IntMatrix A = kasteleyn_matrix(g);
  int epsilon = 0;
  for (std::size_t bi = 0; bi < g.blacks.size(); ++bi) {
    for (std::size_t wi = 0; wi < g.whites.size(); ++wi) {
      Int det_a = det_exact(minor_removed(A, bi, wi));
      Int det_p = det_exact(path_matrix(d, g.whites[wi], g.blacks[bi]));
      if (det_a == 0 && det_p == 0) continue;
      if (abs_int(det_a) != abs_int(det_p))
        fail(Errc::sign_inconsistency,
             "determinant magnitudes differ for pair (" + to_string(g.whites[wi]) + "," +
                 to_string(g.blacks[bi]) + ")");
      const int parity = ((wi + bi) ^ lline_parity(d, g.whites[wi].l2) ^
                          lline_parity(d, g.blacks[bi].l2)) &
                         1;
      int e = (det_a == det_p) ? 1 : -1;
      if (parity) e = -e;
      if (epsilon == 0)
        epsilon = e;
      else if (epsilon != e)
        fail(Errc::sign_inconsistency,
             "sign flips at pair (" + to_string(g.whites[wi]) + "," + to_string(g.blacks[bi]) +
                 ")");
    }
  }
  if (epsilon == 0) epsilon = 1;  // every pair degenerate; any sign is consistent
  std::lock_guard<std::mutex> lk(mtx);
  cache.emplace(std::make_tuple(d.a, d.b, d.c), epsilon);
  return epsilon;
}

// Cheapest applicable route: the Kenyon minor when the holes are small
// relative to the region, the full Kasteleyn determinant otherwise.
inline CountResult count_auto(const Region& region) {
  Admissibility cls = classify_admissibility(region);
  if (cls == Admissibility::neither) {
    try {
      forced_closure(region);
    } catch (const Error& e) {
      if (e.code() == Errc::untileable) return CountResult{Int(0), Route::kasteleyn_det, {}};
      throw;
    }
    fail(Errc::not_admissible, "hole set neither preserves nor induces admissibility");
  }
  const HexDims& d = region.dims();
  std::size_t lefts = 0, rights = 0;
  for (const TriTriple& t : region.holes()) (t.orient == Orient::left ? lefts : rights)++;
  const std::size_t per_colour =
      static_cast<std::size_t>(d.a) * static_cast<std::size_t>(d.b) +
      static_cast<std::size_t>(d.b) * static_cast<std::size_t>(d.c) +
      static_cast<std::size_t>(d.c) * static_cast<std::size_t>(d.a);
  if (lefts == rights && 2 * region.holes().size() <= per_colour)
    return count_kenyon(d, region.holes());
  return count_kasteleyn(region);
}

// Every route that applies to this region, oracle included when it fits.
inline std::vector<CountResult> count_all_routes(const Region& region) {
  std::vector<CountResult> results;
  Admissibility cls = classify_admissibility(region);
  bool untileable_by_closure = false;
  if (cls == Admissibility::neither) {
    try {
      forced_closure(region);
    } catch (const Error& e) {
      if (e.code() != Errc::untileable) throw;
      untileable_by_closure = true;
    }
    if (!untileable_by_closure)
      fail(Errc::not_admissible, "hole set neither preserves nor induces admissibility");
  }
  results.push_back(count_kasteleyn(region));

  std::size_t lefts = 0, rights = 0;
  for (const TriTriple& t : region.holes()) (t.orient == Orient::left ? lefts : rights)++;
  if (lefts == rights && !untileable_by_closure) results.push_back(count_kenyon(region.dims(), region.holes()));
  if (lefts == 1 && rights == 1 && !untileable_by_closure) {
    const TriTriple& h0 = region.holes()[0];
    const TriTriple& h1 = region.holes()[1];
    const TriTriple& w = h0.orient == Orient::right ? h0 : h1;
    const TriTriple& b = h0.orient == Orient::left ? h0 : h1;
    results.push_back(count_pathmatrix(region.dims(), w, b));
  }
  const HexDims& d = region.dims();
  const long per_colour = static_cast<long>(d.a) * d.b + static_cast<long>(d.b) * d.c +
                          static_cast<long>(d.c) * d.a;
  if (per_colour <= 60) results.push_back(CountResult{oracle_count(region), Route::oracle, {}});
  return results;
}

// Runs all applicable routes and insists they agree.
inline CountResult count_verified(const Region& region) {
  std::vector<CountResult> results = count_all_routes(region);
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].count != results[0].count)
      fail(Errc::route_disagreement,
           std::string(route_name(results[0].route)) + " gives " + results[0].count.str() +
               " but " + route_name(results[i].route) + " gives " + results[i].count.str());
  }
  return results[0];
}

}  // namespace holeyhex
