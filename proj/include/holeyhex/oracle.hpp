#pragma once

// Brute-force tiling counter by direct recursive placement. Deliberately
// independent of every linear-algebra route it is used to check: no matrices,
// no determinants, just "cover the first uncovered triangle with one of its
// at most three partners and recurse".

#include <map>
#include <utility>
#include <vector>

#include "holeyhex/lattice.hpp"

namespace holeyhex {

using RhombusPlacement = std::pair<TriTriple, TriTriple>;  // (left, right)
using Tiling = std::vector<RhombusPlacement>;

namespace detail {

struct OracleProblem {
  std::vector<TriTriple> triangles;          // canonical order
  std::vector<std::vector<int>> partner_of;  // index -> partner indices
};

inline OracleProblem oracle_problem(const Region& region) {
  OracleProblem p;
  p.triangles = enumerate_triangles(region);
  std::map<TriTriple, int> index;
  for (std::size_t i = 0; i < p.triangles.size(); ++i)
    index.emplace(p.triangles[i], static_cast<int>(i));
  p.partner_of.resize(p.triangles.size());
  for (std::size_t i = 0; i < p.triangles.size(); ++i) {
    for (const TriTriple& q : edge_partners(p.triangles[i])) {
      auto it = index.find(q);
      if (it != index.end()) p.partner_of[i].push_back(it->second);
    }
  }
  return p;
}

// Tilings are visited in a fixed order: lowest uncovered triangle first, its
// partners in canonical order.
template <class Visit>
void oracle_walk(const OracleProblem& p, std::vector<char>& covered, Tiling& partial,
                 const Visit& visit, bool& stop) {
  std::size_t first = 0;
  while (first < covered.size() && covered[first]) ++first;
  if (first == covered.size()) {
    visit(partial, stop);
    return;
  }
  covered[first] = 1;
  for (int q : p.partner_of[first]) {
    if (covered[static_cast<std::size_t>(q)]) continue;
    covered[static_cast<std::size_t>(q)] = 1;
    const TriTriple& a = p.triangles[first];
    const TriTriple& b = p.triangles[static_cast<std::size_t>(q)];
    partial.emplace_back(a.orient == Orient::left ? a : b, a.orient == Orient::left ? b : a);
    oracle_walk(p, covered, partial, visit, stop);
    partial.pop_back();
    covered[static_cast<std::size_t>(q)] = 0;
    if (stop) break;
  }
  covered[first] = 0;
}

inline OracleProblem checked_problem(const Region& region) {
  OracleProblem p = oracle_problem(region);
  std::size_t lefts = 0;
  for (const TriTriple& t : p.triangles)
    if (t.orient == Orient::left) ++lefts;
  std::size_t per_color = lefts > p.triangles.size() - lefts ? lefts : p.triangles.size() - lefts;
  if (per_color > 60)
    fail(Errc::too_large,
         "oracle capped at 60 triangles per colour, got " + std::to_string(per_color));
  return p;
}

}  // namespace detail

inline Int oracle_count(const Region& region) {
  detail::OracleProblem p = detail::checked_problem(region);
  std::size_t lefts = 0;
  for (const TriTriple& t : p.triangles)
    if (t.orient == Orient::left) ++lefts;
  if (2 * lefts != p.triangles.size()) return 0;  // unbalanced, no perfect cover

  Int count(0);
  std::vector<char> covered(p.triangles.size(), 0);
  Tiling partial;
  bool stop = false;
  detail::oracle_walk(p, covered, partial, [&](const Tiling&, bool&) { ++count; }, stop);
  return count;
}

// Up to `limit` explicit tilings in the deterministic search order.
inline std::vector<Tiling> oracle_enumerate(const Region& region, std::size_t limit) {
  detail::OracleProblem p = detail::checked_problem(region);
  std::vector<Tiling> out;
  if (limit == 0) return out;
  std::size_t lefts = 0;
  for (const TriTriple& t : p.triangles)
    if (t.orient == Orient::left) ++lefts;
  if (2 * lefts != p.triangles.size()) return out;

  std::vector<char> covered(p.triangles.size(), 0);
  Tiling partial;
  bool stop = false;
  detail::oracle_walk(p, covered, partial, [&](const Tiling& t, bool& halt) {
    out.push_back(t);
    if (out.size() >= limit) halt = true;
  }, stop);
  return out;
}

}  // namespace holeyhex
