#pragma once

// Bipartite dual graph of a region: black vertices are the left-pointing unit
// triangles, white vertices the right-pointing ones, and edges join triangles
// sharing exactly one lattice edge (i.e. rhombus positions). Its bi-adjacency
// matrix is the Kasteleyn matrix: for hexagonal sub-graphs the black-to-white
// orientation is already admissible, so the matrix has no negated entries and
// |det| counts perfect matchings.

#include <algorithm>
#include <map>
#include <vector>

#include "holeyhex/exact_linalg.hpp"
#include "holeyhex/lattice.hpp"

namespace holeyhex {

struct DualGraph {
  std::vector<TriTriple> blacks;  // left-pointing, canonical order
  std::vector<TriTriple> whites;  // right-pointing, canonical order
  std::vector<std::pair<int, int>> edges;            // (black index, white index)
  std::vector<std::vector<int>> black_adj;           // black index -> white indices
  std::vector<std::vector<int>> white_adj;           // white index -> black indices
};

namespace detail {

// Adjacency is intrinsic to the triangles (shared lattice edge), so it can be
// rebuilt from any vertex subset; indices follow the given vertex order.
inline void rebuild_edges(DualGraph& g) {
  g.edges.clear();
  g.black_adj.assign(g.blacks.size(), {});
  g.white_adj.assign(g.whites.size(), {});
  std::map<TriTriple, int> white_index;
  for (std::size_t j = 0; j < g.whites.size(); ++j)
    white_index.emplace(g.whites[j], static_cast<int>(j));
  for (std::size_t i = 0; i < g.blacks.size(); ++i) {
    for (const TriTriple& p : edge_partners(g.blacks[i])) {
      auto it = white_index.find(p);
      if (it == white_index.end()) continue;
      g.edges.emplace_back(static_cast<int>(i), it->second);
      g.black_adj[i].push_back(it->second);
      g.white_adj[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }
}

}  // namespace detail

inline DualGraph dual_graph(const Region& region) {
  DualGraph g;
  for (const TriTriple& t : enumerate_triangles(region)) {
    if (t.orient == Orient::left)
      g.blacks.push_back(t);
    else
      g.whites.push_back(t);
  }
  detail::rebuild_edges(g);
  return g;
}

// 0/1 bi-adjacency matrix, rows indexed by blacks and columns by whites in
// canonical order.
inline IntMatrix kasteleyn_matrix(const DualGraph& g) {
  IntMatrix m(g.blacks.size(), g.whites.size());
  m.row_labels.reserve(g.blacks.size());
  m.col_labels.reserve(g.whites.size());
  for (const TriTriple& b : g.blacks) m.row_labels.push_back(to_string(b));
  for (const TriTriple& w : g.whites) m.col_labels.push_back(to_string(w));
  for (const auto& [i, j] : g.edges)
    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return m;
}

// Sub-graph with the given vertices and their incident edges removed. The
// inherited order means indices above a removed index shift down by one.
inline DualGraph remove_vertices(const DualGraph& g, const std::vector<TriTriple>& v) {
  DualGraph out;
  out.blacks = g.blacks;
  out.whites = g.whites;
  for (const TriTriple& t : v) {
    auto& side = t.orient == Orient::left ? out.blacks : out.whites;
    auto it = std::find(side.begin(), side.end(), t);
    if (it == side.end())
      fail(Errc::vertex_not_present, "vertex " + to_string(t) + " not present in graph");
    side.erase(it);
  }
  detail::rebuild_edges(out);
  return out;
}

enum class Admissibility { preserving, inducing, neither };

inline const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::preserving: return "Preserving";
    case Admissibility::inducing: return "Inducing";
    case Admissibility::neither: return "Neither";
  }
  return "?";
}

namespace detail {

// Per connected component of removed triangles, the number of whites and
// blacks must have equal parity.
inline bool components_parity_balanced(const Region& region) {
  for (const HoleComponent& comp : hole_components(region)) {
    int lefts = 0, rights = 0;
    for (const TriTriple& t : comp.triangles) (t.orient == Orient::left ? lefts : rights)++;
    if (((lefts ^ rights) & 1) != 0) return false;
  }
  return true;
}

}  // namespace detail

// Preserving: every hole component already has equal black/white parity, so
// the black-to-white orientation of the punctured graph is still admissible.
// Inducing: the parity condition holds after removing all forced rhombi.
inline Admissibility classify_admissibility(const Region& region) {
  if (detail::components_parity_balanced(region)) return Admissibility::preserving;
  try {
    if (detail::components_parity_balanced(forced_closure(region))) return Admissibility::inducing;
  } catch (const Error& e) {
    if (e.code() != Errc::untileable) throw;
    // An untileable region induces nothing; counting layers map it to zero.
  }
  return Admissibility::neither;
}

}  // namespace holeyhex
