#pragma once

// Finite-size correlation of holes: the ratio M(H \ T) / M(H) computed for a
// growing hexagon with the holes pinned near the centre. By Kenyon's identity
// the MacMahon factors cancel and the ratio is exactly |det| of the
// inverse-Kasteleyn minor indexed by the holes, so each point costs a
// determinant whose size depends on the holes only. The exponent fit at the
// end is the single floating-point computation in the library.

#include <cmath>
#include <vector>

#include "holeyhex/closed_form.hpp"
#include "holeyhex/counting.hpp"
#include "holeyhex/lattice.hpp"

namespace holeyhex {

struct CorrelationPoint {
  int n = 0;          // hexagon is n * (a0, b0, c0)
  Rat ratio;          // M(H \ T) / M(H), exact
  double separation = 0.0;  // Euclidean distance between hole centres
};

namespace detail {

inline std::pair<double, double> component_centroid(const HoleComponent& comp) {
  double cx = 0, cy = 0;
  for (const TriTriple& t : comp.triangles) {
    for (const LatticeVertex& p : corners(t)) {
      auto [x, y] = vertex_xy(p);
      cx += x / 3.0;
      cy += y / 3.0;
    }
  }
  return {cx / static_cast<double>(comp.triangles.size()),
          cy / static_cast<double>(comp.triangles.size())};
}

}  // namespace detail

// Largest pairwise distance between hole-component centroids; 0 for fewer
// than two components. With exactly two holes this is their separation.
inline double hole_separation(const Region& region) {
  std::vector<HoleComponent> comps = hole_components(region);
  double best = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto [xi, yi] = detail::component_centroid(comps[i]);
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      auto [xj, yj] = detail::component_centroid(comps[j]);
      double dist = std::hypot(xi - xj, yi - yj);
      if (dist > best) best = dist;
    }
  }
  return best;
}

// Exact ratio M(H \ T) / M(H) as the absolute inverse-Kasteleyn minor.
inline Rat correlation_ratio(const HexDims& d, const std::vector<TriTriple>& holes) {
  std::vector<TriTriple> whites, blacks;
  for (const TriTriple& t : holes) (t.orient == Orient::right ? whites : blacks).push_back(t);
  if (whites.size() != blacks.size())
    fail(Errc::unbalanced_colors, "correlation needs equally many whites and blacks removed");
  std::sort(whites.begin(), whites.end());
  std::sort(blacks.begin(), blacks.end());
  RatMatrix minor(whites.size(), blacks.size());
  for (std::size_t r = 0; r < whites.size(); ++r)
    for (std::size_t c = 0; c < blacks.size(); ++c)
      minor.at(r, c) = k_entry(d, whites[r], blacks[c]).value;
  return abs_rat(det_exact(minor));
}

// Ratio sequence for n = 1..n_max with the holes kept at fixed labels while
// the hexagon grows as n * (a0, b0, c0). Values of n whose label grid cannot
// carry the holes are skipped; if no n is compatible the hole anchoring is
// rejected outright.
inline std::vector<CorrelationPoint> correlation_sequence(const HexDims& base,
                                                          const std::vector<TriTriple>& holes,
                                                          int n_max) {
  if (n_max < 1) fail(Errc::domain_error, "n_max must be >= 1");
  for (const TriTriple& t : holes) make_triple(t.l2, t.lp2, t.lpp2, t.orient);
  std::vector<CorrelationPoint> out;
  double separation = 0.0;
  bool have_separation = false;
  for (int n = 1; n <= n_max; ++n) {
    HexDims d{base.a * n, base.b * n, base.c * n};
    bool compatible = true;
    for (const TriTriple& t : holes) {
      if (!in_hexagon(d, t)) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    Region region(d, holes);
    if (!have_separation) {
      separation = hole_separation(region);
      have_separation = true;
    }
    out.push_back(CorrelationPoint{n, correlation_ratio(d, holes), separation});
  }
  if (out.empty())
    fail(Errc::parity_violation,
         "hole anchoring is incompatible with the hexagon label grid for every n <= " +
             std::to_string(n_max));
  return out;
}

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square in log-log space
};

// Least-squares slope of log(ratio) against log(separation). Constant
// prefactors in the conjectured power law only shift the intercept, so no
// normalisation is needed to read off the exponent.
inline FitResult fit_exponent(const std::vector<CorrelationPoint>& points) {
  if (points.size() < 3) fail(Errc::degenerate_fit, "need at least 3 points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const CorrelationPoint& p : points) {
    if (p.separation <= 0.0) fail(Errc::degenerate_fit, "non-positive separation");
    if (p.ratio <= 0) fail(Errc::degenerate_fit, "non-positive ratio (untileable region?)");
    xs.push_back(std::log(p.separation));
    ys.push_back(std::log(p.ratio.convert_to<double>()));
  }
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(xs.size());
  ybar /= static_cast<double>(ys.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (sxx == 0.0) fail(Errc::degenerate_fit, "separations are not distinct");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(xs.size()));
  return fit;
}

}  // namespace holeyhex
