#pragma once

// Brute-force ground truth for small GZ polytopes, computed straight from
// the inequalities x_{i-1,j} <= x_{i,j} <= x_{i-1,j+1} with exact rationals.
// Nothing here looks at diagrams.

#include "gzs/exact.hpp"
#include "gzs/gz_core.hpp"
#include "gzs/roots_weyl.hpp"

#include <set>
#include <vector>

namespace gzs {

// Largest rank brute_vertices / brute_faces accept.
inline constexpr int kMaxOracleRank = 4;

struct BruteFace {
  std::set<FacetId> active;      // every facet containing the face
  std::vector<GZPoint> vertices; // sorted
  int dim = 0;                   // affine rank of the vertex set
};

// Vertices of Q_lambda: feasible unique solutions of every d-subset of facet
// equations. Sorted. Throws CapabilityError for n > kMaxOracleRank.
std::vector<GZPoint> brute_vertices(const GZShape& shape);

// Every nonempty face, one per distinct vertex set reached by some subset of
// facet equations. Sorted by (dim, vertices). Throws CapabilityError for n > kMaxOracleRank.
std::vector<BruteFace> brute_faces(const GZShape& shape);

// Pairs of vertices spanning a 1-dimensional face, each pair sorted.
std::vector<std::pair<GZPoint, GZPoint>> brute_edges(const std::vector<BruteFace>& faces);

// |f(v)| for the primitive integral equation f of the facet. Throws NonIntegralPoint.
Integer brute_integral_distance(const GZPoint& v, const FacetId& facet, const AmbientWeight& lambda);

// dim V_lambda = prod_{i<j} (lambda_j - lambda_i + j - i) / (j - i), lambda read as a
// GZ top row. Throws NonRegularWeight.
Integer weyl_dimension(const AmbientWeight& lambda);

}  // namespace gzs
