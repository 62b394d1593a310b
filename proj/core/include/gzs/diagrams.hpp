#pragma once

// Face diagrams on the triangular grid.
//
// Row r (1..n) of the grid holds points p_{r,1}..p_{r,n-r+1}; p_{r,c} stands for
// the coordinate x_{r-1,c}, so row 1 carries the constants lambda_1..lambda_n.
// An edge is named by its lower endpoint: e^L_{r,c} joins p_{r,c} to p_{r-1,c}
// (equation x_{r-1,c} = x_{r-2,c}) and e^R_{r,c} joins p_{r,c} to p_{r-1,c+1}
// (equation x_{r-1,c} = x_{r-2,c+1}). Edges correspond one-to-one with facets.

#include "gzs/gz_core.hpp"
#include "gzs/roots_weyl.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzs {

// Largest rank the grid machinery supports (grid points are packed in 64-bit masks).
inline constexpr int kMaxRank = 10;

struct GridPoint {
  int row = 1;
  int col = 1;

  std::string str() const { return "p" + std::to_string(row) + "," + std::to_string(col); }
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

int grid_size(int n);
int grid_index(int n, GridPoint p);
GridPoint grid_point(int n, int index);

struct DiagramEdge {
  EdgeKind kind = EdgeKind::L;
  int row = 2;
  int col = 1;

  GridPoint lower() const { return {row, col}; }
  GridPoint upper() const { return {row - 1, kind == EdgeKind::L ? col : col + 1}; }
  FacetId facet() const { return {kind, row - 1, col}; }
  static DiagramEdge from_facet(const FacetId& f) { return {f.kind, f.i + 1, f.j}; }

  // "L:2,1" / "R:3,1"
  std::string str() const;
  static DiagramEdge parse(std::string_view token);

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
  friend auto operator<=>(const DiagramEdge& a, const DiagramEdge& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    if (auto c = a.col <=> b.col; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

// All n(n-1) possible edges in (row, col, kind) order.
std::vector<DiagramEdge> all_edges(int n);

class Diagram {
 public:
  Diagram() = default;
  // Throws ShapeMismatch on out-of-range edges or n outside 2..kMaxRank.
  Diagram(int n, std::set<DiagramEdge> edges);
  explicit Diagram(int n) : Diagram(n, {}) {}

  int n() const { return n_; }
  const std::set<DiagramEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const DiagramEdge& e) const { return edges_.count(e) != 0; }
  // The edge at lower endpoint p, if exactly one is present.
  std::optional<DiagramEdge> edge_at(GridPoint lower) const;

  // Sorted, space separated "L:row,col" / "R:row,col" tokens; "" when empty.
  std::string str() const;
  static Diagram parse(int n, std::string_view text);

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  std::set<DiagramEdge> edges_;
};

// Canonical form of the face cut out by a set of equalities: the partition
// of all grid points into equality classes, saturated under every equality
// the interlacing order forces.
class FaceClass {
 public:
  int n() const { return n_; }
  bool empty() const { return empty_; }
  int dim() const { return dim_; }
  // Class id for every grid point (grid_index order); ids numbered by first occurrence.
  const std::vector<int>& class_of() const { return class_of_; }
  int class_count() const;
  bool same_class(GridPoint a, GridPoint b) const;
  // lambda index anchoring the class (its row-1 point), if any.
  std::optional<int> anchor(int class_id) const;
  std::vector<std::vector<GridPoint>> blocks() const;

  // "dim=<d> [p1,1 p2,1] [p1,2] ..." or "empty".
  std::string str() const;

  friend bool operator==(const FaceClass& a, const FaceClass& b);
  friend bool operator<(const FaceClass& a, const FaceClass& b);

 private:
  friend FaceClass close_face(const Diagram& diagram);

  int n_ = 0;
  bool empty_ = false;
  int dim_ = 0;
  std::vector<int> class_of_;
};

// Unions the endpoints of every edge, then merges every cycle of the
// interlacing order (p_{r,c} <= p_{r+1,c} <= p_{r,c+1}), which subsumes the
// squeeze rule in both directions. Empty when two row-1 points coincide;
// otherwise dim is the number of classes without a row-1 point.
FaceClass close_face(const Diagram& diagram);

// Every edge whose endpoints lie in one class (all equations that hold on the face).
Diagram face_diagram(const FaceClass& face);

// The face intersected with the facet of `facet`.
FaceClass intersect(const FaceClass& face, const FacetId& facet);

// small is a subset of big.
bool face_contains(const FaceClass& big, const FaceClass& small);

bool face_contains_point(const GZShape& shape, const FaceClass& face, const GZPoint& pt);

// Coordinates of a 0-dimensional face. Throws InvalidArgument otherwise.
GZPoint face_vertex(const AmbientWeight& lambda, const FaceClass& face);

// Every nonempty face of Q_lambda from a scan of all 2^{2d} diagrams.
// Sorted by (dim, partition). Throws CapabilityError for n > 4.
std::vector<FaceClass> enumerate_faces(int n);

// Tree characterization: every lower point has exactly one upward edge and
// no two edges share an upper endpoint, i.e. D is a disjoint union of n
// paths T_1..T_n with T_i spanning rows 1..i.
bool is_simple(const Diagram& diagram);

// Row characterization: exactly n-r+1 edges end at every row r >= 2 and all
// L edges of a row lie strictly left of all its R edges.
bool is_simple_by_row_counts(const Diagram& diagram);

// Tree decomposition of a simple diagram.
struct TreeLayout {
  // sigma(s) = k when p_{1,s} starts the tree T_k (the tree reaching row k).
  Permutation sigma;
  // lambda index of the tree through each grid point (grid_index order).
  std::vector<int> anchor_of;
};

// Throws NotSimple.
TreeLayout tree_layout(const Diagram& diagram);

// Throws NotSimple.
Permutation sigma_of(const Diagram& diagram);

// Inverse of sigma_of.
Diagram diagram_of_sigma(const Permutation& sigma);

// All n! simple diagrams, lexicographic in sigma.
std::vector<Diagram> simple_diagrams(int n);

// x_{i,j} = lambda_s where p_{i+1,j} lies on the tree anchored at p_{1,s}.
// Throws NotSimple.
GZPoint vertex_point(const AmbientWeight& lambda, const Diagram& diagram);

// For the i-th edge of tree T_j (between rows i and i+1): (i,j) for kind L,
// (j,i) for kind R. The result always pairs negatively with sigma_v lambda.
// Throws EdgeAbsent / NotSimple.
Root tree_edge_root(const Diagram& diagram, const DiagramEdge& edge);

// tree_edge_root for every edge of a simple diagram, in edge order.
std::vector<std::pair<DiagramEdge, Root>> tree_edge_roots(const Diagram& diagram);

// Replace `edge` by the opposite-kind edge at the same lower endpoint.
// Throws EdgeAbsent.
Diagram switch_edge(const Diagram& diagram, const DiagramEdge& edge);

// The root alpha with p(u) = s_alpha p(v) when D(u) differs from D(v) by a
// single switch (alpha taken from D(v), so (p(v), alpha) < 0); nullopt otherwise.
// Throws NotSimple.
std::optional<Root> adjacent_vertices(const Diagram& dv, const Diagram& du);

}  // namespace gzs
