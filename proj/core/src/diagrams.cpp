#include "gzs/diagrams.hpp"

#include "gzs/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace gzs {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int k) { return Mask{1} << k; }

void check_rank(int n) {
  if (n < 2 || n > kMaxRank) {
    throw ShapeMismatch("rank " + std::to_string(n) + " outside 2.." + std::to_string(kMaxRank));
  }
}

bool valid_point(int n, GridPoint p) { return p.row >= 1 && p.row <= n && p.col >= 1 && p.col <= n - p.row + 1; }

}  // namespace

int grid_size(int n) { return n * (n + 1) / 2; }

int grid_index(int n, GridPoint p) {
  // rows 1..r-1 hold n + (n-1) + ... + (n-r+2) points
  const int before = (p.row - 1) * n - (p.row - 1) * (p.row - 2) / 2;
  return before + p.col - 1;
}

GridPoint grid_point(int n, int index) {
  int row = 1;
  while (index >= n - row + 1) {
    index -= n - row + 1;
    ++row;
  }
  return {row, index + 1};
}

std::string DiagramEdge::str() const {
  return std::string(1, to_char(kind)) + ":" + std::to_string(row) + "," + std::to_string(col);
}

DiagramEdge DiagramEdge::parse(std::string_view token) {
  token = detail::trim(token);
  if (token.size() < 3 || (token[0] != 'L' && token[0] != 'R') || token[1] != ':') {
    throw InvalidArgument("bad diagram edge token: '" + std::string(token) + "'");
  }
  const auto parts = detail::split(token.substr(2), ',');
  if (parts.size() != 2) throw InvalidArgument("bad diagram edge token: '" + std::string(token) + "'");
  return {token[0] == 'L' ? EdgeKind::L : EdgeKind::R, detail::parse_int(parts[0]),
          detail::parse_int(parts[1])};
}

std::vector<DiagramEdge> all_edges(int n) {
  std::vector<DiagramEdge> out;
  for (int r = 2; r <= n; ++r) {
    for (int c = 1; c <= n - r + 1; ++c) {
      out.push_back({EdgeKind::L, r, c});
      out.push_back({EdgeKind::R, r, c});
    }
  }
  return out;
}

Diagram::Diagram(int n, std::set<DiagramEdge> edges) : n_(n), edges_(std::move(edges)) {
  check_rank(n);
  for (const auto& e : edges_) {
    if (e.row < 2 || !valid_point(n, e.lower())) {
      throw ShapeMismatch("edge " + e.str() + " does not fit the grid for n=" + std::to_string(n));
    }
  }
}

std::optional<DiagramEdge> Diagram::edge_at(GridPoint lower) const {
  const DiagramEdge l{EdgeKind::L, lower.row, lower.col};
  const DiagramEdge r{EdgeKind::R, lower.row, lower.col};
  const bool has_l = contains(l);
  const bool has_r = contains(r);
  if (has_l == has_r) return std::nullopt;
  return has_l ? l : r;
}

std::string Diagram::str() const {
  return detail::join(edges_, " ", [](const DiagramEdge& e) { return e.str(); });
}

Diagram Diagram::parse(int n, std::string_view text) {
  std::set<DiagramEdge> edges;
  for (auto token : detail::split(detail::trim(text), ' ')) {
    if (detail::trim(token).empty()) continue;
    edges.insert(DiagramEdge::parse(token));
  }
  return Diagram(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Face closure

int FaceClass::class_count() const {
  return class_of_.empty() ? 0 : *std::max_element(class_of_.begin(), class_of_.end()) + 1;
}

bool FaceClass::same_class(GridPoint a, GridPoint b) const {
  return class_of_[static_cast<std::size_t>(grid_index(n_, a))] ==
         class_of_[static_cast<std::size_t>(grid_index(n_, b))];
}

std::optional<int> FaceClass::anchor(int class_id) const {
  for (int c = 1; c <= n_; ++c) {
    if (class_of_[static_cast<std::size_t>(c - 1)] == class_id) return c;
  }
  return std::nullopt;
}

std::vector<std::vector<GridPoint>> FaceClass::blocks() const {
  std::vector<std::vector<GridPoint>> out(static_cast<std::size_t>(class_count()));
  for (int k = 0; k < static_cast<int>(class_of_.size()); ++k) {
    out[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(k)])].push_back(grid_point(n_, k));
  }
  return out;
}

std::string FaceClass::str() const {
  if (empty_) return "empty";
  std::string out = "dim=" + std::to_string(dim_);
  for (const auto& block : blocks()) {
    out += " [" + detail::join(block, " ", [](const GridPoint& p) { return p.str(); }) + "]";
  }
  return out;
}

bool operator==(const FaceClass& a, const FaceClass& b) {
  if (a.n_ != b.n_ || a.empty_ != b.empty_) return false;
  return a.empty_ || a.class_of_ == b.class_of_;
}

bool operator<(const FaceClass& a, const FaceClass& b) {
  return std::tie(a.n_, a.empty_, a.dim_, a.class_of_) < std::tie(b.n_, b.empty_, b.dim_, b.class_of_);
}

FaceClass close_face(const Diagram& diagram) {
  const int n = diagram.n();
  const int size = grid_size(n);
  std::vector<Mask> reach(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) reach[static_cast<std::size_t>(k)] = bit(k);

  auto link = [&](GridPoint from, GridPoint to) {
    reach[static_cast<std::size_t>(grid_index(n, from))] |= bit(grid_index(n, to));
  };
  // x_{r-1,c} <= x_{r,c} <= x_{r-1,c+1}
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c <= n - r; ++c) {
      link({r, c}, {r + 1, c});
      link({r + 1, c}, {r, c + 1});
    }
  }
  for (const auto& e : diagram.edges()) {
    link(e.lower(), e.upper());
    link(e.upper(), e.lower());
  }
  for (int k = 0; k < size; ++k) {
    const Mask via = bit(k);
    for (auto& row : reach) {
      if (row & via) row |= reach[static_cast<std::size_t>(k)];
    }
  }

  FaceClass face;
  face.n_ = n;
  face.class_of_.assign(static_cast<std::size_t>(size), -1);
  int next = 0;
  for (int a = 0; a < size; ++a) {
    if (face.class_of_[static_cast<std::size_t>(a)] != -1) continue;
    for (int b = a; b < size; ++b) {
      if ((reach[static_cast<std::size_t>(a)] & bit(b)) && (reach[static_cast<std::size_t>(b)] & bit(a))) {
        face.class_of_[static_cast<std::size_t>(b)] = next;
      }
    }
    ++next;
  }
  // Row-1 points occupy grid indices 0..n-1.
  std::vector<bool> anchored(static_cast<std::size_t>(next), false);
  for (int c = 0; c < n; ++c) {
    const int id = face.class_of_[static_cast<std::size_t>(c)];
    if (anchored[static_cast<std::size_t>(id)]) face.empty_ = true;
    anchored[static_cast<std::size_t>(id)] = true;
  }
  face.dim_ = static_cast<int>(std::count(anchored.begin(), anchored.end(), false));
  if (face.empty_) face.dim_ = 0;
  return face;
}

Diagram face_diagram(const FaceClass& face) {
  if (face.empty()) throw InvalidArgument("the empty face has no diagram");
  std::set<DiagramEdge> edges;
  for (const auto& e : all_edges(face.n())) {
    if (face.same_class(e.lower(), e.upper())) edges.insert(e);
  }
  return Diagram(face.n(), std::move(edges));
}

FaceClass intersect(const FaceClass& face, const FacetId& facet) {
  if (face.empty()) return face;
  auto edges = face_diagram(face).edges();
  edges.insert(DiagramEdge::from_facet(facet));
  return close_face(Diagram(face.n(), std::move(edges)));
}

bool face_contains(const FaceClass& big, const FaceClass& small) {
  if (big.n() != small.n()) throw ShapeMismatch("comparing faces of different rank");
  if (small.empty()) return true;
  if (big.empty()) return false;
  // Every equality of big must hold on small: big's partition refines small's.
  const auto& bc = big.class_of();
  const auto& sc = small.class_of();
  std::vector<int> image(static_cast<std::size_t>(big.class_count()), -1);
  for (std::size_t k = 0; k < bc.size(); ++k) {
    auto& slot = image[static_cast<std::size_t>(bc[k])];
    if (slot == -1) {
      slot = sc[k];
    } else if (slot != sc[k]) {
      return false;
    }
  }
  return true;
}

bool face_contains_point(const GZShape& shape, const FaceClass& face, const GZPoint& pt) {
  if (face.n() != shape.n()) throw ShapeMismatch("face and polytope of different rank");
  if (face.empty() || !contains(shape, pt)) return false;
  const int n = face.n();
  std::vector<std::optional<Rational>> value(static_cast<std::size_t>(face.class_count()));
  for (int k = 0; k < grid_size(n); ++k) {
    const auto p = grid_point(n, k);
    const Rational x = coordinate(shape, pt, p.row - 1, p.col);
    auto& slot = value[static_cast<std::size_t>(face.class_of()[static_cast<std::size_t>(k)])];
    if (!slot) {
      slot = x;
    } else if (*slot != x) {
      return false;
    }
  }
  return true;
}

GZPoint face_vertex(const AmbientWeight& lambda, const FaceClass& face) {
  if (face.empty() || face.dim() != 0) throw InvalidArgument("not a vertex: " + face.str());
  if (lambda.size() != face.n()) throw ShapeMismatch("lambda and face of different rank");
  GZPoint pt(face.n());
  for (int i = 1; i < face.n(); ++i) {
    for (int j = 1; j <= face.n() - i; ++j) {
      const int id = face.class_of()[static_cast<std::size_t>(grid_index(face.n(), {i + 1, j}))];
      pt.at(i, j) = Rational(lambda[*face.anchor(id)]);
    }
  }
  return pt;
}

std::vector<FaceClass> enumerate_faces(int n) {
  if (n > 4) throw CapabilityError("face enumeration is limited to n <= 4");
  check_rank(n);
  const auto edges = all_edges(n);
  std::set<FaceClass> faces;
  const std::uint32_t subsets = std::uint32_t{1} << edges.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::set<DiagramEdge> chosen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) chosen.insert(edges[k]);
    }
    auto face = close_face(Diagram(n, std::move(chosen)));
    if (!face.empty()) faces.insert(std::move(face));
  }
  return {faces.begin(), faces.end()};
}

// ---------------------------------------------------------------------------
// Simple diagrams

bool is_simple(const Diagram& diagram) {
  const int n = diagram.n();
  for (int r = 2; r <= n; ++r) {
    std::vector<bool> used_upper(static_cast<std::size_t>(n - r + 3), false);
    for (int c = 1; c <= n - r + 1; ++c) {
      const auto e = diagram.edge_at({r, c});
      if (!e) return false;
      const int up = e->upper().col;
      if (used_upper[static_cast<std::size_t>(up)]) return false;
      used_upper[static_cast<std::size_t>(up)] = true;
    }
  }
  return true;
}

bool is_simple_by_row_counts(const Diagram& diagram) {
  const int n = diagram.n();
  for (int r = 2; r <= n; ++r) {
    int count = 0;
    int rightmost_l = 0;
    int leftmost_r = n + 1;
    for (const auto& e : diagram.edges()) {
      if (e.row != r) continue;
      ++count;
      if (e.kind == EdgeKind::L) {
        rightmost_l = std::max(rightmost_l, e.col);
      } else {
        leftmost_r = std::min(leftmost_r, e.col);
      }
    }
    if (count != n - r + 1 || rightmost_l >= leftmost_r) return false;
  }
  return true;
}

TreeLayout tree_layout(const Diagram& diagram) {
  if (!is_simple(diagram)) throw NotSimple("not a simple-vertex diagram: " + diagram.str());
  const int n = diagram.n();
  TreeLayout layout;
  layout.anchor_of.assign(static_cast<std::size_t>(grid_size(n)), 0);
  std::vector<int> depth(static_cast<std::size_t>(n) + 1, 1);
  for (int c = 1; c <= n; ++c) layout.anchor_of[static_cast<std::size_t>(c - 1)] = c;
  for (int r = 2; r <= n; ++r) {
    for (int c = 1; c <= n - r + 1; ++c) {
      const auto e = *diagram.edge_at({r, c});
      const int s = layout.anchor_of[static_cast<std::size_t>(grid_index(n, e.upper()))];
      layout.anchor_of[static_cast<std::size_t>(grid_index(n, {r, c}))] = s;
      depth[static_cast<std::size_t>(s)] = r;
    }
  }
  layout.sigma = Permutation(std::vector<int>(depth.begin() + 1, depth.end()));
  return layout;
}

Permutation sigma_of(const Diagram& diagram) { return tree_layout(diagram).sigma; }

Diagram diagram_of_sigma(const Permutation& sigma) {
  const int n = sigma.size();
  check_rank(n);
  const auto anchor_of_tree = sigma.inverse();
  // lambda indices alive in the current row, increasing
  std::vector<int> alive(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) alive[static_cast<std::size_t>(s - 1)] = s;
  std::set<DiagramEdge> edges;
  for (int r = 2; r <= n; ++r) {
    // The tree T_{r-1} stops at row r-1; points left of it go L, right of it go R.
    const int dropped = anchor_of_tree(r - 1);
    const auto at = std::find(alive.begin(), alive.end(), dropped) - alive.begin();
    for (int c = 1; c <= n - r + 1; ++c) {
      edges.insert({c - 1 < at ? EdgeKind::L : EdgeKind::R, r, c});
    }
    alive.erase(alive.begin() + at);
  }
  return Diagram(n, std::move(edges));
}

std::vector<Diagram> simple_diagrams(int n) {
  std::vector<Diagram> out;
  for (const auto& sigma : Permutation::all(n)) out.push_back(diagram_of_sigma(sigma));
  return out;
}

GZPoint vertex_point(const AmbientWeight& lambda, const Diagram& diagram) {
  const int n = diagram.n();
  if (lambda.size() != n) throw ShapeMismatch("lambda and diagram of different rank");
  const auto layout = tree_layout(diagram);
  GZPoint pt(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      pt.at(i, j) = Rational(lambda[layout.anchor_of[static_cast<std::size_t>(grid_index(n, {i + 1, j}))]]);
    }
  }
  return pt;
}

Root tree_edge_root(const Diagram& diagram, const DiagramEdge& edge) {
  if (!diagram.contains(edge)) throw EdgeAbsent("edge " + edge.str() + " is not in the diagram");
  const auto layout = tree_layout(diagram);
  const int i = edge.row - 1;
  const int j = layout.sigma(layout.anchor_of[static_cast<std::size_t>(grid_index(diagram.n(), edge.lower()))]);
  return edge.kind == EdgeKind::L ? Root{i, j} : Root{j, i};
}

std::vector<std::pair<DiagramEdge, Root>> tree_edge_roots(const Diagram& diagram) {
  const auto layout = tree_layout(diagram);
  std::vector<std::pair<DiagramEdge, Root>> out;
  for (const auto& e : diagram.edges()) {
    const int i = e.row - 1;
    const int j = layout.sigma(layout.anchor_of[static_cast<std::size_t>(grid_index(diagram.n(), e.lower()))]);
    out.emplace_back(e, e.kind == EdgeKind::L ? Root{i, j} : Root{j, i});
  }
  return out;
}

Diagram switch_edge(const Diagram& diagram, const DiagramEdge& edge) {
  if (!diagram.contains(edge)) throw EdgeAbsent("edge " + edge.str() + " is not in the diagram");
  auto edges = diagram.edges();
  edges.erase(edge);
  edges.insert({opposite(edge.kind), edge.row, edge.col});
  return Diagram(diagram.n(), std::move(edges));
}

std::optional<Root> adjacent_vertices(const Diagram& dv, const Diagram& du) {
  if (!is_simple(dv) || !is_simple(du)) throw NotSimple("adjacency is defined for simple diagrams");
  if (dv.n() != du.n()) return std::nullopt;
  std::optional<DiagramEdge> switched;
  for (int r = 2; r <= dv.n(); ++r) {
    for (int c = 1; c <= dv.n() - r + 1; ++c) {
      const auto ev = *dv.edge_at({r, c});
      if (ev == *du.edge_at({r, c})) continue;
      if (switched) return std::nullopt;
      switched = ev;
    }
  }
  if (!switched) return std::nullopt;
  return tree_edge_root(dv, *switched);
}

}  // namespace gzs
