#include "gzs/diagrams.hpp"
#include "gzs/error.hpp"
#include "gzs/oracle.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gzs;

namespace {

Diagram uniform(int n, EdgeKind kind) {
  std::set<DiagramEdge> edges;
  for (int r = 2; r <= n; ++r) {
    for (int c = 1; c <= n - r + 1; ++c) edges.insert({kind, r, c});
  }
  return Diagram(n, edges);
}

Diagram from_mask(int n, unsigned mask) {
  const auto all = all_edges(n);
  std::set<DiagramEdge> edges;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if ((mask >> k) & 1U) edges.insert(all[k]);
  }
  return Diagram(n, edges);
}

}  // namespace

TEST_SUITE("diagrams") {

TEST_CASE("grid indexing") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < grid_size(n); ++k) CHECK(grid_index(n, grid_point(n, k)) == k);
  }
  CHECK(grid_point(3, 3) == GridPoint{2, 1});
  CHECK(all_edges(3).size() == 6);
}

TEST_CASE("edges and facets") {
  const DiagramEdge e{EdgeKind::R, 3, 1};
  CHECK(e.upper() == GridPoint{2, 2});
  CHECK(e.facet() == FacetId{EdgeKind::R, 2, 1});
  CHECK(DiagramEdge::from_facet(e.facet()) == e);
  CHECK(e.str() == "R:3,1");
  CHECK(DiagramEdge::parse("R:3,1") == e);
  CHECK_THROWS_AS(DiagramEdge::parse("X:1,1"), InvalidArgument);
  CHECK_THROWS_AS(Diagram(3, {{EdgeKind::L, 4, 1}}), ShapeMismatch);
  CHECK_THROWS_AS(Diagram(3, {{EdgeKind::L, 3, 2}}), ShapeMismatch);
  const auto d = Diagram::parse(3, "R:3,1 L:2,1");
  CHECK(d.str() == "L:2,1 R:3,1");
  CHECK(Diagram::parse(3, d.str()) == d);
  CHECK(Diagram::parse(3, "").size() == 0);
}

TEST_CASE("close_face basics") {
  const auto whole = close_face(Diagram(3));
  CHECK_FALSE(whole.empty());
  CHECK(whole.dim() == 3);
  const auto bad = close_face(Diagram(3, {{EdgeKind::L, 2, 1}, {EdgeKind::R, 2, 1}}));
  CHECK(bad.empty());
  CHECK(bad.str() == "empty");
  for (const auto& d : simple_diagrams(4)) {
    const auto f = close_face(d);
    CHECK(f.dim() == 0);
    for (int id = 0; id < f.class_count(); ++id) CHECK(f.anchor(id).has_value());
  }
  // x_{2,1} = x_{1,2} = x_{2,2} squeezes x_{3,1} too
  const auto squeezed = close_face(Diagram(4, {{EdgeKind::R, 3, 1}, {EdgeKind::L, 3, 2}}));
  CHECK(squeezed.same_class({3, 1}, {4, 1}));
  CHECK(squeezed.same_class({2, 2}, {4, 1}));
  CHECK(squeezed.dim() == 3);
}

TEST_CASE("close_face agrees with brute-force faces") {
  for (const auto& lambda : {AmbientWeight{0, 1}, AmbientWeight{0, 1, 3}, AmbientWeight{0, 1, 3, 7}}) {
    const GZShape shape(lambda);
    const int n = shape.n();
    const auto faces = brute_faces(shape);
    std::set<std::vector<GZPoint>> reached;
    const unsigned total = 1U << (n * (n - 1));
    for (unsigned mask = 0; mask < total; ++mask) {
      const auto d = from_mask(n, mask);
      const auto face = close_face(d);
      const auto* brute = gzs::testing::face_of_equations(faces, d);
      CHECK(face.empty() == (brute == nullptr));
      if (brute == nullptr || face.empty()) continue;
      CHECK(face.dim() == brute->dim);
      std::set<FacetId> implied;
      const auto saturated = face_diagram(face);
      for (const auto& e : saturated.edges()) implied.insert(e.facet());
      CHECK(implied == brute->active);
      for (const auto& v : brute->vertices) CHECK(face_contains_point(shape, face, v));
      reached.insert(brute->vertices);
    }
    CHECK(reached.size() == faces.size());
    if (n <= 4) CHECK(enumerate_faces(n).size() == faces.size());
  }
  CHECK_THROWS_AS(enumerate_faces(5), CapabilityError);
}

TEST_CASE("face containment matches vertex-set inclusion") {
  const GZShape shape(AmbientWeight{0, 2, 3, 7});
  const auto faces = enumerate_faces(4);
  const auto vertices = brute_vertices(shape);
  auto vertices_of = [&](const FaceClass& f) {
    std::vector<GZPoint> out;
    for (const auto& v : vertices) {
      if (face_contains_point(shape, f, v)) out.push_back(v);
    }
    return out;
  };
  std::vector<std::vector<GZPoint>> sets;
  for (const auto& f : faces) sets.push_back(vertices_of(f));
  for (std::size_t a = 0; a < faces.size(); a += 7) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      const bool incl = std::includes(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end());
      CHECK(face_contains(faces[a], faces[b]) == incl);
    }
  }
}

TEST_CASE("two characterizations of simple diagrams coincide") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t simple = 0;
    const unsigned total = 1U << (n * (n - 1));
    for (unsigned mask = 0; mask < total; ++mask) {
      const auto d = from_mask(n, mask);
      const bool by_trees = is_simple(d);
      CHECK(by_trees == is_simple_by_row_counts(d));
      simple += by_trees ? 1 : 0;
    }
    CHECK(simple == Permutation::all(n).size());
  }
  CHECK_FALSE(is_simple(Diagram(3)));
  CHECK(is_simple(uniform(4, EdgeKind::L)));
  CHECK(is_simple(uniform(4, EdgeKind::R)));
}

TEST_CASE("sigma bijection") {
  CHECK(sigma_of(uniform(3, EdgeKind::R)) == Permutation::identity(3));
  CHECK(diagram_of_sigma(Permutation::identity(3)) == uniform(3, EdgeKind::R));
  CHECK(sigma_of(uniform(3, EdgeKind::L)) == Permutation::longest(3));
  CHECK_THROWS_AS(sigma_of(Diagram(3)), NotSimple);
  for (int n = 2; n <= 5; ++n) {
    std::set<Diagram> seen;
    for (const auto& sigma : Permutation::all(n)) {
      const auto d = diagram_of_sigma(sigma);
      CHECK(is_simple(d));
      CHECK(static_cast<int>(d.size()) == n * (n - 1) / 2);
      CHECK(sigma_of(d) == sigma);
      seen.insert(d);
    }
    CHECK(seen.size() == Permutation::all(n).size());
    CHECK(simple_diagrams(n).size() == seen.size());
  }
  const auto two = simple_diagrams(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 1);
  CHECK(two[0] != two[1]);
}

TEST_CASE("vertex coordinates") {
  const AmbientWeight lambda{0, 1, 3};
  CHECK(vertex_point(lambda, uniform(3, EdgeKind::R)) == GZPoint::parse("1,3;3"));
  CHECK(vertex_point(lambda, uniform(3, EdgeKind::L)) == GZPoint::parse("0,1;0"));
  const auto layout = tree_layout(uniform(3, EdgeKind::R));
  CHECK(layout.anchor_of.size() == 6U);
  for (const auto& lam : {AmbientWeight{0, 1, 3}, AmbientWeight{0, 1, 3, 7}}) {
    const GZShape shape(lam);
    const auto vertices = brute_vertices(shape);
    for (const auto& d : simple_diagrams(shape.n())) {
      const auto p = vertex_point(lam, d);
      CHECK(contains(shape, p));
      CHECK(std::binary_search(vertices.begin(), vertices.end(), p));
      CHECK(face_vertex(lam, close_face(d)) == p);
    }
  }
}

TEST_CASE("p(v) = sigma_v lambda") {
  for (const auto& lambda : {AmbientWeight{0, 1, 3}, AmbientWeight{0, 1, 3, 7}, AmbientWeight{-2, 0, 1, 5, 6}}) {
    const int n = lambda.size();
    const auto base = diagram_of_sigma(Permutation::identity(n));
    const auto p0 = projection_root_coords(vertex_point(lambda, base));
    for (const auto& sigma : Permutation::all(n)) {
      const auto d = diagram_of_sigma(sigma);
      const auto weight = act(sigma, lambda);
      const auto dp = gzs::testing::minus(projection_root_coords(vertex_point(lambda, d)), p0);
      CHECK(dp == gzs::testing::simple_root_coords(weight - lambda));
      std::set<Root> negative;
      for (const auto& alpha : all_roots(n)) {
        if (pairing(weight, alpha) < 0) negative.insert(alpha);
      }
      std::set<Root> from_edges;
      for (const auto& [e, alpha] : tree_edge_roots(d)) {
        CHECK(tree_edge_root(d, e) == alpha);
        CHECK(pairing(weight, alpha) < 0);
        from_edges.insert(alpha);
      }
      CHECK(from_edges == negative);
    }
  }
}

TEST_CASE("tree edge roots on the extreme diagrams") {
  const AmbientWeight lambda{0, 1, 3};
  const auto all_r = uniform(3, EdgeKind::R);
  // the lowest edge of T_2 leaves row 1 at p_{1,2}
  const auto r = tree_edge_root(all_r, {EdgeKind::R, 2, 1});
  CHECK(r == Root{2, 1});
  CHECK(pairing(lambda, r) == -1);
  const auto all_l = uniform(3, EdgeKind::L);
  CHECK(tree_edge_root(all_l, {EdgeKind::L, 2, 2}) == Root{1, 2});
  CHECK(tree_edge_root(all_l, {EdgeKind::L, 2, 1}) == Root{1, 3});
  CHECK_THROWS_AS(tree_edge_root(all_r, {EdgeKind::L, 2, 1}), EdgeAbsent);
}

TEST_CASE("switching edges") {
  const auto d = diagram_of_sigma(Permutation::identity(3));
  const DiagramEdge e{EdgeKind::R, 2, 1};
  const auto s = switch_edge(d, e);
  CHECK(switch_edge(s, {EdgeKind::L, 2, 1}) == d);
  CHECK(is_simple(s));
  CHECK(sigma_of(s) == Permutation::parse("2,1,3"));
  CHECK(act(sigma_of(s), AmbientWeight{0, 1, 3}) == reflect(AmbientWeight{0, 1, 3}, Root{1, 2}));
  CHECK_THROWS_AS(switch_edge(d, {EdgeKind::L, 2, 1}), EdgeAbsent);
  // both R edges ending in p_{2,1} and p_{3,1} switched: the s_2 s_1 side of the hexagon
  const auto two = switch_edge(switch_edge(d, e), {EdgeKind::R, 3, 1});
  CHECK(is_simple(two));
}

TEST_CASE("adjacency against the brute-force 1-skeleton") {
  for (const auto& lambda : {AmbientWeight{0, 1, 3}, AmbientWeight{0, 1, 3, 7}}) {
    const GZShape shape(lambda);
    const auto edges = brute_edges(brute_faces(shape));
    const auto diagrams = simple_diagrams(shape.n());
    std::size_t adjacent_pairs = 0;
    for (const auto& dv : diagrams) {
      CHECK_FALSE(adjacent_vertices(dv, dv).has_value());
      for (const auto& du : diagrams) {
        if (dv == du) continue;
        auto pv = vertex_point(lambda, dv);
        auto pu = vertex_point(lambda, du);
        const auto alpha = adjacent_vertices(dv, du);
        const auto key = pv < pu ? std::pair{pv, pu} : std::pair{pu, pv};
        const bool brute = std::binary_search(edges.begin(), edges.end(), key);
        CHECK(alpha.has_value() == brute);
        if (!alpha) continue;
        ++adjacent_pairs;
        CHECK(act(sigma_of(du), lambda) == reflect(act(sigma_of(dv), lambda), *alpha));
        CHECK(pairing(act(sigma_of(dv), lambda), *alpha) < 0);
        // direction of the polytope edge is a multiple of alpha
        const auto dir = gzs::testing::minus(projection_root_coords(pu), projection_root_coords(pv));
        CHECK(gzs::testing::positive_multiple(dir, gzs::testing::root_vector(shape.n(), *alpha)).has_value());
      }
    }
    CHECK(adjacent_pairs > 0);
  }
}

TEST_CASE("reflection-related vertices need not be adjacent") {
  const AmbientWeight lambda{0, 1, 3};
  bool found = false;
  for (const auto& a : Permutation::all(3)) {
    for (const auto& alpha : all_roots(3)) {
      const auto b = Permutation::transposition(3, alpha.i, alpha.j) * a;
      if (!adjacent_vertices(diagram_of_sigma(a), diagram_of_sigma(b))) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("deleting one tree edge gives a polytope edge") {
  for (const auto& d : simple_diagrams(4)) {
    for (const auto& e : d.edges()) {
      auto edges = d.edges();
      edges.erase(e);
      CHECK(close_face(Diagram(4, edges)).dim() == 1);
    }
  }
}

TEST_CASE("transposition identity on adjacent vertices") {
  for (const auto& lambda : {AmbientWeight{0, 1, 3, 7}, AmbientWeight{-1, 4, 5, 9}}) {
    for (const auto& d : simple_diagrams(4)) {
      const auto sigma = sigma_of(d);
      for (const auto& e : d.edges()) {
        const auto s = switch_edge(d, e);
        if (!is_simple(s)) continue;
        const auto alpha = adjacent_vertices(d, s);
        REQUIRE(alpha.has_value());
        const auto inv = sigma.inverse();
        const int i = std::min(alpha->i, alpha->j);
        const int j = std::max(alpha->i, alpha->j);
        const Integer lhs = abs(pairing(act(sigma, lambda), *alpha));
        const Integer rhs = abs(lambda[inv(j)] - lambda[inv(i)]);
        CHECK(lhs == rhs);
      }
    }
  }
}

}  // TEST_SUITE
