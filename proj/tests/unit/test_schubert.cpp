#include "gzs/error.hpp"
#include "gzs/oracle.hpp"
#include "gzs/schubert.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace gzs;

namespace {

const Permutation kZ12 = Permutation::from_word(3, {1, 2});
const Permutation kZ21 = Permutation::from_word(3, {2, 1});
const Permutation kZ1 = Permutation::from_word(3, {1});
const Permutation kZ2 = Permutation::from_word(3, {2});

std::multiset<Integer> coefficients(const std::map<Permutation, Integer>& m) {
  std::multiset<Integer> out;
  for (const auto& [k, c] : m) out.insert(c);
  return out;
}

}  // namespace

TEST_SUITE("schubert") {

TEST_CASE("Borel choices") {
  const auto plus = BorelChoice::plus(3);
  const auto minus = BorelChoice::minus(3);
  CHECK(plus.positive_roots() == std::vector<Root>{{1, 2}, {1, 3}, {2, 3}});
  for (const auto& alpha : minus.positive_roots()) CHECK_FALSE(alpha.is_positive());
  for (const auto& u : Permutation::all(4)) {
    const BorelChoice b{u};
    const auto roots = b.positive_roots();
    CHECK(roots.size() == 6U);
    for (const auto& alpha : roots) {
      CHECK(b.is_positive(alpha));
      CHECK_FALSE(b.is_positive(alpha.negated()));
    }
  }
}

TEST_CASE("r_set") {
  const AmbientWeight lambda{0, 1, 3};
  const SimpleVertex top(Permutation::identity(3));
  CHECK(r_set(top, BorelChoice::plus(3), lambda).empty());
  CHECK(r_set(top, BorelChoice::minus(3), lambda).size() == 3U);
  CHECK(gamma_face(top, BorelChoice::minus(3), lambda) == close_face(Diagram(3)));
  CHECK(gamma_face(top, BorelChoice::plus(3), lambda).dim() == 0);
  CHECK_THROWS_AS(r_set(top, BorelChoice::plus(4), lambda), InvalidArgument);
  CHECK_THROWS_AS(r_set(top, BorelChoice::plus(3), AmbientWeight{0, 3, 1}), NonRegularWeight);
}

TEST_CASE("dimension coherence") {
  for (int n = 2; n <= 5; ++n) {
    const auto lambda = gzs::testing::doubling(n);
    std::map<Permutation, int> label_count;
    for (const auto& u : Permutation::all(n)) {
      const BorelChoice b{u};
      for (const auto& sigma : Permutation::all(n)) {
        const SimpleVertex v(sigma);
        const auto w = class_label(v, b);
        const auto face = gamma_face(v, b, lambda);
        CHECK(static_cast<int>(r_set(v, b, lambda).size()) == w.length());
        CHECK(face.dim() == w.length());
        CHECK(face_contains_point(GZShape(lambda), face, v.point(lambda)));
        ++label_count[w];
      }
    }
    for (const auto& [w, count] : label_count) CHECK(count == static_cast<int>(Permutation::all(n).size()));
  }
}

TEST_CASE("class labels at the extremes") {
  for (const auto& u : Permutation::all(3)) {
    const BorelChoice b{u};
    CHECK(class_label(SimpleVertex(u), b).is_identity());
    CHECK(class_label(SimpleVertex(u * Permutation::longest(3)), b) == Permutation::longest(3));
    CHECK(preceding_cells(SimpleVertex(u), b).empty());
    CHECK(chevalley_faces(SimpleVertex(u), b, AmbientWeight{0, 1, 3}).empty());
    CHECK(is_admissible(SimpleVertex(u), b, AmbientWeight{0, 1, 3}));
  }
  const auto dense = preceding_cells(SimpleVertex(Permutation::longest(3)), BorelChoice::plus(3));
  REQUIRE(dense.size() == 2U);
  for (const auto& c : dense) CHECK(class_label(c, BorelChoice::plus(3)).length() == 2);
}

TEST_CASE("SL3 faces") {
  const AmbientWeight lambda{0, 1, 3};
  const auto plus = BorelChoice::plus(3);
  // s_1-reflected highest vertex: the edge [s_1 v, v]
  const SimpleVertex s1v(Permutation::parse("2,1,3"));
  const auto edge = gamma_face(s1v, plus, lambda);
  CHECK(edge.dim() == 1);
  CHECK(face_contains_point(GZShape(lambda), edge, vertex_point(lambda, diagram_of_sigma(Permutation::identity(3)))));
  CHECK(face_contains_point(GZShape(lambda), edge, s1v.point(lambda)));
  // the s_2 s_1 vertex under B+: the facet y = lambda_3
  const SimpleVertex s21v(Permutation::from_word(3, {2, 1}));
  const auto facet = gamma_face(s21v, plus, lambda);
  CHECK(facet.dim() == 2);
  CHECK(facet == intersect(close_face(Diagram(3)), FacetId{EdgeKind::R, 1, 2}));
}

TEST_CASE("SL3 golden expansions") {
  for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 5}, std::pair{4, 1}}) {
    const AmbientWeight lambda{0, a, a + b};
    std::size_t admissible_two_faces = 0;
    for (const auto& u : Permutation::all(3)) {
      const BorelChoice borel{u};
      for (const auto& sigma : Permutation::all(3)) {
        const SimpleVertex v(sigma);
        const auto w = class_label(v, borel);
        if (w.length() != 2 || !is_admissible(v, borel, lambda)) continue;
        ++admissible_two_faces;
        const auto m = chevalley_faces_map(v, borel, lambda);
        if (w == kZ12) CHECK(m == std::map<Permutation, Integer>{{kZ1, b}, {kZ2, a + b}});
        if (w == kZ21) CHECK(m == std::map<Permutation, Integer>{{kZ1, a + b}, {kZ2, a}});
      }
    }
    CHECK(admissible_two_faces > 0);
  }
  // spelled out: Gamma_1 = Gamma((3,1,2), B+), Gamma_2 = Gamma((2,1,3), B-)
  const AmbientWeight lambda{0, 1, 3};
  CHECK(chevalley_faces_map(SimpleVertex(Permutation::parse("3,1,2")), BorelChoice::plus(3), lambda) ==
        std::map<Permutation, Integer>{{kZ1, 3}, {kZ2, 1}});
  CHECK(chevalley_faces_map(SimpleVertex(Permutation::parse("2,1,3")), BorelChoice::minus(3), lambda) ==
        std::map<Permutation, Integer>{{kZ1, 2}, {kZ2, 3}});
}

TEST_CASE("Chevalley terms carry their facets") {
  const AmbientWeight lambda{0, 1, 3, 7};
  const GZShape shape(lambda);
  for (const auto& u : Permutation::all(4)) {
    const BorelChoice b{u};
    for (const auto& sigma : Permutation::all(4)) {
      const SimpleVertex v(sigma);
      const auto terms = chevalley_faces(v, b, lambda);
      const auto coatoms = bruhat_coatoms(class_label(v, b));
      CHECK(terms.size() == coatoms.size());
      for (const auto& t : terms) {
        CHECK(t.root.i < t.root.j);
        CHECK(t.coefficient >= 1);
        CHECK(t.cls == u.inverse() * t.vertex);
        CHECK(act(sigma, lambda) == reflect(act(t.vertex, lambda), t.root));
        Integer sum = 0;
        for (const auto& f : t.facets) sum += facet_distance(shape, f, v.point(lambda));
        CHECK(sum == t.coefficient);
        if (t.contained) CHECK(t.facets.size() == 1U);
      }
    }
  }
}

TEST_CASE("face-based expansion equals the classical one") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& lambda : {gzs::testing::doubling(n), gzs::testing::staircase(n)}) {
      for (const auto& u : Permutation::all(n)) {
        for (const auto& sigma : Permutation::all(n)) {
          const SimpleVertex v(sigma);
          const BorelChoice b{u};
          CHECK(chevalley_faces_map(v, b, lambda) ==
                gzs::testing::chevalley_right_form(class_label(v, b), lambda));
        }
      }
    }
  }
}

TEST_CASE("frame covariance") {
  const AmbientWeight lambda{0, 1, 3, 7};
  for (const auto& x : Permutation::all(4)) {
    for (const auto& u : {Permutation::identity(4), Permutation::parse("2,4,1,3"), Permutation::longest(4)}) {
      for (const auto& sigma : Permutation::all(4)) {
        const SimpleVertex v(sigma);
        const SimpleVertex xv(x * sigma);
        const BorelChoice b{u};
        const BorelChoice xb{x * u};
        CHECK(class_label(v, b) == class_label(xv, xb));
        CHECK(coefficients(chevalley_faces_map(v, b, lambda)) == coefficients(chevalley_faces_map(xv, xb, lambda)));
      }
    }
  }
}

TEST_CASE("containment implies precedence") {
  const AmbientWeight lambda{0, 1, 3, 7};
  for (const auto& u : Permutation::all(4)) {
    const BorelChoice b{u};
    std::map<Permutation, FaceClass> faces;
    for (const auto& sigma : Permutation::all(4)) faces.emplace(sigma, gamma_face(SimpleVertex(sigma), b, lambda));
    for (const auto& [sv, fv] : faces) {
      const auto before = preceding_cells(SimpleVertex(sv), b);
      for (const auto& [su, fu] : faces) {
        if (fu.dim() + 1 != fv.dim() || !face_contains(fv, fu)) continue;
        const bool precedes = std::any_of(before.begin(), before.end(),
                                          [&](const SimpleVertex& c) { return c.sigma() == su; });
        CHECK(precedes);
      }
    }
  }
}

TEST_CASE("integral distance on admissible facet pairs") {
  for (const auto& lambda : {AmbientWeight{0, 1, 3, 7}, AmbientWeight{-1, 0, 4, 5}}) {
    const GZShape shape(lambda);
    for (const auto& u : Permutation::all(4)) {
      const BorelChoice b{u};
      for (const auto& sigma : Permutation::all(4)) {
        const SimpleVertex v(sigma);
        const auto big = gamma_face(v, b, lambda);
        for (const auto& t : chevalley_faces(v, b, lambda)) {
          if (!t.contained) continue;
          const auto small = gamma_face(SimpleVertex(t.vertex), b, lambda);
          const auto cut = cutting_facets(big, small);
          CHECK_FALSE(cut.empty());
          const auto d = integral_distance_to_face(shape, v.point(lambda), big, small);
          REQUIRE(d.has_value());
          CHECK(*d == abs(pairing(v.weight(lambda), t.root)));
          CHECK(*d == t.coefficient);
          for (const auto& f : cut) CHECK(brute_integral_distance(v.point(lambda), f, lambda) == *d);
        }
      }
    }
  }
}

TEST_CASE("admissibility in rank 3") {
  const AmbientWeight lambda{0, 1, 3};
  const GZShape shape(lambda);
  const auto simple = [&] {
    std::vector<GZPoint> out;
    for (const auto& d : simple_diagrams(3)) out.push_back(vertex_point(lambda, d));
    std::sort(out.begin(), out.end());
    return out;
  }();
  std::vector<GZPoint> non_simple;
  for (const auto& p : brute_vertices(shape)) {
    if (!std::binary_search(simple.begin(), simple.end(), p)) non_simple.push_back(p);
  }
  REQUIRE(non_simple.size() == 1U);
  for (const auto& u : Permutation::all(3)) {
    for (const auto& sigma : Permutation::all(3)) {
      const SimpleVertex v(sigma);
      const BorelChoice b{u};
      if (!face_contains_point(shape, gamma_face(v, b, lambda), non_simple[0])) CHECK(is_admissible(v, b, lambda));
    }
  }
  CHECK_FALSE(is_admissible(SimpleVertex(Permutation::parse("1,3,2")), BorelChoice::minus(3), lambda));
}

TEST_CASE("verify sweep") {
  const auto two = verify(AmbientWeight{0, 1});
  CHECK(two.pairs == 4U);
  CHECK(two.ok());
  const auto three = verify(AmbientWeight{0, 1, 3});
  CHECK(three.pairs == 36U);
  CHECK(three.ok());
  CHECK(three.cells.size() == 36U);
  CHECK(std::is_sorted(three.cells.begin(), three.cells.end(), [](const auto& x, const auto& y) {
    return std::tie(x.sigma, x.borel) < std::tie(y.sigma, y.borel);
  }));
  const auto four = verify(AmbientWeight{0, 1, 3, 7}, 3);
  CHECK(four.pairs == 576U);
  CHECK(four.ok());
  CHECK(four.distance_checks > 0U);
  CHECK(four.transposition_checks > 0U);
  CHECK(verify(AmbientWeight{0, 1, 3, 7}, 1) == four);
  CHECK_THROWS_AS(verify(AmbientWeight{0, 1, 3, 7, 15, 31, 63}), CapabilityError);
  CHECK_THROWS_AS(verify(AmbientWeight{0, 0, 1}), NonRegularWeight);
}

TEST_CASE("admissibility census") {
  const auto rows = admissibility_census(3);
  CHECK(rows.size() == 6U);
  for (const auto& r : rows) {
    CHECK(r.representatives == 6U);
    CHECK(r.admissible_representatives >= 1U);
  }
  const auto four = admissibility_census(4);
  CHECK(four.size() == 24U);
  std::size_t failing_avoidance = 0;
  for (const auto& r : four) {
    CHECK(r.representatives == 24U);
    CHECK(r.admissible_representatives <= r.representatives);
    CHECK(r.coatoms == bruhat_coatoms(r.cls).size());
    failing_avoidance += r.avoids_3412_4231 ? 0 : 1;
  }
  CHECK(failing_avoidance == 2U);
}

}  // TEST_SUITE
