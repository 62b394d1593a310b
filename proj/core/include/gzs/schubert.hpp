#pragma once

// Schubert cells O(v, B) and their faces Gamma(v, B) of the GZ polytope.
//
// A Borel subgroup containing the diagonal torus is named by the permutation
// u with B = u B+ u^{-1}; its positive system is {(u(i), u(j)) : i < j}.
// A simple vertex v carries sigma_v with p(v) = sigma_v lambda. The cell
// O(v, B) is labelled by w = u^{-1} sigma_v in the B+ frame, so conjugate
// cells (sigma_v, u) and (x sigma_v, x u) share a label and l(w) = dim O(v, B).

#include "gzs/diagrams.hpp"
#include "gzs/exact.hpp"
#include "gzs/gz_core.hpp"
#include "gzs/roots_weyl.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gzs {

struct BorelChoice {
  Permutation u;

  static BorelChoice plus(int n) { return {Permutation::identity(n)}; }
  static BorelChoice minus(int n) { return {Permutation::longest(n)}; }

  int n() const { return u.size(); }
  // Phi(B), ordered by (i, j) of the reference positive root.
  std::vector<Root> positive_roots() const;
  bool is_positive(const Root& alpha) const;

  friend bool operator==(const BorelChoice&, const BorelChoice&) = default;
};

// A simple vertex of Q_lambda, identified both by sigma_v and by its diagram.
class SimpleVertex {
 public:
  explicit SimpleVertex(Permutation sigma);
  // Throws NotSimple.
  explicit SimpleVertex(Diagram diagram);

  int n() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const Diagram& diagram() const { return diagram_; }
  AmbientWeight weight(const AmbientWeight& lambda) const { return act(sigma_, lambda); }
  GZPoint point(const AmbientWeight& lambda) const { return vertex_point(lambda, diagram_); }

  friend bool operator==(const SimpleVertex& a, const SimpleVertex& b) { return a.sigma_ == b.sigma_; }
  friend bool operator<(const SimpleVertex& a, const SimpleVertex& b) { return a.sigma_ < b.sigma_; }

 private:
  Permutation sigma_;
  Diagram diagram_;
};

// R(v, B) = { alpha in Phi(B) : (sigma_v lambda, alpha) < 0 }, sorted.
std::vector<Root> r_set(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda);

// D(v) with the tree edges whose roots lie in R(v, B) deleted.
Diagram gamma_diagram(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda);

// close_face(gamma_diagram(v, B)); its dimension is |R(v, B)|.
FaceClass gamma_face(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda);

// w = u^{-1} sigma_v.
Permutation class_label(const SimpleVertex& v, const BorelChoice& b);

// Vertices u whose cells O(u, B) are boundary divisors of O(v, B), sorted by sigma_u.
std::vector<SimpleVertex> preceding_cells(const SimpleVertex& v, const BorelChoice& b);

// Gamma(v, B) contains Gamma(u, B) for every preceding cell u.
bool is_admissible(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda);

// One term of the face-based Chevalley expansion.
struct ChevalleyTerm {
  Permutation cls;             // class label of the preceding cell
  Permutation vertex;          // sigma of the preceding vertex u
  Root root;                   // alpha = (i, j), i < j, with p(v) = s_alpha p(u)
  std::vector<FacetId> facets; // F_1..F_k from the edges of D(u) at row i+1 that differ from D(v)
  Integer coefficient;         // d(v, F_1) + ... + d(v, F_k)
  bool contained = false;      // Gamma(u, B) lies in Gamma(v, B)
};

// Face-based Chevalley expansion of O(v, B), one term per preceding cell, sorted by class.
std::vector<ChevalleyTerm> chevalley_faces(const SimpleVertex& v, const BorelChoice& b,
                                           const AmbientWeight& lambda);

// The same expansion keyed by class label.
std::map<Permutation, Integer> chevalley_faces_map(const SimpleVertex& v, const BorelChoice& b,
                                                   const AmbientWeight& lambda);

// Facets F of Q_lambda with F meeting `big` exactly in `small`.
std::vector<FacetId> cutting_facets(const FaceClass& big, const FaceClass& small);

// d(v, small): the integral distance from v to the facet of Q_lambda that
// cuts `small` out of `big`. nullopt when no facet does, or when the cutting
// facets disagree on the distance.
std::optional<Integer> integral_distance_to_face(const GZShape& shape, const GZPoint& v,
                                                 const FaceClass& big, const FaceClass& small);

struct ExpansionEntry {
  Permutation cls;
  Integer coefficient;
  int k = 1;

  friend bool operator==(const ExpansionEntry&, const ExpansionEntry&) = default;
};

struct CellRecord {
  Permutation sigma;
  Permutation borel;
  Permutation cls;
  int dim = 0;
  bool admissible = false;
  std::vector<ExpansionEntry> chevalley;

  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct Mismatch {
  std::string check;  // "chevalley", "distance" or "transposition"
  Permutation sigma;
  Permutation borel;
  std::string detail;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  int n = 0;
  AmbientWeight lambda;
  std::size_t pairs = 0;
  std::size_t distance_checks = 0;
  std::size_t transposition_checks = 0;
  std::vector<CellRecord> cells;  // sorted by (sigma, borel)
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Largest rank verify() accepts.
inline constexpr int kMaxVerifyRank = 6;

// Sweeps all n! * n! pairs (v, B): compares chevalley_faces with
// chevalley_classical(class_label(v, B), lambda), checks the integral
// distance identity on every facet pair Gamma(u, B) in Gamma(v, B), and the
// transposition identity |(p(v), alpha)| = |lambda_r - lambda_s| on every
// edge between simple vertices. `threads` = 0 uses the hardware concurrency.
// Throws NonRegularWeight / CapabilityError.
VerificationReport verify(const AmbientWeight& lambda, unsigned threads = 0);

// Per-class admissible representability over all (v, B). Admissibility does
// not depend on the (regular) lambda.
struct CensusRow {
  Permutation cls;
  int length = 0;
  std::size_t representatives = 0;
  std::size_t admissible_representatives = 0;
  bool avoids_3412_4231 = true;
  std::size_t coatoms = 0;
  int support = 0;  // distinct simple reflections in a reduced word
};

std::vector<CensusRow> admissibility_census(int n);

}  // namespace gzs
