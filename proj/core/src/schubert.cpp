#include "gzs/schubert.hpp"

#include "gzs/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace gzs {

std::vector<Root> BorelChoice::positive_roots() const {
  std::vector<Root> out;
  for (int i = 1; i <= u.size(); ++i) {
    for (int j = i + 1; j <= u.size(); ++j) out.push_back({u(i), u(j)});
  }
  return out;
}

bool BorelChoice::is_positive(const Root& alpha) const {
  const auto inv = u.inverse();
  return inv(alpha.i) < inv(alpha.j);
}

SimpleVertex::SimpleVertex(Permutation sigma) : sigma_(std::move(sigma)), diagram_(diagram_of_sigma(sigma_)) {}

SimpleVertex::SimpleVertex(Diagram diagram) : sigma_(sigma_of(diagram)), diagram_(std::move(diagram)) {}

namespace {

void check_frame(const SimpleVertex& v, const BorelChoice& b) {
  if (v.n() != b.n()) throw InvalidArgument("vertex and Borel choice of different rank");
}

void check_lambda(const SimpleVertex& v, const AmbientWeight& lambda) {
  require_regular(lambda);
  if (lambda.size() != v.n()) throw InvalidArgument("lambda and vertex of different rank");
}

// Per-vertex data reused across Borel choices.
struct VertexData {
  SimpleVertex vertex;
  std::vector<std::pair<DiagramEdge, Root>> edge_roots;
  AmbientWeight weight;
  GZPoint point;

  VertexData(const Permutation& sigma, const AmbientWeight& lambda)
      : vertex(sigma),
        edge_roots(tree_edge_roots(vertex.diagram())),
        weight(vertex.weight(lambda)),
        point(vertex.point(lambda)) {}
};

bool in_r_set(const BorelChoice& b, const AmbientWeight& weight, const Root& alpha) {
  return b.is_positive(alpha) && pairing(weight, alpha) < 0;
}

Diagram gamma_diagram_of(const VertexData& vd, const BorelChoice& b) {
  std::set<DiagramEdge> kept;
  for (const auto& [edge, root] : vd.edge_roots) {
    if (!in_r_set(b, vd.weight, root)) kept.insert(edge);
  }
  return Diagram(vd.vertex.n(), std::move(kept));
}

std::vector<Permutation> preceding_sigmas(const Permutation& sigma, const BorelChoice& b) {
  std::vector<Permutation> out;
  for (const auto& lower : bruhat_coatoms(b.u.inverse() * sigma)) out.push_back(b.u * lower);
  std::sort(out.begin(), out.end());
  return out;
}

// The transposition (i j), i < j, with tau = (i j) sigma.
Root connecting_root(const Permutation& sigma, const Permutation& tau) {
  const auto t = tau * sigma.inverse();
  for (int i = 1; i <= t.size(); ++i) {
    if (t(i) > i) return {i, t(i)};
  }
  throw InvalidArgument("vertices " + sigma.str() + " and " + tau.str() + " are not reflection-related");
}

ChevalleyTerm make_term(const GZShape& shape, const VertexData& v, const Permutation& tau,
                        const BorelChoice& b, const FaceClass& v_face, const FaceClass& tau_face) {
  ChevalleyTerm term;
  term.cls = b.u.inverse() * tau;
  term.vertex = tau;
  term.root = connecting_root(v.vertex.sigma(), tau);
  term.coefficient = 0;
  const auto tau_diagram = diagram_of_sigma(tau);
  const int row = term.root.i + 1;
  for (int c = 1; c <= shape.n() - term.root.i; ++c) {
    const auto ev = *v.vertex.diagram().edge_at({row, c});
    const auto eu = *tau_diagram.edge_at({row, c});
    if (ev.kind == eu.kind) continue;
    term.facets.push_back(eu.facet());
    term.coefficient += facet_distance(shape, eu.facet(), v.point);
  }
  term.contained = face_contains(v_face, tau_face);
  return term;
}

}  // namespace

std::vector<Root> r_set(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda) {
  check_frame(v, b);
  check_lambda(v, lambda);
  const auto weight = v.weight(lambda);
  std::vector<Root> out;
  for (const auto& alpha : b.positive_roots()) {
    if (pairing(weight, alpha) < 0) out.push_back(alpha);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram gamma_diagram(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda) {
  check_frame(v, b);
  check_lambda(v, lambda);
  return gamma_diagram_of(VertexData(v.sigma(), lambda), b);
}

FaceClass gamma_face(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda) {
  return close_face(gamma_diagram(v, b, lambda));
}

Permutation class_label(const SimpleVertex& v, const BorelChoice& b) {
  check_frame(v, b);
  return b.u.inverse() * v.sigma();
}

std::vector<SimpleVertex> preceding_cells(const SimpleVertex& v, const BorelChoice& b) {
  check_frame(v, b);
  std::vector<SimpleVertex> out;
  for (auto& tau : preceding_sigmas(v.sigma(), b)) out.emplace_back(std::move(tau));
  return out;
}

bool is_admissible(const SimpleVertex& v, const BorelChoice& b, const AmbientWeight& lambda) {
  const auto face = gamma_face(v, b, lambda);
  for (const auto& u : preceding_cells(v, b)) {
    if (!face_contains(face, gamma_face(u, b, lambda))) return false;
  }
  return true;
}

std::vector<ChevalleyTerm> chevalley_faces(const SimpleVertex& v, const BorelChoice& b,
                                           const AmbientWeight& lambda) {
  check_frame(v, b);
  check_lambda(v, lambda);
  const GZShape shape(lambda);
  const VertexData vd(v.sigma(), lambda);
  const auto v_face = close_face(gamma_diagram_of(vd, b));
  std::vector<ChevalleyTerm> terms;
  for (const auto& tau : preceding_sigmas(v.sigma(), b)) {
    const auto tau_face = close_face(gamma_diagram_of(VertexData(tau, lambda), b));
    terms.push_back(make_term(shape, vd, tau, b, v_face, tau_face));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.cls < y.cls; });
  return terms;
}

std::map<Permutation, Integer> chevalley_faces_map(const SimpleVertex& v, const BorelChoice& b,
                                                   const AmbientWeight& lambda) {
  std::map<Permutation, Integer> out;
  for (auto& term : chevalley_faces(v, b, lambda)) out.emplace(std::move(term.cls), std::move(term.coefficient));
  return out;
}

std::vector<FacetId> cutting_facets(const FaceClass& big, const FaceClass& small) {
  std::vector<FacetId> out;
  for (const auto& f : all_facets(big.n())) {
    if (intersect(big, f) == small) out.push_back(f);
  }
  return out;
}

std::optional<Integer> integral_distance_to_face(const GZShape& shape, const GZPoint& v,
                                                 const FaceClass& big, const FaceClass& small) {
  std::optional<Integer> distance;
  for (const auto& f : cutting_facets(big, small)) {
    auto d = facet_distance(shape, f, v);
    if (distance && *distance != d) return std::nullopt;
    distance = std::move(d);
  }
  return distance;
}

namespace {

std::string render(const std::map<Permutation, Integer>& m) {
  std::string out = "{";
  for (const auto& [cls, c] : m) {
    if (out.size() > 1) out += " ";
    out += cls.str() + ":" + c.str();
  }
  return out + "}";
}

struct FrameResult {
  std::vector<CellRecord> cells;
  std::vector<Mismatch> mismatches;
  std::size_t distance_checks = 0;
};

FrameResult sweep_frame(const GZShape& shape, const std::vector<VertexData>& vertices,
                        const std::map<Permutation, std::size_t>& index, const BorelChoice& b) {
  FrameResult out;
  const auto& lambda = shape.lambda();
  std::vector<FaceClass> faces;
  faces.reserve(vertices.size());
  for (const auto& vd : vertices) faces.push_back(close_face(gamma_diagram_of(vd, b)));

  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& vd = vertices[k];
    const auto& sigma = vd.vertex.sigma();
    CellRecord cell;
    cell.sigma = sigma;
    cell.borel = b.u;
    cell.cls = b.u.inverse() * sigma;
    cell.dim = faces[k].dim();
    cell.admissible = true;

    std::map<Permutation, Integer> face_based;
    for (const auto& tau : preceding_sigmas(sigma, b)) {
      const auto& tau_face = faces[index.at(tau)];
      const auto term = make_term(shape, vd, tau, b, faces[k], tau_face);
      cell.admissible = cell.admissible && term.contained;
      cell.chevalley.push_back({term.cls, term.coefficient, static_cast<int>(term.facets.size())});
      face_based.emplace(term.cls, term.coefficient);

      if (!term.contained) continue;
      // Gamma(u, B) is a facet of Gamma(v, B).
      ++out.distance_checks;
      const Integer expected = abs(pairing(vd.weight, term.root));
      const auto distance = integral_distance_to_face(shape, vd.point, faces[k], tau_face);
      if (!distance || *distance != expected || term.facets.size() != 1 || term.coefficient != expected) {
        out.mismatches.push_back(
            {"distance", sigma, b.u,
             "preceding " + tau.str() + ": |(p(v),alpha)|=" + expected.str() + " d(v,Gamma(u,B))=" +
                 (distance ? distance->str() : std::string("undefined")) + " k=" +
                 std::to_string(term.facets.size())});
      }
    }
    std::sort(cell.chevalley.begin(), cell.chevalley.end(),
              [](const auto& x, const auto& y) { return x.cls < y.cls; });

    const auto classical = chevalley_classical(cell.cls, lambda);
    if (classical != face_based) {
      out.mismatches.push_back(
          {"chevalley", sigma, b.u, "faces " + render(face_based) + " classical " + render(classical)});
    }
    if (cell.dim != cell.cls.length()) {
      out.mismatches.push_back({"chevalley", sigma, b.u,
                                "face dim " + std::to_string(cell.dim) + " != length " +
                                    std::to_string(cell.cls.length())});
    }
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

VerificationReport verify(const AmbientWeight& lambda, unsigned threads) {
  const GZShape shape(lambda);
  const int n = shape.n();
  if (n > kMaxVerifyRank) {
    throw CapabilityError("verify is limited to n <= " + std::to_string(kMaxVerifyRank));
  }
  VerificationReport report;
  report.n = n;
  report.lambda = lambda;

  const auto sigmas = Permutation::all(n);
  std::vector<VertexData> vertices;
  std::map<Permutation, std::size_t> index;
  for (const auto& sigma : sigmas) {
    index.emplace(sigma, vertices.size());
    vertices.emplace_back(sigma, lambda);
  }

  // Edges between simple vertices: |(p(v), alpha)| = |lambda_r - lambda_s|.
  for (const auto& vd : vertices) {
    for (const auto& [edge, root] : vd.edge_roots) {
      const auto switched = switch_edge(vd.vertex.diagram(), edge);
      if (!is_simple(switched)) continue;
      ++report.transposition_checks;
      const SimpleVertex u(switched);
      const auto alpha = adjacent_vertices(vd.vertex.diagram(), switched);
      const auto& sigma = vd.vertex.sigma();
      std::string problem;
      if (!alpha) {
        problem = "single switch not recognised as adjacency";
      } else {
        const int i = std::min(alpha->i, alpha->j);
        const int j = std::max(alpha->i, alpha->j);
        const auto inv = sigma.inverse();
        const Integer lhs = abs(pairing(vd.weight, *alpha));
        const Integer rhs = abs(lambda[inv(j)] - lambda[inv(i)]);
        if (u.weight(lambda) != reflect(vd.weight, *alpha)) problem = "p(u) != s_alpha p(v)";
        if (lhs != rhs) problem = "|(p(v),alpha)|=" + lhs.str() + " |lambda_r-lambda_s|=" + rhs.str();
      }
      if (!problem.empty()) {
        report.mismatches.push_back({"transposition", sigma, u.sigma(), problem});
      }
    }
  }

  std::vector<FrameResult> frames(sigmas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < sigmas.size(); k = next++) {
      frames[k] = sweep_frame(shape, vertices, index, BorelChoice{sigmas[k]});
    }
  };
  unsigned count = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  count = std::min<unsigned>(count, static_cast<unsigned>(sigmas.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }

  for (auto& frame : frames) {
    report.pairs += frame.cells.size();
    report.distance_checks += frame.distance_checks;
    for (auto& c : frame.cells) report.cells.push_back(std::move(c));
    for (auto& m : frame.mismatches) report.mismatches.push_back(std::move(m));
  }
  std::sort(report.cells.begin(), report.cells.end(),
            [](const auto& x, const auto& y) { return std::tie(x.sigma, x.borel) < std::tie(y.sigma, y.borel); });
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(), [](const auto& x, const auto& y) {
    return std::tie(x.sigma, x.borel) < std::tie(y.sigma, y.borel);
  });
  return report;
}

std::vector<CensusRow> admissibility_census(int n) {
  AmbientWeight lambda;
  for (int k = 0; k < n; ++k) lambda.entries.emplace_back(k);
  require_regular(lambda);
  if (n > kMaxVerifyRank) {
    throw CapabilityError("the census is limited to n <= " + std::to_string(kMaxVerifyRank));
  }
  const auto sigmas = Permutation::all(n);
  std::vector<VertexData> vertices;
  std::map<Permutation, std::size_t> index;
  for (const auto& sigma : sigmas) {
    index.emplace(sigma, vertices.size());
    vertices.emplace_back(sigma, lambda);
  }
  const std::vector<Permutation> singular = {Permutation({3, 4, 1, 2}), Permutation({4, 2, 3, 1})};

  std::map<Permutation, CensusRow> rows;
  for (const auto& w : sigmas) {
    CensusRow row;
    row.cls = w;
    row.length = w.length();
    row.avoids_3412_4231 = avoids_patterns(w, singular);
    row.coatoms = bruhat_coatoms(w).size();
    row.support = support_size(w);
    rows.emplace(w, row);
  }
  for (const auto& u : sigmas) {
    const BorelChoice b{u};
    std::vector<FaceClass> faces;
    for (const auto& vd : vertices) faces.push_back(close_face(gamma_diagram_of(vd, b)));
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      const auto& sigma = vertices[k].vertex.sigma();
      bool admissible = true;
      for (const auto& tau : preceding_sigmas(sigma, b)) {
        admissible = admissible && face_contains(faces[k], faces[index.at(tau)]);
      }
      auto& row = rows.at(u.inverse() * sigma);
      ++row.representatives;
      if (admissible) ++row.admissible_representatives;
    }
  }
  std::vector<CensusRow> out;
  for (auto& [w, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace gzs
