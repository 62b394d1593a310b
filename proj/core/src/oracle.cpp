#include "gzs/oracle.hpp"

#include "gzs/error.hpp"

#include <algorithm>
#include <optional>

namespace gzs {

namespace {

// Affine form c . x + c0 over the coordinates x_{i,j}, i >= 1, in row order.
struct AffineForm {
  std::vector<Integer> coef;
  Integer constant = 0;
};

int var_index(int n, int i, int j) {
  // rows 1..i-1 hold (n-1) + (n-2) + ... + (n-i+1) entries
  return (i - 1) * n - (i - 1) * i / 2 + (j - 1);
}

int num_vars(int n) { return n * (n - 1) / 2; }

void add_term(int n, const AmbientWeight& lambda, AffineForm& f, int i, int j, int sign) {
  if (i == 0) {
    f.constant += sign * lambda[j];
  } else {
    f.coef[static_cast<std::size_t>(var_index(n, i, j))] += sign;
  }
}

// Nonnegative on Q_lambda, zero exactly on the facet.
AffineForm facet_form(int n, const AmbientWeight& lambda, const FacetId& facet) {
  AffineForm f;
  f.coef.assign(static_cast<std::size_t>(num_vars(n)), Integer(0));
  if (facet.kind == EdgeKind::L) {
    add_term(n, lambda, f, facet.i, facet.j, 1);
    add_term(n, lambda, f, facet.i - 1, facet.j, -1);
  } else {
    add_term(n, lambda, f, facet.i - 1, facet.j + 1, 1);
    add_term(n, lambda, f, facet.i, facet.j, -1);
  }
  return f;
}

std::vector<Rational> flatten(const GZPoint& pt) {
  std::vector<Rational> x;
  for (const auto& row : pt.rows()) x.insert(x.end(), row.begin(), row.end());
  return x;
}

GZPoint unflatten(int n, const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> rows;
  std::size_t k = 0;
  for (int i = 1; i < n; ++i) {
    auto& row = rows.emplace_back();
    for (int j = 1; j <= n - i; ++j) row.push_back(x[k++]);
  }
  return GZPoint(std::move(rows));
}

Rational evaluate(const AffineForm& f, const std::vector<Rational>& x) {
  Rational s = f.constant;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (f.coef[k] != 0) s += Rational(f.coef[k]) * x[k];
  }
  return s;
}

// Row reduction in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational pivot = m[r][c];
    for (auto& v : m[r]) v /= pivot;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][c] == 0) continue;
      const Rational factor = m[q][c];
      for (std::size_t k = c; k < m[q].size(); ++k) m[q][k] -= factor * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// The unique solution of f = 0 for all f in `forms`, if there is one.
std::optional<std::vector<Rational>> solve_unique(const std::vector<const AffineForm*>& forms, std::size_t d) {
  std::vector<std::vector<Rational>> m;
  for (const auto* f : forms) {
    std::vector<Rational> row(f->coef.begin(), f->coef.end());
    row.emplace_back(-f->constant);
    m.push_back(std::move(row));
  }
  const auto pivots = row_reduce(m, d);
  if (pivots.size() != d) return std::nullopt;
  std::vector<Rational> x(d);
  for (std::size_t r = 0; r < d; ++r) x[pivots[r]] = m[r][d];
  return x;
}

int affine_rank(const std::vector<std::vector<Rational>>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> m;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<Rational> row(pts[k].size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = pts[k][c] - pts[0][c];
    m.push_back(std::move(row));
  }
  return static_cast<int>(row_reduce(m, pts[0].size()).size());
}

void check_rank(int n) {
  if (n > kMaxOracleRank) {
    throw CapabilityError("brute-force enumeration is limited to n <= " + std::to_string(kMaxOracleRank));
  }
}

}  // namespace

std::vector<GZPoint> brute_vertices(const GZShape& shape) {
  const int n = shape.n();
  check_rank(n);
  const auto facets = all_facets(n);
  const std::size_t d = static_cast<std::size_t>(num_vars(n));
  std::vector<AffineForm> forms;
  for (const auto& f : facets) forms.push_back(facet_form(n, shape.lambda(), f));

  std::set<GZPoint> found;
  std::vector<bool> pick(forms.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
  do {
    std::vector<const AffineForm*> chosen;
    for (std::size_t k = 0; k < forms.size(); ++k) {
      if (pick[k]) chosen.push_back(&forms[k]);
    }
    const auto x = solve_unique(chosen, d);
    if (!x) continue;
    const bool feasible =
        std::all_of(forms.begin(), forms.end(), [&](const AffineForm& f) { return evaluate(f, *x) >= 0; });
    if (feasible) found.insert(unflatten(n, *x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

std::vector<BruteFace> brute_faces(const GZShape& shape) {
  const int n = shape.n();
  check_rank(n);
  const auto facets = all_facets(n);
  const auto vertices = brute_vertices(shape);
  std::vector<std::vector<Rational>> coords;
  for (const auto& v : vertices) coords.push_back(flatten(v));

  // tight[f][v]: vertex v lies on facet f
  std::vector<std::vector<bool>> tight(facets.size(), std::vector<bool>(vertices.size()));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto form = facet_form(n, shape.lambda(), facets[f]);
    for (std::size_t v = 0; v < vertices.size(); ++v) tight[f][v] = evaluate(form, coords[v]) == 0;
  }

  std::set<std::vector<bool>> seen;
  std::vector<BruteFace> out;
  const std::size_t subsets = std::size_t{1} << facets.size();
  for (std::size_t s = 0; s < subsets; ++s) {
    std::vector<bool> members(vertices.size(), true);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if ((s >> f) & 1) {
        for (std::size_t v = 0; v < vertices.size(); ++v) members[v] = members[v] && tight[f][v];
      }
    }
    if (std::none_of(members.begin(), members.end(), [](bool b) { return b; })) continue;
    if (!seen.insert(members).second) continue;

    BruteFace face;
    std::vector<std::vector<Rational>> pts;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (!members[v]) continue;
      face.vertices.push_back(vertices[v]);
      pts.push_back(coords[v]);
    }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      bool all = true;
      for (std::size_t v = 0; v < vertices.size() && all; ++v) all = !members[v] || tight[f][v];
      if (all) face.active.insert(facets[f]);
    }
    face.dim = affine_rank(pts);
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const BruteFace& a, const BruteFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return out;
}

std::vector<std::pair<GZPoint, GZPoint>> brute_edges(const std::vector<BruteFace>& faces) {
  std::vector<std::pair<GZPoint, GZPoint>> out;
  for (const auto& f : faces) {
    if (f.dim == 1 && f.vertices.size() == 2) out.emplace_back(f.vertices[0], f.vertices[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer brute_integral_distance(const GZPoint& v, const FacetId& facet, const AmbientWeight& lambda) {
  const int n = lambda.size();
  if (v.n() != n) throw ShapeMismatch("point and lambda of different rank");
  if (facet.i < 1 || facet.i >= n || facet.j < 1 || facet.j > n - facet.i) {
    throw InvalidArgument("facet out of range: " + facet.str());
  }
  if (!v.is_integral()) throw NonIntegralPoint("integral distance needs an integral point: " + v.str());
  const auto form = facet_form(n, lambda, facet);
  Integer content = 0;
  for (const auto& c : form.coef) content = boost::multiprecision::gcd(content, c);
  const Rational value = evaluate(form, flatten(v)) / Rational(content);
  const Integer num = boost::multiprecision::numerator(value);
  return num < 0 ? Integer(-num) : num;
}

Integer weyl_dimension(const AmbientWeight& lambda) {
  require_regular(lambda);
  Integer num = 1;
  Integer den = 1;
  for (int i = 1; i <= lambda.size(); ++i) {
    for (int j = i + 1; j <= lambda.size(); ++j) {
      num *= lambda[j] - lambda[i] + (j - i);
      den *= j - i;
    }
  }
  return num / den;
}

}  // namespace gzs
