#include "gzs/gz_core.hpp"

#include "gzs/error.hpp"
#include "text.hpp"

namespace gzs {

GZShape::GZShape(AmbientWeight lambda) : lambda_(std::move(lambda)) { require_regular(lambda_); }

GZPoint::GZPoint(int n) {
  if (n < 2) throw ShapeMismatch("GZ points need n >= 2");
  for (int i = 1; i < n; ++i) rows_.emplace_back(static_cast<std::size_t>(n - i), Rational(0));
}

GZPoint::GZPoint(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  const std::size_t m = rows_.size();
  if (m == 0) throw ShapeMismatch("GZ point has no rows");
  for (std::size_t r = 0; r < m; ++r) {
    if (rows_[r].size() != m - r) {
      throw ShapeMismatch("GZ point row " + std::to_string(r + 1) + " has " +
                          std::to_string(rows_[r].size()) + " entries, expected " +
                          std::to_string(m - r));
    }
  }
}

const Rational& GZPoint::at(int i, int j) const {
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Rational& GZPoint::at(int i, int j) {
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

bool GZPoint::is_integral() const {
  for (const auto& row : rows_) {
    for (const auto& x : row) {
      if (!gzs::is_integral(x)) return false;
    }
  }
  return true;
}

GZPoint GZPoint::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  for (auto row_text : detail::split(detail::trim(text), ';')) {
    auto& row = rows.emplace_back();
    for (auto token : detail::split(row_text, ',')) {
      token = detail::trim(token);
      const auto slash = token.find('/');
      const auto num = token.substr(0, slash);
      const auto den = slash == std::string_view::npos ? std::string_view("1") : token.substr(slash + 1);
      if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den)) {
        throw InvalidArgument("not a rational: '" + std::string(token) + "'");
      }
      const Integer d(std::string(detail::trim(den)));
      if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(token) + "'");
      auto n_text = std::string(detail::trim(num));
      if (n_text.front() == '+') n_text.erase(0, 1);
      row.emplace_back(Integer(n_text), d);
    }
  }
  return GZPoint(std::move(rows));
}

std::string GZPoint::str() const {
  return detail::join(rows_, ";", [](const std::vector<Rational>& row) {
    return detail::join(row, ",", [](const Rational& x) { return to_string(x); });
  });
}

std::string FacetId::str() const {
  return std::string(1, to_char(kind)) + ":" + std::to_string(i) + "," + std::to_string(j);
}

std::vector<FacetId> all_facets(int n) {
  std::vector<FacetId> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      out.push_back({EdgeKind::L, i, j});
      out.push_back({EdgeKind::R, i, j});
    }
  }
  return out;
}

namespace {

void check_shape(const GZShape& shape, const GZPoint& pt) {
  if (pt.n() != shape.n()) {
    throw ShapeMismatch("point has rank " + std::to_string(pt.n()) + ", polytope has rank " +
                        std::to_string(shape.n()));
  }
}

}  // namespace

Rational coordinate(const GZShape& shape, const GZPoint& pt, int i, int j) {
  if (i == 0) return Rational(shape.lambda()[j]);
  return pt.at(i, j);
}

bool contains(const GZShape& shape, const GZPoint& pt) {
  check_shape(shape, pt);
  const int n = shape.n();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      const auto& x = pt.at(i, j);
      if (x < coordinate(shape, pt, i - 1, j) || x > coordinate(shape, pt, i - 1, j + 1)) return false;
    }
  }
  return true;
}

namespace {

// Depth-first walk over integer patterns in lexicographic row order.
template <class Visit>
void walk_patterns(const GZShape& shape, Visit&& visit) {
  const int n = shape.n();
  std::vector<std::vector<Integer>> rows;
  rows.push_back(shape.lambda().entries);
  for (int i = 1; i < n; ++i) rows.emplace_back(static_cast<std::size_t>(n - i));

  auto recurse = [&](auto&& self, int i, int j) -> void {
    if (i == n) {
      visit(rows);
      return;
    }
    const auto& above = rows[static_cast<std::size_t>(i - 1)];
    const Integer lo = above[static_cast<std::size_t>(j - 1)];
    const Integer hi = above[static_cast<std::size_t>(j)];
    const int next_i = j == n - i ? i + 1 : i;
    const int next_j = j == n - i ? 1 : j + 1;
    for (Integer x = lo; x <= hi; ++x) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] = x;
      self(self, next_i, next_j);
    }
  };
  recurse(recurse, 1, 1);
}

}  // namespace

std::vector<GZPoint> lattice_points(const GZShape& shape) {
  std::vector<GZPoint> out;
  walk_patterns(shape, [&](const std::vector<std::vector<Integer>>& rows) {
    std::vector<std::vector<Rational>> pt;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      pt.emplace_back(rows[r].begin(), rows[r].end());
    }
    out.emplace_back(std::move(pt));
  });
  return out;
}

Integer count_lattice_points(const GZShape& shape) {
  Integer count = 0;
  walk_patterns(shape, [&](const auto&) { ++count; });
  return count;
}

std::vector<Rational> projection_root_coords(const GZPoint& pt) {
  std::vector<Rational> out;
  for (const auto& row : pt.rows()) {
    Rational sum = 0;
    for (const auto& x : row) sum += x;
    out.push_back(sum);
  }
  return out;
}

Integer facet_distance(const GZShape& shape, const FacetId& facet, const GZPoint& pt) {
  check_shape(shape, pt);
  if (facet.i < 1 || facet.i >= shape.n() || facet.j < 1 || facet.j > shape.n() - facet.i) {
    throw InvalidArgument("facet out of range: " + facet.str());
  }
  if (!pt.is_integral()) throw NonIntegralPoint("integral distance needs an integral point: " + pt.str());
  const int upper_j = facet.kind == EdgeKind::L ? facet.j : facet.j + 1;
  const Rational diff = pt.at(facet.i, facet.j) - coordinate(shape, pt, facet.i - 1, upper_j);
  const Integer value = boost::multiprecision::numerator(diff);
  return value < 0 ? Integer(-value) : value;
}

}  // namespace gzs
