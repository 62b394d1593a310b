#pragma once

// The Gelfand-Zetlin polytope Q_lambda in R^d, d = n(n-1)/2, given by the
// interlacing inequalities x_{i-1,j} <= x_{i,j} <= x_{i-1,j+1} with row 0
// identified with lambda.

#include "gzs/exact.hpp"
#include "gzs/roots_weyl.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gzs {

class GZShape {
 public:
  // Throws NonRegularWeight unless lambda is strictly increasing.
  explicit GZShape(AmbientWeight lambda);

  int n() const { return lambda_.size(); }
  int dimension() const { return n() * (n() - 1) / 2; }
  const AmbientWeight& lambda() const { return lambda_; }

 private:
  AmbientWeight lambda_;
};

// Triangular array x_{i,j}, i = 1..n-1, j = 1..n-i.
class GZPoint {
 public:
  GZPoint() = default;
  // All-zero point for rank n.
  explicit GZPoint(int n);
  // Throws ShapeMismatch unless rows have lengths n-1, n-2, ..., 1.
  explicit GZPoint(std::vector<std::vector<Rational>> rows);

  int n() const { return static_cast<int>(rows_.size()) + 1; }
  // 1-based, i in 1..n-1, j in 1..n-i.
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  bool is_integral() const;

  // Rows top to bottom, entries comma separated, rows semicolon separated:
  // "1,3;3" for n = 3.
  static GZPoint parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const GZPoint&, const GZPoint&) = default;
  friend bool operator<(const GZPoint& a, const GZPoint& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

enum class EdgeKind { L, R };

inline char to_char(EdgeKind k) { return k == EdgeKind::L ? 'L' : 'R'; }
inline EdgeKind opposite(EdgeKind k) { return k == EdgeKind::L ? EdgeKind::R : EdgeKind::L; }

// kind L: x_{i,j} = x_{i-1,j};  kind R: x_{i,j} = x_{i-1,j+1}.
struct FacetId {
  EdgeKind kind = EdgeKind::L;
  int i = 1;
  int j = 1;

  std::string str() const;
  friend bool operator==(const FacetId&, const FacetId&) = default;
  friend auto operator<=>(const FacetId& a, const FacetId& b) {
    if (auto c = a.i <=> b.i; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

// All 2d = n(n-1) facet ids, ordered by (i, j, kind).
std::vector<FacetId> all_facets(int n);

// x_{i,j}(pt) with row 0 read from lambda.
Rational coordinate(const GZShape& shape, const GZPoint& pt, int i, int j);

// Throws ShapeMismatch if pt has the wrong shape.
bool contains(const GZShape& shape, const GZPoint& pt);

// All integer points, lexicographic by rows. The count equals dim V_lambda.
std::vector<GZPoint> lattice_points(const GZShape& shape);
// Same count without materializing the points.
Integer count_lattice_points(const GZShape& shape);

// Coefficients of alpha_1..alpha_{n-1} in p(pt), without the constant shift:
// (sum_j x_{1,j}, sum_j x_{2,j}, ..., x_{n-1,1}).
std::vector<Rational> projection_root_coords(const GZPoint& pt);

// Integral distance from an integral point to the facet hyperplane:
// |x_{i,j} - x_{i-1,j}| (kind L) or |x_{i,j} - x_{i-1,j+1}| (kind R).
// Throws NonIntegralPoint for non-integral points.
Integer facet_distance(const GZShape& shape, const FacetId& facet, const GZPoint& pt);

}  // namespace gzs
