#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string_view>
#include <vector>

#include "orchard/sign_function.hpp"

namespace orchard {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Parses "p" or "p/q" with optional sign on p; q must be positive digits.
/// Decimal points and exponents are rejected. Throws input_error.
Rational parse_rational(std::string_view token);

/// n > dim points in exact rational coordinates. Genericity is not checked
/// here; points_to_signfn checks it exhaustively.
class PointConfiguration {
 public:
  PointConfiguration(int dim, std::vector<Point> points);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const noexcept { return points_; }
  /// 1-based.
  const Point& point(int i) const { return points_.at(static_cast<std::size_t>(i - 1)); }

 private:
  int dim_;
  std::vector<Point> points_;
};

/// Sign of det(x1 - x0, ..., xd - x0) for d+1 points of dimension d, by
/// fraction-free elimination after clearing denominators. 0 means the points
/// are affinely dependent.
int orientation_sign(std::span<const Point> points);

/// Sign of the determinant of a square integer matrix (row-major) by Bareiss
/// elimination.
int integer_determinant_sign(std::vector<std::vector<Integer>> m);

/// The antisymmetric orientation function on (dim+1)-subsets. Throws
/// degeneracy_error naming the first (colex) subset with zero orientation.
SignFunction points_to_signfn(const PointConfiguration& config);

}  // namespace orchard
