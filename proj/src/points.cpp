#include "orchard/points.hpp"

#include <cctype>
#include <string>

#include "orchard/combinatorics.hpp"
#include "orchard/errors.hpp"

namespace orchard {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string original(token);
  const auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : token.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw input_error("'" + original + "' is not an exact rational (expected p or p/q)");
  Integer p{std::string(num)};
  if (negative) p = -p;
  if (slash == std::string_view::npos) return Rational(p);
  Integer q{std::string(den)};
  if (q == 0) throw input_error("'" + original + "' has a zero denominator");
  return Rational(p, q);
}

PointConfiguration::PointConfiguration(int dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ < 1) throw input_error("dimension must be at least 1");
  if (static_cast<int>(points_.size()) <= dim_)
    throw input_error("need more points (" + std::to_string(points_.size()) +
                      ") than the dimension (" + std::to_string(dim_) + ")");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (static_cast<int>(points_[i].size()) != dim_)
      throw input_error("point " + std::to_string(i + 1) + " has " +
                        std::to_string(points_[i].size()) + " coordinates, expected " +
                        std::to_string(dim_));
}

int integer_determinant_sign(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw input_error("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  const auto& last = m[n - 1][n - 1];
  if (last == 0) return 0;
  return last > 0 ? sign : -sign;
}

int orientation_sign(std::span<const Point> points) {
  if (points.empty()) throw input_error("orientation needs d+1 points");
  const std::size_t d = points.size() - 1;
  for (const auto& p : points)
    if (p.size() != d)
      throw input_error("orientation needs d+1 points of dimension d (got " +
                        std::to_string(points.size()) + " points of dimension " +
                        std::to_string(p.size()) + ")");
  std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
  for (std::size_t i = 0; i < d; ++i) {
    // Row i is x_{i+1} - x_0, scaled by the positive product of its
    // denominators; positive row scaling keeps the sign.
    std::vector<Rational> diff(d);
    Integer scale = 1;
    for (std::size_t j = 0; j < d; ++j) {
      diff[j] = points[i + 1][j] - points[0][j];
      scale *= denominator(diff[j]);
    }
    for (std::size_t j = 0; j < d; ++j)
      m[i][j] = numerator(diff[j]) * (scale / denominator(diff[j]));
  }
  return integer_determinant_sign(std::move(m));
}

SignFunction points_to_signfn(const PointConfiguration& config) {
  const int n = config.size();
  const int arity = config.dim() + 1;
  std::vector<std::int8_t> signs;
  signs.reserve(binomial(n, arity));
  std::vector<Point> tuple(static_cast<std::size_t>(arity));
  for (const auto& s : enumerate_subsets(n, arity)) {
    for (int i = 0; i < arity; ++i) tuple[i] = config.point(s.elements()[i]);
    const int sign = orientation_sign(tuple);
    if (sign == 0)
      throw degeneracy_error(s.elements(),
                             "points " + s.to_string() + " are affinely dependent");
    signs.push_back(static_cast<std::int8_t>(sign));
  }
  return SignFunction(n, arity, SymmetryKind::Antisymmetric, std::move(signs));
}

}  // namespace orchard
