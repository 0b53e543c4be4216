#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conegraph/scalar.hpp"

namespace conegraph {

enum class CoordMode { Exact, Float };

/// Strict mode rejects degenerate inputs; lenient mode resolves them by a
/// deterministic tie-break and marks downstream results as perturbed.
enum class Policy { Strict, Lenient };

struct Point {
  Scalar x;
  Scalar y;
  int id = -1;

  // Fast-lane cache: set when both coordinates are plain integers small
  // enough that every predicate fits in 128-bit arithmetic.
  bool small_int = false;
  std::int64_t xi = 0;
  std::int64_t yi = 0;
};

/// Standalone point constructors; they fill in the fast-path cache.
Point exact_point(long long x, long long y, int id = -1);
Point exact_point(const Rational& x, const Rational& y, int id = -1);
Point float_point(double x, double y, double eps, int id = -1);

/// An immutable, duplicate-free planar point set. Ids are positions.
class PointSet {
 public:
  PointSet() = default;

  static PointSet from_integers(
      const std::vector<std::pair<long long, long long>>& coords);
  static PointSet from_rationals(
      const std::vector<std::pair<Rational, Rational>>& coords);
  static PointSet from_doubles(
      const std::vector<std::pair<double, double>>& coords,
      double eps_rel = 1e-9);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int id) const { return points_[id]; }
  const std::vector<Point>& points() const { return points_; }
  CoordMode mode() const { return mode_; }

  /// Copy with the listed ids removed; remaining points are re-indexed in
  /// their original order.
  PointSet without(const std::vector<int>& ids) const;

  /// Float-mode copy with tolerance eps_rel * bounding-box diagonal.
  PointSet as_float(double eps_rel = 1e-9) const;

  double bbox_diagonal() const;

 private:
  static PointSet build(std::vector<Point> pts, CoordMode mode);

  std::vector<Point> points_;
  CoordMode mode_ = CoordMode::Exact;
};

}  // namespace conegraph
