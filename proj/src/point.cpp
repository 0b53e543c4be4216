#include "conegraph/point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conegraph {

namespace {

// Coordinates up to 2^40 keep every degree-2 predicate within __int128.
constexpr std::int64_t kSmallIntLimit = std::int64_t(1) << 40;

void cache_small_int(Point& p) {
  p.small_int = false;
  if (!p.x.is_exact() || !p.y.is_exact()) return;
  const auto& ex = p.x.exact_rep();
  const auto& ey = p.y.exact_rep();
  if (ex.b != 0 || ey.b != 0) return;
  if (boost::multiprecision::denominator(ex.a) != 1) return;
  if (boost::multiprecision::denominator(ey.a) != 1) return;
  const BigInt& nx = boost::multiprecision::numerator(ex.a);
  const BigInt& ny = boost::multiprecision::numerator(ey.a);
  if (boost::multiprecision::abs(nx) >= kSmallIntLimit) return;
  if (boost::multiprecision::abs(ny) >= kSmallIntLimit) return;
  p.small_int = true;
  p.xi = static_cast<std::int64_t>(nx);
  p.yi = static_cast<std::int64_t>(ny);
}

}  // namespace

Point exact_point(long long x, long long y, int id) {
  Point p{Scalar::from_int(x), Scalar::from_int(y), id};
  cache_small_int(p);
  return p;
}

Point exact_point(const Rational& x, const Rational& y, int id) {
  Point p{Scalar::exact(x), Scalar::exact(y), id};
  cache_small_int(p);
  return p;
}

Point float_point(double x, double y, double eps, int id) {
  return Point{Scalar::approx(x, eps), Scalar::approx(y, eps), id};
}

PointSet PointSet::build(std::vector<Point> pts, CoordMode mode) {
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    pts[i].id = i;
    if (mode == CoordMode::Exact) cache_small_int(pts[i]);
  }
  // Duplicate coordinates are rejected in every mode.
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (mode == CoordMode::Exact) {
    auto key = [&](int i) {
      const auto& p = pts[i];
      return std::make_pair(p.x.exact_rep(), p.y.exact_rep());
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& pa = pts[a];
      const auto& pb = pts[b];
      if (pa.x.exact_rep().a != pb.x.exact_rep().a)
        return pa.x.exact_rep().a < pb.x.exact_rep().a;
      if (pa.x.exact_rep().b != pb.x.exact_rep().b)
        return pa.x.exact_rep().b < pb.x.exact_rep().b;
      if (pa.y.exact_rep().a != pb.y.exact_rep().a)
        return pa.y.exact_rep().a < pb.y.exact_rep().a;
      return pa.y.exact_rep().b < pb.y.exact_rep().b;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (pts[order[i - 1]].x == pts[order[i]].x &&
          pts[order[i - 1]].y == pts[order[i]].y) {
        fail(ErrorCode::DuplicatePoint,
             "points " + std::to_string(order[i - 1]) + " and " +
                 std::to_string(order[i]) + " coincide");
      }
    }
    (void)key;
  } else {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      double ax = pts[a].x.to_double(), bx = pts[b].x.to_double();
      if (ax != bx) return ax < bx;
      return pts[a].y.to_double() < pts[b].y.to_double();
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (pts[order[i - 1]].x.to_double() == pts[order[i]].x.to_double() &&
          pts[order[i - 1]].y.to_double() == pts[order[i]].y.to_double()) {
        fail(ErrorCode::DuplicatePoint,
             "points " + std::to_string(order[i - 1]) + " and " +
                 std::to_string(order[i]) + " coincide");
      }
    }
  }
  PointSet ps;
  ps.points_ = std::move(pts);
  ps.mode_ = mode;
  return ps;
}

PointSet PointSet::from_integers(
    const std::vector<std::pair<long long, long long>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) {
    pts.push_back(Point{Scalar::from_int(x), Scalar::from_int(y)});
  }
  return build(std::move(pts), CoordMode::Exact);
}

PointSet PointSet::from_rationals(
    const std::vector<std::pair<Rational, Rational>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) {
    pts.push_back(Point{Scalar::exact(x), Scalar::exact(y)});
  }
  return build(std::move(pts), CoordMode::Exact);
}

PointSet PointSet::from_doubles(
    const std::vector<std::pair<double, double>>& coords, double eps_rel) {
  for (const auto& [x, y] : coords) {
    if (!std::isfinite(x) || !std::isfinite(y))
      fail(ErrorCode::PreconditionUnmet, "coordinates must be finite");
  }
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const auto& [x, y] : coords) {
    if (first) {
      lo_x = hi_x = x;
      lo_y = hi_y = y;
      first = false;
    } else {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  double diag = std::hypot(hi_x - lo_x, hi_y - lo_y);
  double eps = eps_rel * std::max(diag, 1e-300);
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) {
    pts.push_back(Point{Scalar::approx(x, eps), Scalar::approx(y, eps)});
  }
  return build(std::move(pts), CoordMode::Float);
}

PointSet PointSet::without(const std::vector<int>& ids) const {
  std::vector<bool> drop(points_.size(), false);
  for (int id : ids)
    if (id >= 0 && id < size()) drop[id] = true;
  std::vector<Point> pts;
  pts.reserve(points_.size());
  for (int i = 0; i < size(); ++i)
    if (!drop[i]) pts.push_back(points_[i]);
  return build(std::move(pts), mode_);
}

PointSet PointSet::as_float(double eps_rel) const {
  std::vector<std::pair<double, double>> coords;
  coords.reserve(points_.size());
  for (const auto& p : points_)
    coords.emplace_back(p.x.to_double(), p.y.to_double());
  return from_doubles(coords, eps_rel);
}

double PointSet::bbox_diagonal() const {
  if (points_.empty()) return 0.0;
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = hi_x;
  for (const auto& p : points_) {
    double x = p.x.to_double(), y = p.y.to_double();
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

}  // namespace conegraph
