#include "conegraph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "predicates.hpp"

namespace conegraph {

using detail::ConeHit;
using detail::ConeTable;
using detail::KernelKind;
using detail::QF;
using detail::QI;
using detail::QR;
using detail::SignEval;
using detail::V2;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool same_coords(const Point& a, const Point& b) {
  if (a.x.is_exact() != b.x.is_exact()) return false;
  if (a.x.is_exact())
    return a.x.exact_rep().a == b.x.exact_rep().a &&
           a.x.exact_rep().b == b.x.exact_rep().b &&
           a.y.exact_rep().a == b.y.exact_rep().a &&
           a.y.exact_rep().b == b.y.exact_rep().b;
  return a.x.to_double() == b.x.to_double() &&
         a.y.to_double() == b.y.to_double();
}

template <class Q>
const ConeTable<Q>& table_for(int m, double /*qf_eps*/);

template <>
const ConeTable<QI>& table_for<QI>(int m, double) {
  return detail::cone_table_qi(m);
}
template <>
const ConeTable<QR>& table_for<QR>(int m, double) {
  return detail::cone_table_qr(m);
}

thread_local ConeTable<QF> qf_table_scratch;

template <>
const ConeTable<QF>& table_for<QF>(int m, double) {
  if (qf_table_scratch.m != m) qf_table_scratch = detail::cone_table_qf(m);
  return qf_table_scratch;
}

template <class Q>
int cone_index_k(const Point& apex, const Point& q, int m, Policy policy,
                 double eps) {
  const ConeTable<Q>& tbl = table_for<Q>(m, eps);
  SignEval<Q> ev{policy};
  V2<Q> d = detail::load_v2<Q>(q, eps) - detail::load_v2<Q>(apex, eps);
  return detail::cone_index_t(d, tbl, policy, ev).index;
}

}  // namespace

bool exact_capable(int m) { return detail::exact_capable_m(m); }

int cone_index(const Point& apex, const Point& q, int m, Policy policy) {
  if (m < 2) fail(ErrorCode::PreconditionUnmet, "m must be at least 2");
  if (same_coords(apex, q))
    fail(ErrorCode::IdenticalPoints, "cone_index needs q != apex");
  double eps = detail::float_fallback_eps({&apex, &q});
  switch (detail::pick_kernel({&apex, &q}, m)) {
    case KernelKind::Int:
      return cone_index_k<QI>(apex, q, m, policy, eps);
    case KernelKind::Rat:
      return cone_index_k<QR>(apex, q, m, policy, eps);
    case KernelKind::Flt:
      try {
        return cone_index_k<QF>(apex, q, m, policy, eps);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::AmbiguousSign)
          fail(ErrorCode::Degenerate,
               std::string("direction within tolerance of a cone boundary (") +
                   e.what() + ")");
        throw;
      }
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

Scalar projected_distance(const Point& apex, const Point& q, int cone, int m) {
  if (cone < 0 || cone >= m) fail(ErrorCode::PreconditionUnmet, "bad cone index");
  int actual = cone_index(apex, q, m, Policy::Strict);
  if (actual != cone)
    fail(ErrorCode::WrongCone, "point lies in cone " + std::to_string(actual) +
                                   ", not " + std::to_string(cone));
  if (apex.x.is_exact() && exact_capable(m)) {
    const detail::RatConeTable& rat = detail::rat_cone_table(m);
    if (rat.unit_ok) {
      QR dx = detail::qr_of(q.x) - detail::qr_of(apex.x);
      QR dy = detail::qr_of(q.y) - detail::qr_of(apex.y);
      const detail::RatDir& u = rat.bis_unit[cone];
      QR v = QR(u.ax, u.bx) * dx + QR(u.ay, u.by) * dy;
      return Scalar::exact(v.a, v.b);
    }
  }
  // Unit bisector not representable (m in {4, 12}) or float input.
  double w = 2.0 * kPi / m;
  double az = cone * w - (m % 2 == 1 ? w / 2 : 0.0) + w / 2;
  double dx = q.x.to_double() - apex.x.to_double();
  double dy = q.y.to_double() - apex.y.to_double();
  double value = dx * std::sin(az) + dy * std::cos(az);
  return Scalar::approx(value, detail::float_fallback_eps({&apex, &q}));
}

Scalar euclidean_distance_sq(const Point& p, const Point& q) {
  if (p.x.is_exact() && q.x.is_exact()) {
    QR dx = detail::qr_of(q.x) - detail::qr_of(p.x);
    QR dy = detail::qr_of(q.y) - detail::qr_of(p.y);
    QR v = dx * dx + dy * dy;
    return Scalar::exact(v.a, v.b);
  }
  double eps = detail::float_fallback_eps({&p, &q});
  V2<QF> d = detail::load_qf(q, eps) - detail::load_qf(p, eps);
  QF v = dot(d, d);
  return Scalar::approx(v.v, v.err);
}

namespace {

template <class Q>
bool segments_cross_k(const Segment& s1, const Segment& s2, double eps) {
  SignEval<Q> ev{Policy::Strict};
  return detail::segments_cross_t(
      detail::load_v2<Q>(s1.a, eps), detail::load_v2<Q>(s1.b, eps),
      detail::load_v2<Q>(s2.a, eps), detail::load_v2<Q>(s2.b, eps), ev);
}

template <class Q>
bool segment_crosses_cone_k(const Segment& s, const ConeSpec& c, double eps) {
  const ConeTable<Q>& tbl = table_for<Q>(c.m, eps);
  SignEval<Q> ev{Policy::Strict};
  return detail::segment_crosses_cone_t(
      detail::load_v2<Q>(s.a, eps), detail::load_v2<Q>(s.b, eps),
      detail::load_v2<Q>(c.apex, eps), tbl.left[c.index], tbl.right[c.index],
      ev);
}

template <class Q>
bool point_in_cone_k(const ConeSpec& c, const Point& q, double eps) {
  const ConeTable<Q>& tbl = table_for<Q>(c.m, eps);
  SignEval<Q> ev{Policy::Strict};
  V2<Q> d = detail::load_v2<Q>(q, eps) - detail::load_v2<Q>(c.apex, eps);
  return detail::wedge_contains_dir(tbl.left[c.index], tbl.right[c.index], d,
                                    ev);
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
  if (same_coords(s1.a, s1.b) || same_coords(s2.a, s2.b))
    fail(ErrorCode::IdenticalPoints, "zero-length segment");
  double eps = detail::float_fallback_eps({&s1.a, &s1.b, &s2.a, &s2.b});
  switch (detail::pick_kernel({&s1.a, &s1.b, &s2.a, &s2.b}, 0)) {
    case KernelKind::Int: return segments_cross_k<QI>(s1, s2, eps);
    case KernelKind::Rat: return segments_cross_k<QR>(s1, s2, eps);
    case KernelKind::Flt: return segments_cross_k<QF>(s1, s2, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

bool segment_crosses_cone(const Segment& s, const ConeSpec& cone) {
  if (cone.index < 0 || cone.index >= cone.m || cone.m < 2)
    fail(ErrorCode::PreconditionUnmet, "bad cone spec");
  if (same_coords(s.a, cone.apex) || same_coords(s.b, cone.apex))
    fail(ErrorCode::IdenticalPoints, "segment endpoint equals cone apex");
  double eps = detail::float_fallback_eps({&s.a, &s.b, &cone.apex});
  switch (detail::pick_kernel({&s.a, &s.b, &cone.apex}, cone.m)) {
    case KernelKind::Int: return segment_crosses_cone_k<QI>(s, cone, eps);
    case KernelKind::Rat: return segment_crosses_cone_k<QR>(s, cone, eps);
    case KernelKind::Flt: return segment_crosses_cone_k<QF>(s, cone, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

bool point_in_cone(const ConeSpec& cone, const Point& q) {
  if (cone.index < 0 || cone.index >= cone.m || cone.m < 2)
    fail(ErrorCode::PreconditionUnmet, "bad cone spec");
  if (same_coords(q, cone.apex)) return false;
  double eps = detail::float_fallback_eps({&q, &cone.apex});
  switch (detail::pick_kernel({&q, &cone.apex}, cone.m)) {
    case KernelKind::Int: return point_in_cone_k<QI>(cone, q, eps);
    case KernelKind::Rat: return point_in_cone_k<QR>(cone, q, eps);
    case KernelKind::Flt: return point_in_cone_k<QF>(cone, q, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

bool check_arc_enclosure(const Point& u, const Point& v, const Point& x,
                         int samples, double eps_rel) {
  if (samples < 3) fail(ErrorCode::PreconditionUnmet, "need at least 3 samples");
  if (same_coords(u, x)) return true;  // C = D, enclosure is non-strict
  if (same_coords(u, v))
    fail(ErrorCode::DegenerateGeometry, "circle C has radius zero");
  double ux = u.x.to_double(), uy = u.y.to_double();
  double vx = v.x.to_double(), vy = v.y.to_double();
  double xx = x.x.to_double(), xy = x.y.to_double();
  if (ux == xx) fail(ErrorCode::DegenerateGeometry, "line through u and x is vertical");

  double bx = xx - ux, by = xy - uy;
  double blen = std::hypot(bx, by);
  bx /= blen;
  by /= blen;
  if (bx < 0) { bx = -bx; by = -by; }  // orient b towards +x

  // z = reflection of v across line(u, x)
  double wx = vx - ux, wy = vy - uy;
  double t = wx * bx + wy * by;
  double zx = ux + 2 * t * bx - wx;
  double zy = uy + 2 * t * by - wy;

  double r_c = std::hypot(vx - ux, vy - uy);
  double r_d = std::hypot(vx - xx, vy - xy);
  double scale = std::max({1.0, r_c, r_d, std::abs(ux), std::abs(uy),
                           std::abs(xx), std::abs(xy)});
  double allow = r_c * (1.0 + eps_rel) + eps_rel * scale;
  if (r_d == 0.0) return true;  // v == x, the arc degenerates to a point

  bool x_left_of_u = xx < ux;
  // Reference intersection of D with line b: right one when x is left of u.
  double rx = x_left_of_u ? xx + r_d * bx : xx - r_d * bx;
  double ry = x_left_of_u ? xy + r_d * by : xy - r_d * by;

  double th_v = std::atan2(vy - xy, vx - xx);
  double th_z = std::atan2(zy - xy, zx - xx);
  double th_r = std::atan2(ry - xy, rx - xx);
  auto norm = [](double a) {
    while (a < 0) a += 2 * kPi;
    while (a >= 2 * kPi) a -= 2 * kPi;
    return a;
  };
  double ccw_vz = norm(th_z - th_v);
  double ccw_vr = norm(th_r - th_v);
  bool go_ccw = ccw_vr <= ccw_vz;
  double span = go_ccw ? ccw_vz : 2 * kPi - ccw_vz;

  for (int k = 0; k < samples; ++k) {
    double f = samples == 1 ? 0.0 : static_cast<double>(k) / (samples - 1);
    double th = go_ccw ? th_v + f * span : th_v - f * span;
    double px = xx + r_d * std::cos(th);
    double py = xy + r_d * std::sin(th);
    if (std::hypot(px - ux, py - uy) > allow) return false;
  }
  return true;
}

namespace {

template <class Q>
int sign_k(const Point& a, const Point& b, const Point& c, double eps) {
  SignEval<Q> ev{Policy::Strict};
  return ev(detail::orient_val(detail::load_v2<Q>(a, eps),
                               detail::load_v2<Q>(b, eps),
                               detail::load_v2<Q>(c, eps)));
}

template <class Q>
int cross_with_dir_k(const V2<Q>& dir, const Point& origin, const Point& q,
                     double eps) {
  SignEval<Q> ev{Policy::Strict};
  V2<Q> d = detail::load_v2<Q>(q, eps) - detail::load_v2<Q>(origin, eps);
  return ev(cross(dir, d));
}

template <class Q>
int dot_with_dir_k(const V2<Q>& dir, const Point& p, const Point& q,
                   double eps) {
  SignEval<Q> ev{Policy::Strict};
  V2<Q> d = detail::load_v2<Q>(p, eps) - detail::load_v2<Q>(q, eps);
  return ev(dot(dir, d));
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  double eps = detail::float_fallback_eps({&a, &b, &c});
  switch (detail::pick_kernel({&a, &b, &c}, 0)) {
    case KernelKind::Int: return sign_k<QI>(a, b, c, eps);
    case KernelKind::Rat: return sign_k<QR>(a, b, c, eps);
    case KernelKind::Flt: return sign_k<QF>(a, b, c, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

int compare_projection(const Point& p, const Point& q, int cone, int m) {
  if (cone < 0 || cone >= m) fail(ErrorCode::PreconditionUnmet, "bad cone index");
  double eps = detail::float_fallback_eps({&p, &q});
  switch (detail::pick_kernel({&p, &q}, m)) {
    case KernelKind::Int:
      return dot_with_dir_k<QI>(table_for<QI>(m, eps).bis_scaled[cone], p, q, eps);
    case KernelKind::Rat:
      return dot_with_dir_k<QR>(table_for<QR>(m, eps).bis_scaled[cone], p, q, eps);
    case KernelKind::Flt:
      return dot_with_dir_k<QF>(table_for<QF>(m, eps).bis_scaled[cone], p, q, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

int side_of_class_axis(const Point& origin, int cone, int m, const Point& q) {
  if (cone < 0 || cone >= m) fail(ErrorCode::PreconditionUnmet, "bad cone index");
  double eps = detail::float_fallback_eps({&origin, &q});
  switch (detail::pick_kernel({&origin, &q}, m)) {
    case KernelKind::Int:
      return cross_with_dir_k<QI>(table_for<QI>(m, eps).bis_scaled[cone], origin, q, eps);
    case KernelKind::Rat:
      return cross_with_dir_k<QR>(table_for<QR>(m, eps).bis_scaled[cone], origin, q, eps);
    case KernelKind::Flt:
      return cross_with_dir_k<QF>(table_for<QF>(m, eps).bis_scaled[cone], origin, q, eps);
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

int side_of_cone_boundary(const ConeSpec& cone, BoundarySide side,
                          const Point& q) {
  if (cone.index < 0 || cone.index >= cone.m)
    fail(ErrorCode::PreconditionUnmet, "bad cone spec");
  double eps = detail::float_fallback_eps({&cone.apex, &q});
  auto run = [&](auto tag) {
    using Q = decltype(tag);
    const ConeTable<Q>& tbl = table_for<Q>(cone.m, eps);
    const V2<Q>& dir = side == BoundarySide::Left ? tbl.left[cone.index]
                                                  : tbl.right[cone.index];
    return cross_with_dir_k<Q>(dir, cone.apex, q, eps);
  };
  switch (detail::pick_kernel({&cone.apex, &q}, cone.m)) {
    case KernelKind::Int: return run(QI{});
    case KernelKind::Rat: return run(QR{});
    case KernelKind::Flt: return run(QF{});
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

namespace {

/// Sign usable for tie detection: 0 both for exact zero and for a float
/// value inside its tolerance band.
template <class Q>
int tie_sign(const Q& q) {
  if constexpr (std::is_same_v<Q, QF>) {
    return detail::q_ambiguous(q) ? 0 : detail::q_sign_forced(q);
  } else {
    return q_sign(q);
  }
}

template <class Q>
void functional_ties(const PointSet& ps, const V2<Q>& dir, bool use_cross,
                     double eps, int m, int cone_class,
                     PositionViolation::Kind kind,
                     std::vector<PositionViolation>& out) {
  const int n = ps.size();
  std::vector<Q> val;
  val.reserve(n);
  for (int i = 0; i < n; ++i) {
    V2<Q> p = detail::load_v2<Q>(ps[i], eps);
    val.push_back(use_cross ? cross(dir, p) : dot(dir, p));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if constexpr (std::is_same_v<Q, QF>) {
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return val[a].v < val[b].v; });
  } else {
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return q_sign(val[a] - val[b]) < 0; });
  }
  for (int i = 1; i < n; ++i) {
    if (tie_sign(val[order[i]] - val[order[i - 1]]) == 0) {
      out.push_back(PositionViolation{kind, order[i - 1], order[i], -1, m,
                                      cone_class});
    }
  }
}

template <class Q>
void validate_m(const PointSet& ps, int m, double eps,
                std::vector<PositionViolation>& out) {
  const ConeTable<Q>& tbl = table_for<Q>(m, eps);
  for (int i = 0; i < m; ++i) {
    functional_ties<Q>(ps, tbl.left[i], /*use_cross=*/true, eps, m, i,
                       PositionViolation::Kind::BoundaryParallel, out);
    functional_ties<Q>(ps, tbl.bis_scaled[i], /*use_cross=*/false, eps, m, i,
                       PositionViolation::Kind::ProjectionTie, out);
  }
}

template <class Q>
void validate_yao_ties(const PointSet& ps, int m, double eps,
                       std::vector<PositionViolation>& out) {
  const ConeTable<Q>& tbl = table_for<Q>(m, eps);
  const int n = ps.size();
  std::vector<std::vector<std::pair<Q, int>>> buckets(m);
  for (int p = 0; p < n; ++p) {
    for (auto& b : buckets) b.clear();
    SignEval<Q> ev{Policy::Lenient};
    V2<Q> vp = detail::load_v2<Q>(ps[p], eps);
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      V2<Q> d = detail::load_v2<Q>(ps[q], eps) - vp;
      ConeHit hit = detail::cone_index_t(d, tbl, Policy::Lenient, ev);
      buckets[hit.index].emplace_back(dot(d, d), q);
    }
    for (int i = 0; i < m; ++i) {
      auto& b = buckets[i];
      if constexpr (std::is_same_v<Q, QF>) {
        std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
          return x.first.v < y.first.v;
        });
      } else {
        std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
          return q_sign(x.first - y.first) < 0;
        });
      }
      for (std::size_t k = 1; k < b.size(); ++k) {
        if (tie_sign(b[k].first - b[k - 1].first) == 0) {
          out.push_back(PositionViolation{
              PositionViolation::Kind::YaoDistanceTie, b[k - 1].second,
              b[k].second, p, m, i});
        }
      }
    }
  }
}

}  // namespace

std::vector<PositionViolation> validate_general_position(const PointSet& ps,
                                                         std::span<const int> ms,
                                                         bool check_yao_ties) {
  std::vector<PositionViolation> out;
  double eps = 1e-9 * std::max(1.0, ps.bbox_diagonal());
  for (int m : ms) {
    if (m < 2) fail(ErrorCode::PreconditionUnmet, "m must be at least 2");
    switch (detail::pick_kernel(ps, m)) {
      case KernelKind::Int: validate_m<QI>(ps, m, eps, out); break;
      case KernelKind::Rat: validate_m<QR>(ps, m, eps, out); break;
      case KernelKind::Flt: validate_m<QF>(ps, m, eps, out); break;
    }
    if (check_yao_ties) {
      switch (detail::pick_kernel(ps, m)) {
        case KernelKind::Int: validate_yao_ties<QI>(ps, m, eps, out); break;
        case KernelKind::Rat: validate_yao_ties<QR>(ps, m, eps, out); break;
        case KernelKind::Flt: validate_yao_ties<QF>(ps, m, eps, out); break;
      }
    }
  }
  return out;
}

void require_general_position(const PointSet& ps, std::span<const int> ms,
                              bool check_yao_ties) {
  auto violations = validate_general_position(ps, ms, check_yao_ties);
  if (violations.empty()) return;
  const auto& v = violations.front();
  const char* what = v.kind == PositionViolation::Kind::BoundaryParallel
                         ? "lie on a line parallel to a cone boundary"
                         : (v.kind == PositionViolation::Kind::ProjectionTie
                                ? "share a bisector projection"
                                : "are equidistant inside a shared cone");
  fail(ErrorCode::Degenerate, "points " + std::to_string(v.p) + " and " +
                                  std::to_string(v.q) + " " + what +
                                  " (m=" + std::to_string(v.m) + ")");
}

}  // namespace conegraph
