#pragma once

// Predicate formulas shared by all number kernels. Exact kernels report
// true zero signs (boundary contact), which the caller resolves according
// to the strict/lenient policy; the float kernel reports an ambiguous band
// and the SignEval wrapper either throws or forces a deterministic sign.

#include <type_traits>
#include <utility>

#include "kernels.hpp"

namespace conegraph::detail {

template <class Q>
struct SignEval {
  Policy policy = Policy::Strict;
  bool perturbed = false;
  int operator()(const Q& q) { return q_sign(q); }
};

template <>
struct SignEval<QF> {
  Policy policy = Policy::Strict;
  bool perturbed = false;
  int operator()(const QF& q) {
    if (q_ambiguous(q)) {
      if (policy == Policy::Strict) return q_sign(q);  // throws AmbiguousSign
      perturbed = true;
      return q_sign_forced(q);
    }
    return q_sign_forced(q);
  }
};

template <class Q>
V2<Q> load_v2(const Point& p, double qf_eps) {
  if constexpr (std::is_same_v<Q, QI>) {
    (void)qf_eps;
    return load_qi(p);
  } else if constexpr (std::is_same_v<Q, QR>) {
    (void)qf_eps;
    return load_qr(p);
  } else {
    return load_qf(p, qf_eps);
  }
}

struct ConeHit {
  int index = -1;
  bool boundary = false;  // lenient half-open ownership was applied
};

/// Classifies direction d (nonzero) into the cone wedge that contains it.
/// Strict mode raises Degenerate on a boundary ray hit; lenient mode owns a
/// boundary ray by the cone it starts (cones are half-open clockwise).
template <class Q>
ConeHit cone_index_t(const V2<Q>& d, const ConeTable<Q>& tbl, Policy policy,
                     SignEval<Q>& ev) {
  for (int i = 0; i < tbl.m; ++i) {
    int sl = ev(cross(tbl.left[i], d));
    if (sl == 0) {
      if (ev(dot(tbl.left[i], d)) > 0) {
        if (policy == Policy::Strict)
          fail(ErrorCode::Degenerate, "point lies on a cone boundary ray");
        ev.perturbed = true;
        return {i, true};
      }
      continue;  // on the opposite ray; another wedge owns this direction
    }
    if (sl > 0) continue;
    int sr = ev(cross(tbl.right[i], d));
    if (sr > 0) return {i, false};
    // sr == 0 with positive dot is the next cone's left boundary.
  }
  fail(ErrorCode::Internal, "cone partition failed to classify a direction");
}

template <class Q>
Q orient_val(const V2<Q>& a, const V2<Q>& b, const V2<Q>& c) {
  return cross(b - a, c - a);
}

/// True iff the direction d from the apex points strictly inside the wedge.
template <class Q>
bool wedge_contains_dir(const V2<Q>& L, const V2<Q>& R, const V2<Q>& d,
                        SignEval<Q>& ev) {
  if (ev(cross(L, d)) >= 0) return false;
  return ev(cross(R, d)) > 0;
}

/// Proper crossing of open segments. Shared endpoints and T-contacts are
/// not crossings; collinear overlap of positive length throws Overlap.
template <class Q>
bool segments_cross_t(const V2<Q>& a, const V2<Q>& b, const V2<Q>& c,
                      const V2<Q>& d, SignEval<Q>& ev) {
  int o1 = ev(orient_val(a, b, c));
  int o2 = ev(orient_val(a, b, d));
  if (o1 == 0 && o2 == 0) {
    // Collinear configuration: compare parameter intervals along ab.
    V2<Q> e = b - a;
    Q t_b = dot(e, e);
    Q t_c = dot(e, c - a);
    Q t_d = dot(e, d - a);
    if (ev(t_c - t_d) > 0) std::swap(t_c, t_d);
    Q lo = ev(t_c) > 0 ? t_c : Q{};
    Q hi = ev(t_d - t_b) < 0 ? t_d : t_b;
    int len = ev(hi - lo);
    if (len > 0)
      fail(ErrorCode::Overlap, "collinear segments overlap in a segment");
    return false;
  }
  int o3 = ev(orient_val(c, d, a));
  int o4 = ev(orient_val(c, d, b));
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  return o1 != o2 && o3 != o4;
}

/// Does the closed segment AB meet the open wedge interior? An endpoint
/// strictly inside counts; boundary-only contact does not.
template <class Q>
bool segment_crosses_cone_t(const V2<Q>& a, const V2<Q>& b,
                            const V2<Q>& apex, const V2<Q>& L,
                            const V2<Q>& R, SignEval<Q>& ev) {
  V2<Q> da = a - apex;
  V2<Q> db = b - apex;
  if (wedge_contains_dir(L, R, da, ev)) return true;
  if (wedge_contains_dir(L, R, db, ev)) return true;
  // Segment through the apex: both sides leave along directions already
  // known to be outside the wedge, so only boundary contact remains.
  if (ev(orient_val(a, b, apex)) == 0 && ev(dot(da, db)) < 0) return false;

  V2<Q> e = b - a;
  auto hits_ray = [&](const V2<Q>& dir) {
    int c1 = ev(cross(dir, da));
    int c2 = ev(cross(dir, db));
    if (c1 == 0 && c2 == 0) return ev(dot(dir, da)) > 0;  // collinear side
    if (c1 == 0) return ev(dot(dir, da)) > 0;
    if (c2 == 0) return ev(dot(dir, db)) > 0;
    if (c1 == c2) return false;
    // The segment crosses the ray's line once; the hit parameter along the
    // ray has sign cross(e, da) * cross(e, dir).
    return ev(cross(e, da)) * ev(cross(e, dir)) > 0;
  };
  // With both endpoints outside, the segment meets the open wedge exactly
  // when it hits both boundary rays (at two distinct points).
  return hits_ray(L) && hits_ray(R);
}

}  // namespace conegraph::detail
