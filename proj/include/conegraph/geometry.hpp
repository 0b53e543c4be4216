#pragma once

#include <span>
#include <vector>

#include "conegraph/point.hpp"

namespace conegraph {

struct Segment {
  Point a;
  Point b;
};

/// Cone index `index` of the m-cone partition with the given apex.
struct ConeSpec {
  Point apex;
  int index = 0;
  int m = 3;
};

/// True when the cone boundaries and bisector orderings of the m-partition
/// are exactly representable over Q(sqrt3): m in {2, 3, 4, 6, 12}.
bool exact_capable(int m);

/// Index i of the cone C_i^apex that strictly contains q. Strict mode
/// raises Degenerate when q sits on (or, in float mode, within tolerance
/// of) a boundary ray; lenient mode owns boundaries half-open clockwise.
int cone_index(const Point& apex, const Point& q, int m,
               Policy policy = Policy::Strict);

/// Length of the orthogonal projection of q - apex onto the unit bisector
/// of the stated cone. Exact when the unit bisector lies in Q(sqrt3)
/// (m in {2, 3, 6}); otherwise evaluated in floats. Orderings used by graph
/// construction are exact for every exact-capable m.
Scalar projected_distance(const Point& apex, const Point& q, int cone, int m);

Scalar euclidean_distance_sq(const Point& p, const Point& q);

/// Proper interior crossing of two open segments. Shared endpoints and
/// T-contacts are not crossings; collinear positive-length overlap throws
/// Overlap.
bool segments_cross(const Segment& s1, const Segment& s2);

/// Does the segment meet the open interior of the (unbounded) cone wedge?
/// An endpoint strictly inside counts as a crossing.
bool segment_crosses_cone(const Segment& s, const ConeSpec& cone);

/// Strict interior membership of q in the open cone wedge.
bool point_in_cone(const ConeSpec& cone, const Point& q);

/// Numeric witness check: samples the arc of circle D (center x, radius
/// |xv|) between v and its mirror image z across line(u, x) -- the right
/// arc when x is left of u, the left arc otherwise -- and verifies every
/// sample lies within distance |uv| (relative tolerance eps_rel) of u.
bool check_arc_enclosure(const Point& u, const Point& v, const Point& x,
                         int samples, double eps_rel = 1e-9);

// Low-level sign predicates used by the structure analysis and the tests.
int orientation(const Point& a, const Point& b, const Point& c);
int compare_projection(const Point& p, const Point& q, int cone, int m);
int side_of_class_axis(const Point& origin, int cone, int m, const Point& q);

enum class BoundarySide { Left, Right };
int side_of_cone_boundary(const ConeSpec& cone, BoundarySide side,
                          const Point& q);

struct PositionViolation {
  enum class Kind { BoundaryParallel, ProjectionTie, YaoDistanceTie };
  Kind kind;
  int p = -1;
  int q = -1;
  int apex = -1;  // YaoDistanceTie only
  int m = 0;
  int cone_class = -1;
};

/// Checks the general-position assumption for each requested m: no two
/// points aligned with a cone boundary, none sharing a bisector projection.
/// With check_yao_ties, exact Euclidean ties inside a shared cone are also
/// reported (they make the Yao closest-point choice ambiguous).
std::vector<PositionViolation> validate_general_position(
    const PointSet& ps, std::span<const int> ms, bool check_yao_ties = false);

void require_general_position(const PointSet& ps, std::span<const int> ms,
                              bool check_yao_ties = false);

}  // namespace conegraph
