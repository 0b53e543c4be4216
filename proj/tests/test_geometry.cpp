#include "doctest.h"

#include <cmath>

#include "conegraph/geometry.hpp"
#include "oracles.hpp"

using namespace conegraph;

namespace {

Point P(long long x, long long y) { return exact_point(x, y); }

// Independent exact boundary-side checks for m = 3 (the cone boundaries sit
// at azimuths 60/180/300, so sides reduce to signs of dx, dx - sqrt3*dy and
// dx + sqrt3*dy, evaluated here in Q(sqrt3) via Scalar directly).
int sign_dx_minus_sqrt3_dy(long long dx, long long dy) {
  return Scalar::exact(dx, -dy).sign();
}
int sign_dx_plus_sqrt3_dy(long long dx, long long dy) {
  return Scalar::exact(dx, dy).sign();
}

}  // namespace

TEST_CASE("cone_index m=3 examples") {
  CHECK(cone_index(P(0, 0), P(0, 5), 3) == 0);
  CHECK(cone_index(P(0, 0), P(10, 1), 3) == 1);
  // Exact sign oracle for the derived value: q is clockwise of the azimuth-60
  // boundary (dx - sqrt3 dy > 0) and strictly right of the -y ray (dx > 0).
  CHECK(sign_dx_minus_sqrt3_dy(10, 1) > 0);
  CHECK(sign_dx_plus_sqrt3_dy(10, 1) > 0);
  CHECK_THROWS_AS((void)cone_index(P(0, 0), P(0, -1), 3), Error);
  try {
    (void)cone_index(P(0, 0), P(0, -1), 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
  CHECK_THROWS_AS((void)cone_index(P(0, 0), P(0, 0), 3), Error);
  // Lenient mode owns the -y boundary ray by cone 2 (half-open clockwise).
  CHECK(cone_index(P(0, 0), P(0, -1), 3, Policy::Lenient) == 2);
  CHECK(cone_index(P(0, 0), P(0, 5), 3, Policy::Lenient) == 0);
}

TEST_CASE("cone_index agrees with the azimuth oracle") {
  oracle::SplitMix rng(7);
  const int ms[] = {2, 3, 4, 6, 12};
  for (int t = 0; t < 200000; ++t) {
    int m = ms[rng.below(5)];
    long long qx = rng.range(-1000, 1000);
    long long qy = rng.range(-1000, 1000);
    if (qx == 0 && qy == 0) continue;
    auto expect = oracle::cone_index(0, 0, qx, qy, m, 1e-7);
    if (!expect) continue;  // too close to a boundary for the oracle
    CHECK(cone_index(P(0, 0), P(qx, qy), m) == *expect);
  }
}

TEST_CASE("opposite directions never share cone 0 (m=3)") {
  oracle::SplitMix rng(99);
  for (int t = 0; t < 1000000; ++t) {
    long long dx = rng.range(-100000, 100000);
    long long dy = rng.range(-100000, 100000);
    if (dx == 0 && dy == 0) continue;
    auto fwd = oracle::cone_index(0, 0, dx, dy, 3, 1e-7);
    auto rev = oracle::cone_index(0, 0, -dx, -dy, 3, 1e-7);
    if (!fwd || !rev) continue;
    int got_fwd = cone_index(P(0, 0), P(dx, dy), 3);
    int got_rev = cone_index(P(dx, dy), P(0, 0), 3);
    REQUIRE(got_fwd == *fwd);
    REQUIRE(got_rev == *rev);
    REQUIRE(!(got_fwd == 0 && got_rev == 0));
  }
}

TEST_CASE("cone tiling: every non-boundary direction has exactly one cone") {
  oracle::SplitMix rng(13);
  for (int m = 3; m <= 12; ++m) {
    for (int t = 0; t < 2000; ++t) {
      long long qx = rng.range(-500, 500);
      long long qy = rng.range(-500, 500);
      if (qx == 0 && qy == 0) continue;
      try {
        int idx = cone_index(P(0, 0), P(qx, qy), m);
        int hits = 0;
        for (int i = 0; i < m; ++i) {
          if (point_in_cone(ConeSpec{P(0, 0), i, m}, P(qx, qy))) ++hits;
        }
        CHECK(hits == 1);
        CHECK(point_in_cone(ConeSpec{P(0, 0), idx, m}, P(qx, qy)));
      } catch (const Error&) {
        continue;  // boundary or, for float-mode m, ambiguous direction
      }
    }
  }
}

TEST_CASE("predicates are translation and scale invariant") {
  oracle::SplitMix rng(4242);
  for (int t = 0; t < 3000; ++t) {
    long long s = rng.range(1, 50);
    long long tx = rng.range(-100000, 100000), ty = rng.range(-100000, 100000);
    auto mapped = [&](long long x, long long y) {
      return P(s * x + tx, s * y + ty);
    };
    auto run = [&](auto f) {
      try {
        return std::optional<int>(f());
      } catch (const Error&) {
        return std::optional<int>();
      }
    };

    long long qx = rng.range(-200, 200), qy = rng.range(-200, 200);
    if (qx == 0 && qy == 0) continue;
    int m = (t % 2) ? 3 : 4;
    auto base = run([&] { return cone_index(P(0, 0), P(qx, qy), m); });
    auto moved =
        run([&] { return cone_index(mapped(0, 0), mapped(qx, qy), m); });
    CHECK(base.has_value() == moved.has_value());
    if (base && moved) CHECK(*base == *moved);

    // Projection and euclidean orderings, both comparison predicates.
    long long rx = rng.range(-200, 200), ry = rng.range(-200, 200);
    int cone = static_cast<int>(rng.below(3));
    CHECK(compare_projection(P(qx, qy), P(rx, ry), cone, 3) ==
          compare_projection(mapped(qx, qy), mapped(rx, ry), cone, 3));
    int base_euclid = (euclidean_distance_sq(P(0, 0), P(qx, qy)) -
                       euclidean_distance_sq(P(0, 0), P(rx, ry)))
                          .sign();
    int moved_euclid =
        (euclidean_distance_sq(mapped(0, 0), mapped(qx, qy)) -
         euclidean_distance_sq(mapped(0, 0), mapped(rx, ry)))
            .sign();
    CHECK(base_euclid == moved_euclid);

    long long ax = rng.range(-200, 200), ay = rng.range(-200, 200);
    long long bx = rng.range(-200, 200), by = rng.range(-200, 200);
    if ((ax == bx && ay == by) || (qx == rx && qy == ry)) continue;
    auto cross_base = run([&] {
      return segments_cross(Segment{P(ax, ay), P(bx, by)},
                            Segment{P(qx, qy), P(rx, ry)})
                 ? 1
                 : 0;
    });
    auto cross_moved = run([&] {
      return segments_cross(Segment{mapped(ax, ay), mapped(bx, by)},
                            Segment{mapped(qx, qy), mapped(rx, ry)})
                 ? 1
                 : 0;
    });
    CHECK(cross_base.has_value() == cross_moved.has_value());
    if (cross_base && cross_moved) CHECK(*cross_base == *cross_moved);

    if (!(ax == 0 && ay == 0) && !(bx == 0 && by == 0)) {
      bool wedge_base = segment_crosses_cone(
          Segment{P(ax, ay), P(bx, by)}, ConeSpec{P(0, 0), cone, 3});
      bool wedge_moved =
          segment_crosses_cone(Segment{mapped(ax, ay), mapped(bx, by)},
                               ConeSpec{mapped(0, 0), cone, 3});
      CHECK(wedge_base == wedge_moved);
    }
  }
}

TEST_CASE("projected_distance examples") {
  // Cone 0 bisector is +y: the projection is just the y offset.
  CHECK(projected_distance(P(0, 0), P(3, 4), 0, 3) == Scalar::from_int(4));
  // (10,1) in cone 1: dot with (sqrt3/2, -1/2) = 5*sqrt3 - 1/2.
  Scalar d = projected_distance(P(0, 0), P(10, 1), 1, 3);
  CHECK(d == Scalar::exact(Rational(-1, 2), 5));
  CHECK(std::abs(d.to_double() - 8.16025403784) < 1e-9);
  CHECK(std::abs(d.to_double() - oracle::projection(0, 0, 10, 1, 1, 3)) < 1e-9);
  // Limit behavior: a tiny positive y offset projects to itself.
  Point eps_pt = exact_point(Rational(0), Rational(1, 1000000));
  Scalar tiny = projected_distance(P(0, 0), eps_pt, 0, 3);
  CHECK(tiny == Scalar::exact(Rational(1, 1000000)));
  CHECK_THROWS_AS((void)projected_distance(P(0, 0), P(10, 1), 0, 3), Error);
  try {
    (void)projected_distance(P(0, 0), P(10, 1), 0, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongCone);
  }
}

TEST_CASE("projected_distance ordering is exact for m=4 and m=12") {
  // Unit bisectors of m in {4,12} leave Q(sqrt3); the public value comes
  // back as a float, but ordering via compare_projection stays exact.
  oracle::SplitMix rng(555);
  for (int t = 0; t < 20000; ++t) {
    int m = (t % 2) ? 4 : 12;
    long long px = rng.range(-1000, 1000), py = rng.range(-1000, 1000);
    long long qx = rng.range(-1000, 1000), qy = rng.range(-1000, 1000);
    int cone = static_cast<int>(rng.below(m));
    double a = oracle::projection(0, 0, px, py, cone, m);
    double b = oracle::projection(0, 0, qx, qy, cone, m);
    if (std::abs(a - b) < 1e-6) continue;
    int expect = a > b ? 1 : -1;
    CHECK(compare_projection(P(px, py), P(qx, qy), cone, m) == expect);
  }
}

TEST_CASE("euclidean_distance_sq examples") {
  CHECK(euclidean_distance_sq(P(0, 0), P(3, 4)) == Scalar::from_int(25));
  CHECK(euclidean_distance_sq(P(0, 0), P(0, 0)) == Scalar::from_int(0));
  CHECK(euclidean_distance_sq(P(0, 0), P(10, 1)) == Scalar::from_int(101));
}

TEST_CASE("segments_cross examples") {
  auto seg = [](long long ax, long long ay, long long bx, long long by) {
    return Segment{P(ax, ay), P(bx, by)};
  };
  CHECK(segments_cross(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK(!segments_cross(seg(0, 0, 1, 1), seg(1, 1, 2, 0)));  // shared endpoint
  CHECK(!segments_cross(seg(0, 0, 2, 0), seg(0, 1, 2, 1)));  // parallel
  // T-contact: an endpoint interior to the other segment is not a crossing.
  CHECK(!segments_cross(seg(0, 0, 4, 0), seg(2, 0, 2, 5)));
  CHECK_THROWS_AS((void)segments_cross(seg(0, 0, 4, 0), seg(1, 0, 3, 0)), Error);
  try {
    (void)segments_cross(seg(0, 0, 4, 0), seg(1, 0, 3, 0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overlap);
  }
  // Collinear but touching in one point only: no overlap, no crossing.
  CHECK(!segments_cross(seg(0, 0, 1, 1), seg(1, 1, 2, 2)));
  CHECK_THROWS_AS((void)segments_cross(seg(0, 0, 0, 0), seg(1, 1, 2, 2)), Error);
}

TEST_CASE("segment_crosses_cone examples") {
  ConeSpec c0{P(0, 0), 0, 3};
  CHECK(segment_crosses_cone(Segment{P(-1, 5), P(1, 5)}, c0));
  CHECK(!segment_crosses_cone(Segment{P(-1, -5), P(1, -5)}, c0));
  // Derived example: both endpoints azimuth-wise inside cone 1 / below.
  CHECK(!segment_crosses_cone(Segment{P(10, 1), P(6, -20)}, c0));
  auto sampled = oracle::segment_crosses_cone(10, 1, 6, -20, 0, 0, 0, 3);
  REQUIRE(sampled.has_value());
  CHECK(*sampled == false);
  // An endpoint strictly inside the cone counts as a crossing.
  CHECK(segment_crosses_cone(Segment{P(1, 30), P(40, 1)}, c0));
  // Passing exactly through the apex without entering the wedge.
  CHECK(!segment_crosses_cone(Segment{P(1, 0), P(-1, 0)}, c0));
  // Chord touching one boundary ray and crossing the other (cone 1).
  ConeSpec c1{P(0, 0), 1, 3};
  CHECK(segment_crosses_cone(Segment{P(0, -5), P(10, 20)}, c1));
  auto sampled2 = oracle::segment_crosses_cone(0, -5, 10, 20, 0, 0, 1, 3);
  REQUIRE(sampled2.has_value());
  CHECK(*sampled2 == true);
  CHECK_THROWS_AS(
      (void)segment_crosses_cone(Segment{P(0, 0), P(1, 1)}, c0), Error);
}

TEST_CASE("segment_crosses_cone agrees with the sampling oracle") {
  oracle::SplitMix rng(31337);
  int checked = 0;
  for (int t = 0; t < 4000; ++t) {
    long long ax = rng.range(-50, 50), ay = rng.range(-50, 50);
    long long bx = rng.range(-50, 50), by = rng.range(-50, 50);
    if ((ax == 0 && ay == 0) || (bx == 0 && by == 0)) continue;
    if (ax == bx && ay == by) continue;
    int i = static_cast<int>(rng.below(3));
    bool got = segment_crosses_cone(Segment{P(ax, ay), P(bx, by)},
                                    ConeSpec{P(0, 0), i, 3});
    auto expect =
        oracle::segment_crosses_cone(ax, ay, bx, by, 0, 0, i, 3, 40001, 1e-7);
    if (!expect) continue;
    // The sampling oracle can only prove "true" decisively; for "false" it
    // counts as evidence unless the crossing sliver is thinner than the
    // sampling step, so compare both ways but allow oracle-false/got-true
    // only when a boundary-adjacent sliver exists; re-sample finer then.
    if (*expect != got) {
      auto finer = oracle::segment_crosses_cone(ax, ay, bx, by, 0, 0, i, 3,
                                                400001, 1e-9);
      REQUIRE(finer.has_value());
      REQUIRE(*finer == got);
    }
    ++checked;
  }
  CHECK(checked > 3000);
}

TEST_CASE("arc enclosure witness checks") {
  CHECK(check_arc_enclosure(P(0, 0), P(3, 4), P(-1, 0), 1000));
  CHECK(check_arc_enclosure(P(0, 0), P(3, 4), P(0, 0), 3));   // C = D
  CHECK(check_arc_enclosure(P(0, 0), P(3, 4), P(2, 0), 1000));  // left arc
  CHECK_THROWS_AS((void)check_arc_enclosure(P(0, 0), P(3, 4), P(0, 5), 100),
                  Error);  // vertical line
  CHECK_THROWS_AS((void)check_arc_enclosure(P(0, 0), P(3, 4), P(1, 1), 2),
                  Error);  // too few samples
  // Demonstrate the check is not vacuous: the arc on the far side of D
  // (through its left line intersection) leaves circle C.
  double r_d = std::hypot(3.0 - (-1.0), 4.0 - 0.0);  // |xv| for x=(-1,0)
  double far_x = -1.0 - r_d;                          // left intersection
  CHECK(std::hypot(far_x, 0.0) > 5.0 + 1e-9);
}

TEST_CASE("random arc enclosure property") {
  oracle::SplitMix rng(90210);
  for (int t = 0; t < 2000; ++t) {
    long long ux = rng.range(-1000, 1000), uy = rng.range(-1000, 1000);
    long long vx = rng.range(-1000, 1000), vy = rng.range(-1000, 1000);
    long long xx = rng.range(-1000, 1000), xy = rng.range(-1000, 1000);
    if (vx == ux && vy == uy) continue;
    if (xx == ux) continue;  // vertical line through u and x
    CHECK(check_arc_enclosure(P(ux, uy), P(vx, vy), P(xx, xy), 200));
  }
}

TEST_CASE("low-level sign predicates") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) > 0);
  CHECK(orientation(P(0, 0), P(1, 0), P(0, -1)) < 0);
  CHECK(orientation(P(0, 0), P(2, 2), P(1, 1)) == 0);
  CHECK(compare_projection(P(0, 5), P(0, 3), 0, 3) > 0);
  CHECK(side_of_class_axis(P(0, 0), 0, 3, P(-3, 10)) != 0);
  CHECK(side_of_cone_boundary(ConeSpec{P(0, 0), 1, 3}, BoundarySide::Right,
                              P(0, -7)) == 0);
}

TEST_CASE("general position validation") {
  auto ps = PointSet::from_integers({{0, 0}, {10, 1}, {6, -20}});
  const int m3[] = {3};
  CHECK(validate_general_position(ps, m3).empty());

  auto vertical = PointSet::from_integers({{0, 0}, {0, 7}});
  auto v1 = validate_general_position(vertical, m3);
  REQUIRE(!v1.empty());
  CHECK(v1.front().kind == PositionViolation::Kind::BoundaryParallel);

  auto horizontal = PointSet::from_integers({{0, 0}, {7, 0}});
  auto v2 = validate_general_position(horizontal, m3);
  REQUIRE(!v2.empty());
  CHECK(v2.front().kind == PositionViolation::Kind::ProjectionTie);

  auto yao_tie = PointSet::from_integers({{0, 0}, {3, 4}, {4, 3}});
  CHECK(validate_general_position(yao_tie, m3).empty());
  auto v3 = validate_general_position(yao_tie, m3, /*check_yao_ties=*/true);
  REQUIRE(!v3.empty());
  CHECK(v3.front().kind == PositionViolation::Kind::YaoDistanceTie);
  CHECK(v3.front().apex == 0);

  CHECK_THROWS_AS(require_general_position(vertical, m3), Error);
  CHECK_THROWS_AS(
      (void)PointSet::from_integers({{1, 2}, {1, 2}}), Error);
}

TEST_CASE("float and exact cone predicates agree away from boundaries") {
  oracle::SplitMix rng(777);
  std::vector<std::pair<long long, long long>> coords;
  for (int i = 0; i < 40; ++i)
    coords.emplace_back(rng.range(-1000000, 1000000), rng.range(-1000000, 1000000));
  auto exact = PointSet::from_integers(coords);
  auto flt = exact.as_float(1e-6);
  for (int t = 0; t < 5000; ++t) {
    int p = static_cast<int>(rng.below(40));
    int q = static_cast<int>(rng.below(40));
    if (p == q) continue;
    int ref;
    try {
      ref = cone_index(exact[p], exact[q], 3);
    } catch (const Error&) {
      continue;
    }
    try {
      int got = cone_index(flt[p], flt[q], 3);
      CHECK(got == ref);
    } catch (const Error& e) {
      // Ambiguity is allowed; disagreement is not.
      CHECK(e.code() == ErrorCode::Degenerate);
    }
  }
}
