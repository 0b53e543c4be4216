#include "doctest.h"

#include <cmath>

#include "conegraph/analysis.hpp"
#include "conegraph/harness.hpp"
#include "oracles.hpp"

using namespace conegraph;

namespace {

ConeGraph fig2_graph() {
  return build(PointSet::from_integers({{0, 0}, {10, 1}, {6, -20}}), 3,
               Flavor::Theta);
}

}  // namespace

TEST_CASE("i-paths walk to sinks") {
  auto g = fig2_graph();
  auto p0 = i_path(g, 2, 0);  // c's 0-path ends at a
  CHECK(p0.vertices == std::vector<int>{2, 0});
  CHECK(p0.ends_at_sink);
  CHECK(g.is_sink(p0.sink(), 0));
  auto p1 = i_path(g, 0, 1);  // a's 1-path ends at b
  CHECK(p1.vertices == std::vector<int>{0, 1});
  CHECK(g.is_sink(1, 1));
  auto trivial = i_path(g, 0, 0);  // a is itself a 0-sink
  CHECK(trivial.vertices == std::vector<int>{0});
}

TEST_CASE("i-path cycle detection flags corrupted graphs") {
  auto ps = PointSet::from_integers({{0, 0}, {10, 1}});
  auto g = ConeGraph::assemble(ps, 3, Flavor::Theta, Policy::Strict, false,
                               {{0, 1, 1}, {1, 0, 1}});
  CHECK_THROWS_AS((void)i_path(g, 0, 1), Error);
  try {
    (void)i_path(g, 0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CycleDetected);
  }
}

TEST_CASE("sink report matches the cycling configuration") {
  auto g = fig2_graph();
  auto report = sinks(g);
  CHECK(report.by_class[0] == std::vector<int>{0, 1});
  CHECK(report.by_class[1] == std::vector<int>{1, 2});
  CHECK(report.by_class[2] == std::vector<int>{0, 2});

  auto single = build(PointSet::from_integers({{0, 0}}), 3, Flavor::Theta);
  auto sr = sinks(single);
  for (int i = 0; i < 3; ++i) CHECK(sr.by_class[i] == std::vector<int>{0});

  // Every class has a sink overall, and within every component.
  GenSpec spec;
  spec.n_min = 1;
  spec.n_max = 48;
  for (int t = 0; t < 25; ++t) {
    spec.seed = 4000 + t;
    auto random_g = build(generate(spec), 3, Flavor::Theta);
    auto rep = sinks(random_g);
    for (int i = 0; i < 3; ++i) CHECK(!rep.by_class[i].empty());
    auto comps = connected_components(random_g);
    for (int c = 0; c < comps.count; ++c) {
      for (int i = 0; i < 3; ++i) {
        bool has_sink = false;
        for (int s : rep.by_class[i])
          if (comps.component_of[s] == c) has_sink = true;
        CHECK(has_sink);
      }
    }
  }
}

TEST_CASE("audits are clean on the cycling configuration") {
  auto g = fig2_graph();
  CHECK(audit_i_edge_crossings(g).clean);
  CHECK(audit_empty_cone_crossings(g).clean);
}

TEST_CASE("audits expose planted violations with recheckable witnesses") {
  // Two 0-edges that cross at (1/2, 5).
  auto ps = PointSet::from_integers({{0, 0}, {1, 10}, {5, 1}, {-4, 9}});
  auto g = ConeGraph::assemble(ps, 3, Flavor::Theta, Policy::Strict, false,
                               {{0, 1, 0}, {2, 3, 0}});
  auto report = audit_i_edge_crossings(g);
  REQUIRE(!report.clean);
  REQUIRE(report.crossings.size() == 1);
  const auto& w = report.crossings.front();
  CHECK(segments_cross(
      Segment{ps[w.first.source], ps[w.first.target]},
      Segment{ps[w.second.source], ps[w.second.target]}));

  // An edge sailing through the empty upward cone of point 0.
  auto ps2 = PointSet::from_integers({{0, 0}, {-5, 3}, {5, 4}});
  auto g2 = ConeGraph::assemble(ps2, 3, Flavor::Theta, Policy::Strict, false,
                                {{1, 2, 1}});
  auto report2 = audit_empty_cone_crossings(g2);
  REQUIRE(!report2.clean);
  bool found = false;
  for (const auto& cw : report2.cone_crossings) {
    if (cw.sink == 0 && cw.cone_class == 0) {
      found = true;
      CHECK(segment_crosses_cone(Segment{ps2[cw.edge_u], ps2[cw.edge_v]},
                                 ConeSpec{ps2[cw.sink], cw.cone_class, 3}));
    }
  }
  CHECK(found);
}

TEST_CASE("components and strongly connected components") {
  auto g = fig2_graph();
  CHECK(connected_components(g).count == 1);
  auto scc = strongly_connected_components(g);
  CHECK(scc.count == 2);
  CHECK(scc.same(0, 1));
  CHECK(!scc.same(0, 2));

  auto two = build(PointSet::from_integers({{0, 0}, {10, 1}}), 3, Flavor::Theta);
  CHECK(strongly_connected_components(two).count == 1);
  auto single = build(PointSet::from_integers({{4, 2}}), 3, Flavor::Theta);
  CHECK(strongly_connected_components(single).count == 1);
  CHECK(connected_components(single).count == 1);
}

TEST_CASE("barrier construction and classification") {
  auto two = build(PointSet::from_integers({{0, 0}, {10, 1}}), 3, Flavor::Theta);
  auto bar = barrier(two, 1, 0);  // 1-path a -> b, both endpoints sinks
  CHECK(bar.cone_class == 1);
  CHECK(bar.start_cap_class == 0);
  CHECK(bar.path.vertices == std::vector<int>{0, 1});
  CHECK(bar.classify(exact_point(-1000, 5)) == Barrier::Side::Left);
  CHECK(bar.classify(two, 0) == Barrier::Side::OnBarrier);
  CHECK(bar.classify(two, 1) == Barrier::Side::OnBarrier);
  CHECK(bar.classify(exact_point(0, 0)) == Barrier::Side::OnBarrier);
  // A query inside the start cap cone is on the separator geometry.
  CHECK_THROWS_AS((void)bar.classify(exact_point(0, 1000)), Error);

  // A vertex with no empty flanking cone cannot anchor a barrier.
  auto surrounded = build(
      PointSet::from_integers({{0, 0}, {1, 10}, {10, -6}, {-10, -7}}), 3,
      Flavor::Theta);
  for (int i = 0; i < 3; ++i) {
    CHECK(!surrounded.is_sink(0, i));
  }
  CHECK_THROWS_AS((void)barrier(surrounded, 0, 0), Error);
  try {
    (void)barrier(surrounded, 0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionUnmet);
  }
}

TEST_CASE("barrier separation on random sets") {
  GenSpec spec;
  spec.n_min = 2;
  spec.n_max = 32;
  for (int t = 0; t < 20; ++t) {
    spec.seed = 60000 + t;
    auto ps = generate(spec);
    auto g = build(ps, 3, Flavor::Theta);
    for (int i = 0; i < 3; ++i) {
      std::vector<IPath> paths;
      for (int v = 0; v < g.size(); ++v) paths.push_back(i_path(g, v, i));
      for (int start = 0; start < g.size(); ++start) {
        bool has_cap = false;
        for (int j = 0; j < 3; ++j)
          if (j != i && g.is_sink(start, j)) has_cap = true;
        if (!has_cap) continue;
        auto bar = barrier(g, i, start);
        std::vector<Barrier::Side> side(g.size());
        for (int v = 0; v < g.size(); ++v) side[v] = bar.classify(g, v);
        for (const auto& path : paths) {
          bool left = false, right = false;
          for (int v : path.vertices) {
            left = left || side[v] == Barrier::Side::Left;
            right = right || side[v] == Barrier::Side::Right;
          }
          REQUIRE(!(left && right));
        }
      }
    }
  }
}

TEST_CASE("sink triple verification") {
  auto g = fig2_graph();
  // a = b = c and unsorted inputs are rejected.
  CHECK_THROWS_AS((void)verify_sink_triple(g, 0, 0, 0), Error);
  CHECK_THROWS_AS((void)verify_sink_triple(g, 1, 0, 2), Error);
  // c=2 is not a 0-sink in fig2, so (i) fails.
  CHECK_THROWS_AS((void)verify_sink_triple(g, 0, 1, 2), Error);

  // Search fuzzed sets for qualifying triples and check the conclusion.
  GenSpec spec;
  spec.n_min = 8;
  spec.n_max = 48;
  int found = 0;
  for (int t = 0; t < 120 && found < 10; ++t) {
    spec.seed = 987000 + t;
    auto ps = generate(spec);
    auto rg = build(ps, 3, Flavor::Theta);
    auto rep = sinks(rg);
    const auto& zs = rep.by_class[0];
    for (int a : zs) {
      int a_prime = i_path(rg, a, 1).sink();
      int c = i_path(rg, a_prime, 0).sink();
      if (c == a || (rg.points()[c].x - rg.points()[a].x).sign() <= 0) continue;
      for (int b : zs) {
        if ((rg.points()[b].x - rg.points()[a].x).sign() <= 0) continue;
        if ((rg.points()[c].x - rg.points()[b].x).sign() <= 0) continue;
        CHECK(verify_sink_triple(rg, a, b, c));
        ++found;
      }
    }
  }
  CHECK(found >= 10);
}

TEST_CASE("stretch factor") {
  auto two = build(PointSet::from_integers({{0, 0}, {10, 1}}), 3, Flavor::Theta);
  CHECK(stretch_factor(two) == doctest::Approx(1.0));

  auto g = fig2_graph();
  double expect = (std::sqrt(101.0) + std::sqrt(436.0)) / std::sqrt(457.0);
  CHECK(stretch_factor(g) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(stretch_factor(g) >= 1.0);

  auto ps = PointSet::from_integers({{0, 0}, {10, 1}});
  auto disconnected =
      ConeGraph::assemble(ps, 3, Flavor::Theta, Policy::Strict, false, {});
  CHECK_THROWS_AS((void)stretch_factor(disconnected), Error);
  try {
    (void)stretch_factor(disconnected);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}
