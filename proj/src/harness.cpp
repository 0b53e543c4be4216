#include "conegraph/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conegraph/routing.hpp"

namespace conegraph {

namespace {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) {  // unbiased
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
};

std::uint64_t mix_seed(std::uint64_t base, int trial) {
  Rng r(base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
  return r.next();
}

using Coords = std::vector<std::pair<long long, long long>>;

Coords draw_uniform(Rng& rng, int n, long long b) {
  Coords out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.emplace_back(rng.range(-b, b), rng.range(-b, b));
  return out;
}

Coords draw_clustered(Rng& rng, int n, long long b, int clusters) {
  int k = std::max(1, std::min(clusters, n));
  long long spread = std::max<long long>(2, b / 50);
  Coords centers;
  for (int i = 0; i < k; ++i)
    centers.emplace_back(rng.range(-b, b), rng.range(-b, b));
  Coords out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto [cx, cy] = centers[rng.below(k)];
    long long x = std::clamp(cx + rng.range(-spread, spread), -b, b);
    long long y = std::clamp(cy + rng.range(-spread, spread), -b, b);
    out.emplace_back(x, y);
  }
  return out;
}

Coords draw_jittered_grid(Rng& rng, int n, long long b) {
  int side = 1;
  while (side * side < n) ++side;
  long long cell = std::max<long long>(1, 2 * b / side);
  long long jitter = std::max<long long>(1, cell / 3);
  Coords out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long gx = i % side, gy = i / side;
    long long x = -b + gx * cell + cell / 2 + rng.range(-jitter, jitter);
    long long y = -b + gy * cell + cell / 2 + rng.range(-jitter, jitter);
    out.emplace_back(std::clamp(x, -b, b), std::clamp(y, -b, b));
  }
  return out;
}

Coords draw_jittered_collinear(Rng& rng, int n, long long b) {
  // Points near a line with a small rational slope (including 0 and the
  // steep pseudo-vertical case), which is exactly where the degeneracy
  // guards earn their keep.
  long long num = rng.range(-3, 3);
  long long den = rng.range(1, 3);
  bool steep = rng.below(4) == 0;
  long long span = std::max<long long>(1, (2 * b) / std::max(1, n));
  long long jitter = std::max<long long>(1, std::min<long long>(8, span / 2));
  Coords out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long t = -b + i * span + rng.range(-jitter, jitter);
    long long s = (t * num) / den + rng.range(-jitter, jitter);
    long long x = steep ? s : t;
    long long y = steep ? t : s;
    out.emplace_back(std::clamp(x, -b, b), std::clamp(y, -b, b));
  }
  return out;
}

}  // namespace

const char* to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Clustered: return "clustered";
    case Distribution::JitteredGrid: return "jittered-grid";
    case Distribution::JitteredCollinear: return "jittered-collinear";
  }
  return "unknown";
}

Distribution distribution_from_string(const std::string& name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clustered") return Distribution::Clustered;
  if (name == "jittered-grid") return Distribution::JitteredGrid;
  if (name == "jittered-collinear") return Distribution::JitteredCollinear;
  fail(ErrorCode::ParseError, "unknown distribution '" + name + "'");
}

PointSet generate(const GenSpec& spec) {
  if (spec.n_min < 0 || spec.n_max < spec.n_min)
    fail(ErrorCode::PreconditionUnmet, "bad n range");
  Rng rng(spec.seed);
  int n = spec.n_min +
          static_cast<int>(rng.below(
              static_cast<std::uint64_t>(spec.n_max - spec.n_min) + 1));
  if (spec.bound < n)
    fail(ErrorCode::PreconditionUnmet,
         "coordinate bound too small for " + std::to_string(n) + " points");
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Coords coords;
    switch (spec.dist) {
      case Distribution::Uniform:
        coords = draw_uniform(rng, n, spec.bound);
        break;
      case Distribution::Clustered:
        coords = draw_clustered(rng, n, spec.bound, spec.clusters);
        break;
      case Distribution::JitteredGrid:
        coords = draw_jittered_grid(rng, n, spec.bound);
        break;
      case Distribution::JitteredCollinear:
        coords = draw_jittered_collinear(rng, n, spec.bound);
        break;
    }
    try {
      PointSet ps = PointSet::from_integers(coords);
      require_general_position(ps, spec.ms, spec.yao_ties_checked);
      return ps;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate &&
          e.code() != ErrorCode::DuplicatePoint)
        throw;
    }
  }
  fail(ErrorCode::ExhaustedRetries,
       "could not generate a strict-mode point set after " +
           std::to_string(spec.max_attempts) + " attempts");
}

PointSet minimize(const PointSet& points,
                  const std::function<bool(const PointSet&)>& still_failing) {
  if (!still_failing(points))
    fail(ErrorCode::PreconditionUnmet, "input does not fail the predicate");
  PointSet cur = points;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < cur.size() && cur.size() > 1; ++i) {
      PointSet cand = cur.without({i});
      if (still_failing(cand)) {
        cur = std::move(cand);
        changed = true;
        i = -1;  // restart the scan on the smaller set
      }
    }
    for (int half = 0; half < 2 && cur.size() >= 4; ++half) {
      int mid = cur.size() / 2;
      std::vector<int> ids;
      for (int i = half ? mid : 0; i < (half ? cur.size() : mid); ++i)
        ids.push_back(i);
      PointSet cand = cur.without(ids);
      if (cand.size() >= 1 && still_failing(cand)) {
        cur = std::move(cand);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

bool components_one(const PointSet& ps, int m, Flavor flavor) {
  if (ps.size() <= 1) return true;
  ConeGraph g = build(ps, m, flavor, Policy::Strict);
  return connected_components(g).count == 1;
}

bool audits_clean(const PointSet& ps, bool edge_crossings) {
  if (ps.size() <= 1) return true;
  for (Flavor f : {Flavor::Theta, Flavor::Yao}) {
    ConeGraph g = build(ps, 3, f, Policy::Strict);
    AuditReport report = edge_crossings ? audit_i_edge_crossings(g)
                                        : audit_empty_cone_crossings(g);
    if (!report.clean) return false;
  }
  return true;
}

bool paths_monotone_to_sinks(const PointSet& ps) {
  if (ps.size() == 0) return true;
  for (Flavor f : {Flavor::Theta, Flavor::Yao}) {
    ConeGraph g = build(ps, 3, f, Policy::Strict);
    for (int v = 0; v < g.size(); ++v) {
      for (int i = 0; i < 3; ++i) {
        IPath path = i_path(g, v, i);
        if (!path.ends_at_sink || !g.is_sink(path.sink(), i)) return false;
        for (std::size_t j = 1; j < path.vertices.size(); ++j) {
          if (compare_projection(g.points()[path.vertices[j]],
                                 g.points()[path.vertices[j - 1]], i, 3) <= 0)
            return false;
        }
      }
    }
  }
  return true;
}

bool barriers_separate(const PointSet& ps) {
  if (ps.size() <= 1) return true;
  for (Flavor f : {Flavor::Theta, Flavor::Yao}) {
    ConeGraph g = build(ps, 3, f, Policy::Strict);
    for (int i = 0; i < 3; ++i) {
      // Trace every i-path once; reuse against each sampled barrier.
      std::vector<IPath> paths;
      for (int v = 0; v < g.size(); ++v) paths.push_back(i_path(g, v, i));
      int budget = 8;
      for (int start = 0; start < g.size() && budget > 0; ++start) {
        bool has_cap = false;
        for (int j = 0; j < 3; ++j)
          if (j != i && g.is_sink(start, j)) has_cap = true;
        if (!has_cap) continue;
        --budget;
        Barrier bar = barrier(g, i, start);
        std::vector<Barrier::Side> side(g.size());
        for (int v = 0; v < g.size(); ++v) side[v] = bar.classify(g, v);
        for (const IPath& path : paths) {
          bool left = false, right = false;
          for (int v : path.vertices) {
            left = left || side[v] == Barrier::Side::Left;
            right = right || side[v] == Barrier::Side::Right;
          }
          if (left && right) return false;
        }
      }
    }
  }
  return true;
}

bool sink_triples_connected(const PointSet& ps) {
  if (ps.size() <= 1) return true;
  ConeGraph g = build(ps, 3, Flavor::Theta, Policy::Strict);
  const auto& pts = g.points();
  SinkReport report = sinks(g);
  const auto& zero_sinks = report.by_class[0];
  for (int a : zero_sinks) {
    int a_prime = i_path(g, a, 1).sink();
    int c = i_path(g, a_prime, 0).sink();
    if (c == a || (pts[c].x - pts[a].x).sign() <= 0) continue;
    for (int b : zero_sinks) {
      if ((pts[b].x - pts[a].x).sign() <= 0) continue;
      if ((pts[c].x - pts[b].x).sign() <= 0) continue;
      if (!verify_sink_triple(g, a, b, c)) return false;
    }
  }
  return true;
}

bool naive_sweep_equal(const PointSet& ps) {
  ConeGraph a = build(ps, 3, Flavor::Theta, Policy::Strict);
  ConeGraph b = build_sweep(ps, 3, Policy::Strict);
  return a.directed_edges() == b.directed_edges();
}

bool arcs_enclosed(const PointSet& ps, std::uint64_t seed) {
  if (ps.size() < 3) return true;
  Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  const int n = ps.size();
  int trials = std::min(64, n * (n - 1));
  for (int t = 0; t < trials; ++t) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    int x = static_cast<int>(rng.below(n));
    if (u == v || u == x) continue;
    if ((ps[u].x - ps[x].x).sign() == 0) continue;  // vertical line
    if (!check_arc_enclosure(ps[u], ps[v], ps[x], 256, 1e-9)) return false;
  }
  return true;
}

struct PropertyDef {
  std::vector<int> ms;
  bool yao_ties = false;
  std::function<bool(const PointSet&, std::uint64_t seed)> holds;
};

const std::map<std::string, PropertyDef>& registry() {
  static const std::map<std::string, PropertyDef> defs = {
      {"theta3-connected",
       {{3}, false,
        [](const PointSet& ps, std::uint64_t) {
          return components_one(ps, 3, Flavor::Theta);
        }}},
      {"yao3-connected",
       {{3}, true,
        [](const PointSet& ps, std::uint64_t) {
          return components_one(ps, 3, Flavor::Yao);
        }}},
      {"even-m-connected",
       {{2, 3, 4, 6}, false,
        [](const PointSet& ps, std::uint64_t) {
          for (int m : {2, 4, 6})
            if (!components_one(ps, m, Flavor::Theta)) return false;
          return true;
        }}},
      {"i-edge-noncrossing",
       {{3}, true,
        [](const PointSet& ps, std::uint64_t) {
          return audits_clean(ps, /*edge_crossings=*/true);
        }}},
      {"empty-cone-uncrossed",
       {{3}, true,
        [](const PointSet& ps, std::uint64_t) {
          return audits_clean(ps, /*edge_crossings=*/false);
        }}},
      {"i-path-monotone-sink",
       {{3}, true,
        [](const PointSet& ps, std::uint64_t) {
          return paths_monotone_to_sinks(ps);
        }}},
      {"barrier-separates",
       {{3}, true,
        [](const PointSet& ps, std::uint64_t) {
          return barriers_separate(ps);
        }}},
      {"sink-triple-connected",
       {{3}, false,
        [](const PointSet& ps, std::uint64_t) {
          return sink_triples_connected(ps);
        }}},
      {"naive-sweep-equal",
       {{3}, false,
        [](const PointSet& ps, std::uint64_t) {
          return naive_sweep_equal(ps);
        }}},
      {"arc-enclosure",
       {{3}, false,
        [](const PointSet& ps, std::uint64_t seed) {
          return arcs_enclosed(ps, seed);
        }}},
  };
  return defs;
}

}  // namespace

std::vector<std::string> registered_properties() {
  std::vector<std::string> names;
  for (const auto& [name, def] : registry()) names.push_back(name);
  return names;
}

PropertyResult run_property(const std::string& name, const GenSpec& base,
                            int trials) {
  auto it = registry().find(name);
  if (it == registry().end())
    fail(ErrorCode::UnknownProperty, "no property named '" + name + "'");
  const PropertyDef& def = it->second;

  PropertyResult result;
  result.property = name;
  result.trials = trials;
  auto holds_nothrow = [&](const PointSet& ps, std::uint64_t seed) {
    try {
      return def.holds(ps, seed);
    } catch (const Error&) {
      return false;  // an unexpected structured failure is a failure
    }
  };
  for (int t = 0; t < trials; ++t) {
    GenSpec spec = base;
    spec.seed = mix_seed(base.seed, t);
    spec.ms = def.ms;
    spec.yao_ties_checked = def.yao_ties;
    PointSet ps = generate(spec);
    if (holds_nothrow(ps, spec.seed)) continue;
    ++result.failures;
    result.failing_trials.push_back(t);
    if (result.witnesses.size() < 8) {
      std::uint64_t seed = spec.seed;
      result.witnesses.push_back(minimize(ps, [&](const PointSet& s) {
        return !holds_nothrow(s, seed);
      }));
    }
  }
  return result;
}

}  // namespace conegraph
