#include "conegraph/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace conegraph {

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Components normalize_components(const std::vector<int>& raw, int n) {
  Components out;
  out.component_of.assign(n, -1);
  std::vector<int> remap(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = raw[i];
    if (remap[r] < 0) remap[r] = out.count++;
    out.component_of[i] = remap[r];
  }
  return out;
}

}  // namespace

IPath i_path(const ConeGraph& g, int start, int cone_class) {
  if (start < 0 || start >= g.size())
    fail(ErrorCode::PreconditionUnmet, "start vertex out of range");
  if (cone_class < 0 || cone_class >= g.m())
    fail(ErrorCode::PreconditionUnmet, "cone class out of range");
  IPath path;
  path.cone_class = cone_class;
  std::vector<char> seen(g.size(), 0);
  int v = start;
  while (true) {
    if (seen[v])
      fail(ErrorCode::CycleDetected,
           "i-path revisited vertex " + std::to_string(v) +
               "; the graph violates the projection-monotonicity invariant");
    seen[v] = 1;
    path.vertices.push_back(v);
    int next = g.out_target(v, cone_class);
    if (next < 0) break;
    v = next;
  }
  path.ends_at_sink = true;
  return path;
}

SinkReport sinks(const ConeGraph& g) {
  SinkReport report;
  report.by_class.assign(g.m(), {});
  for (int p = 0; p < g.size(); ++p) {
    for (int i = 0; i < g.m(); ++i) {
      if (g.is_sink(p, i)) report.by_class[i].push_back(p);
    }
  }
  return report;
}

AuditReport audit_i_edge_crossings(const ConeGraph& g) {
  AuditReport report;
  report.kind = AuditReport::Kind::IEdgeCrossings;
  const auto& pts = g.points();
  std::vector<std::vector<DirectedEdge>> by_class(g.m());
  for (const auto& e : g.directed_edges()) by_class[e.cone].push_back(e);
  for (int i = 0; i < g.m(); ++i) {
    const auto& edges = by_class[i];
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        const auto& e1 = edges[a];
        const auto& e2 = edges[b];
        if (e1.source == e2.source || e1.source == e2.target ||
            e1.target == e2.source || e1.target == e2.target)
          continue;  // a shared endpoint is never a crossing
        bool crossed = false;
        try {
          crossed = segments_cross(
              Segment{pts[e1.source], pts[e1.target]},
              Segment{pts[e2.source], pts[e2.target]});
        } catch (const Error& err) {
          if (err.code() != ErrorCode::Overlap) throw;
          crossed = true;  // collinear overlap is just as bad
        }
        if (crossed) report.crossings.push_back({e1, e2});
      }
    }
  }
  report.clean = report.crossings.empty();
  return report;
}

AuditReport audit_empty_cone_crossings(const ConeGraph& g) {
  AuditReport report;
  report.kind = AuditReport::Kind::EmptyConeCrossings;
  const auto& pts = g.points();
  for (int i = 0; i < g.m(); ++i) {
    for (int s = 0; s < g.size(); ++s) {
      if (!g.is_sink(s, i)) continue;
      ConeSpec cone{pts[s], i, g.m()};
      for (const auto& e : g.undirected_edges()) {
        if (e.u == s || e.v == s) continue;
        if (segment_crosses_cone(Segment{pts[e.u], pts[e.v]}, cone))
          report.cone_crossings.push_back({e.u, e.v, s, i});
      }
    }
  }
  report.clean = report.cone_crossings.empty();
  return report;
}

Components connected_components(const ConeGraph& g) {
  const int n = g.size();
  DisjointSet dsu(n);
  for (const auto& e : g.undirected_edges()) dsu.unite(e.u, e.v);
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = dsu.find(i);
  return normalize_components(raw, n);
}

Components strongly_connected_components(const ConeGraph& g) {
  const int n = g.size();
  const int m = g.m();
  // Iterative Tarjan over the directed cone edges.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int v;
    int edge;  // next cone slot to explore
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < m) {
        int w = g.out_target(f.v, f.edge++);
        if (w < 0) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == f.v) break;
          }
          ++comp_count;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return normalize_components(comp, n);
}

Barrier barrier(const ConeGraph& g, int cone_class, int start) {
  if (g.m() != 3)
    fail(ErrorCode::PreconditionUnmet, "barriers are defined for m = 3");
  if (cone_class < 0 || cone_class >= 3)
    fail(ErrorCode::PreconditionUnmet, "cone class out of range");
  if (start < 0 || start >= g.size())
    fail(ErrorCode::PreconditionUnmet, "start vertex out of range");
  int cap = -1;
  for (int j = 0; j < 3; ++j) {
    if (j != cone_class && g.is_sink(start, j)) {
      cap = j;
      break;
    }
  }
  if (cap < 0)
    fail(ErrorCode::PreconditionUnmet,
         "barrier start " + std::to_string(start) +
             " has no empty cone of another class to cap the separator");
  Barrier b;
  b.cone_class = cone_class;
  b.start_cap_class = cap;
  b.m = g.m();
  b.path = i_path(g, start, cone_class);
  for (int id : b.path.vertices) b.polyline.push_back(g.points()[id]);
  return b;
}

Barrier::Side Barrier::classify(const Point& q) const {
  const Point& first = polyline.front();
  const Point& last = polyline.back();
  for (const auto& v : polyline) {
    if (euclidean_distance_sq(v, q).sign() == 0) return Side::OnBarrier;
  }
  // The capping cones are part of the separator geometry.
  if (point_in_cone(ConeSpec{first, start_cap_class, m}, q) ||
      point_in_cone(ConeSpec{last, cone_class, m}, q))
    fail(ErrorCode::Degenerate, "query lies inside a barrier cone");

  // Sides follow the class axis orientation with the curve walked toward
  // decreasing projection, so a class-1 barrier splits roughly along x and
  // the smaller-x half is Left.
  auto side_of = [&](int s) -> Side {
    if (s == 0)
      fail(ErrorCode::Degenerate, "query lies on the barrier separator");
    return s < 0 ? Side::Left : Side::Right;
  };

  // Below the start the curve is the reversed class axis through the start.
  if (compare_projection(q, first, cone_class, m) <= 0)
    return side_of(side_of_class_axis(first, cone_class, m, q));
  // Past the terminal sink it continues along the cone's left boundary ray.
  if (compare_projection(q, last, cone_class, m) >= 0)
    return side_of(side_of_cone_boundary(ConeSpec{last, cone_class, m},
                                         BoundarySide::Left, q));
  // Otherwise the query level lands inside the path polyline: the curve is
  // projection-monotone, so exactly one piece spans it.
  for (std::size_t j = 0; j + 1 < polyline.size(); ++j) {
    int above = compare_projection(q, polyline[j], cone_class, m);
    int below = compare_projection(q, polyline[j + 1], cone_class, m);
    if (above == 0)
      return side_of(side_of_class_axis(polyline[j], cone_class, m, q));
    if (above > 0 && below < 0)
      return side_of(orientation(polyline[j], polyline[j + 1], q));
  }
  fail(ErrorCode::Internal, "barrier level search failed");
}

Barrier::Side Barrier::classify(const ConeGraph& g, int id) const {
  if (id < 0 || id >= g.size())
    fail(ErrorCode::PreconditionUnmet, "vertex id out of range");
  for (std::size_t j = 0; j < polyline.size(); ++j)
    if (polyline[j].id == id) return Side::OnBarrier;
  return classify(g.points()[id]);
}

bool verify_sink_triple(const ConeGraph& g, int a, int b, int c) {
  const int n = g.size();
  if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n ||
      a == b || b == c || a == c)
    fail(ErrorCode::PreconditionUnmet, "need three distinct vertices");
  for (int v : {a, b, c}) {
    if (!g.is_sink(v, 0))
      fail(ErrorCode::PreconditionUnmet,
           "(i) vertex " + std::to_string(v) + " is not a 0-sink");
  }
  const auto& pts = g.points();
  if ((pts[b].x - pts[a].x).sign() <= 0 || (pts[c].x - pts[b].x).sign() <= 0)
    fail(ErrorCode::PreconditionUnmet,
         "(i) vertices are not in strict left-to-right order");
  IPath one_path = i_path(g, a, 1);
  int a_prime = one_path.sink();
  IPath zero_path = i_path(g, a_prime, 0);
  if (zero_path.sink() != c)
    fail(ErrorCode::PreconditionUnmet,
         "(ii) the 0-path from the 1-sink of " + std::to_string(a) +
             " ends at " + std::to_string(zero_path.sink()) + ", not " +
             std::to_string(c));
  Components comps = connected_components(g);
  return comps.same(a, b) && comps.same(b, c);
}

double stretch_factor(const ConeGraph& g) {
  const int n = g.size();
  if (n == 0) fail(ErrorCode::PreconditionUnmet, "empty graph");
  Components comps = connected_components(g);
  if (comps.count > 1) fail(ErrorCode::Disconnected, "graph is not connected");
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = g.points()[i].x.to_double();
    ys[i] = g.points()[i].y.to_double();
  }
  auto dist = [&](int u, int v) {
    return std::hypot(xs[u] - xs[v], ys[u] - ys[v]);
  };
  double worst = 1.0;
  std::vector<double> d(n);
  using Item = std::pair<double, int>;
  for (int src = 0; src < n; ++src) {
    std::fill(d.begin(), d.end(), std::numeric_limits<double>::infinity());
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    d[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [dist_u, u] = pq.top();
      pq.pop();
      if (dist_u > d[u]) continue;
      for (int v : g.neighbors(u)) {
        double nd = dist_u + dist(u, v);
        if (nd < d[v]) {
          d[v] = nd;
          pq.push({nd, v});
        }
      }
    }
    for (int v = src + 1; v < n; ++v) {
      double straight = dist(src, v);
      if (straight > 0) worst = std::max(worst, d[v] / straight);
    }
  }
  return worst;
}

}  // namespace conegraph
