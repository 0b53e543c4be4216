#include "conegraph/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "predicates.hpp"

namespace conegraph {

using detail::ConeTable;
using detail::KernelKind;
using detail::QF;
using detail::QI;
using detail::QR;
using detail::SignEval;
using detail::V2;

ConeGraph ConeGraph::assemble(PointSet points, int m, Flavor flavor,
                              Policy policy, bool perturbed,
                              std::vector<DirectedEdge> edges) {
  if (m < 2) fail(ErrorCode::PreconditionUnmet, "m must be at least 2");
  ConeGraph g;
  g.points_ = std::move(points);
  g.m_ = m;
  g.flavor_ = flavor;
  g.policy_ = policy;
  g.perturbed_ = perturbed;
  const int n = g.points_.size();

  std::sort(edges.begin(), edges.end());
  g.out_.assign(static_cast<std::size_t>(n) * m, -1);
  for (const auto& e : edges) {
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n ||
        e.cone < 0 || e.cone >= m || e.source == e.target)
      fail(ErrorCode::PreconditionUnmet, "out-of-range directed edge");
    int& slot = g.out_[e.source * m + e.cone];
    if (slot >= 0)
      fail(ErrorCode::PreconditionUnmet,
           "two edges share source " + std::to_string(e.source) +
               " and cone " + std::to_string(e.cone));
    slot = e.target;
  }
  g.directed_ = std::move(edges);

  std::map<std::pair<int, int>, std::vector<EdgeRole>> undirected;
  for (const auto& e : g.directed_) {
    auto key = std::minmax(e.source, e.target);
    undirected[{key.first, key.second}].push_back(EdgeRole{e.source, e.cone});
  }
  g.adjacency_.assign(n, {});
  for (auto& [key, roles] : undirected) {
    std::sort(roles.begin(), roles.end());
    g.undirected_.push_back(UndirectedEdge{key.first, key.second, roles});
    g.adjacency_[key.first].push_back(key.second);
    g.adjacency_[key.second].push_back(key.first);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

const UndirectedEdge* ConeGraph::find_undirected(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      undirected_.begin(), undirected_.end(), std::make_pair(u, v),
      [](const UndirectedEdge& e, const std::pair<int, int>& key) {
        return std::make_pair(e.u, e.v) < key;
      });
  if (it == undirected_.end() || it->u != u || it->v != v) return nullptr;
  return &*it;
}

std::vector<EdgeRole> edge_roles(const ConeGraph& g, int u, int v) {
  if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
    fail(ErrorCode::NotAnEdge, "vertex id out of range");
  const UndirectedEdge* e = g.find_undirected(u, v);
  if (!e)
    fail(ErrorCode::NotAnEdge,
         std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  return e->roles;
}

namespace {

template <class Q>
std::vector<DirectedEdge> build_naive_k(const PointSet& ps, int m,
                                        Flavor flavor, Policy policy,
                                        const ConeTable<Q>& tbl, double eps,
                                        bool& perturbed) {
  const int n = ps.size();
  std::vector<DirectedEdge> edges;
  SignEval<Q> ev{policy};
  std::vector<V2<Q>> coords;
  coords.reserve(n);
  for (int i = 0; i < n; ++i) coords.push_back(detail::load_v2<Q>(ps[i], eps));

  std::vector<int> best(m);
  std::vector<Q> best_key(m);
  for (int p = 0; p < n; ++p) {
    std::fill(best.begin(), best.end(), -1);
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      V2<Q> d = coords[q] - coords[p];
      detail::ConeHit hit;
      try {
        hit = detail::cone_index_t(d, tbl, policy, ev);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Degenerate ||
            e.code() == ErrorCode::AmbiguousSign)
          fail(ErrorCode::Degenerate,
               "points " + std::to_string(q) + " and " + std::to_string(p) +
                   " violate general position (" + e.what() + ")");
        throw;
      }
      Q key = flavor == Flavor::Theta ? dot(tbl.bis_scaled[hit.index], d)
                                      : dot(d, d);
      int& b = best[hit.index];
      if (b < 0) {
        b = q;
        best_key[hit.index] = key;
        continue;
      }
      int cmp;
      try {
        cmp = ev(best_key[hit.index] - key);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::AmbiguousSign)
          fail(ErrorCode::Degenerate,
               "closest-point tie between " + std::to_string(b) + " and " +
                   std::to_string(q) + " in cone " + std::to_string(hit.index) +
                   " of " + std::to_string(p) + " (" + e.what() + ")");
        throw;
      }
      if (cmp > 0) {
        b = q;
        best_key[hit.index] = key;
      } else if (cmp == 0) {
        if (policy == Policy::Strict)
          fail(ErrorCode::Degenerate,
               "closest-point tie between " + std::to_string(b) + " and " +
                   std::to_string(q) + " in cone " + std::to_string(hit.index) +
                   " of " + std::to_string(p));
        perturbed = true;
        if (q < b) b = q;  // lenient: (key, id) lexicographic
      }
    }
    for (int i = 0; i < m; ++i) {
      if (best[i] >= 0) edges.push_back(DirectedEdge{p, best[i], i});
    }
  }
  perturbed = perturbed || ev.perturbed;
  return edges;
}

}  // namespace

ConeGraph build(const PointSet& points, int m, Flavor flavor, Policy policy) {
  if (m < 2) fail(ErrorCode::PreconditionUnmet, "m must be at least 2");
  PointSet ps = points;
  if (ps.mode() == CoordMode::Exact && !exact_capable(m)) ps = ps.as_float();
  double eps = 1e-9 * std::max(1.0, ps.bbox_diagonal());
  bool perturbed = false;
  std::vector<DirectedEdge> edges;
  switch (detail::pick_kernel(ps, m)) {
    case KernelKind::Int:
      edges = build_naive_k<QI>(ps, m, flavor, policy,
                                detail::cone_table_qi(m), eps, perturbed);
      break;
    case KernelKind::Rat:
      edges = build_naive_k<QR>(ps, m, flavor, policy,
                                detail::cone_table_qr(m), eps, perturbed);
      break;
    case KernelKind::Flt: {
      auto tbl = detail::cone_table_qf(m);
      edges = build_naive_k<QF>(ps, m, flavor, policy, tbl, eps, perturbed);
      break;
    }
  }
  return ConeGraph::assemble(std::move(ps), m, flavor, policy, perturbed,
                             std::move(edges));
}

}  // namespace conegraph
