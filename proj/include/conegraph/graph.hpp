#pragma once

#include <compare>
#include <vector>

#include "conegraph/geometry.hpp"

namespace conegraph {

/// Theta measures closeness by projection onto the cone bisector; Yao by
/// Euclidean distance. Everything else about the construction is shared.
enum class Flavor { Theta, Yao };

struct DirectedEdge {
  int source = -1;
  int target = -1;
  int cone = -1;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct EdgeRole {
  int endpoint = -1;  // the point whose cone selected this edge
  int cone = -1;
  friend auto operator<=>(const EdgeRole&, const EdgeRole&) = default;
};

struct UndirectedEdge {
  int u = -1;  // u < v
  int v = -1;
  std::vector<EdgeRole> roles;  // one or two
};

/// The cone graph over a point set: directed edges (p -> closest point in
/// C_i^p) are primary; the undirected view and per-edge roles are derived.
class ConeGraph {
 public:
  static ConeGraph assemble(PointSet points, int m, Flavor flavor,
                            Policy policy, bool perturbed,
                            std::vector<DirectedEdge> edges);

  const PointSet& points() const { return points_; }
  int size() const { return points_.size(); }
  int m() const { return m_; }
  Flavor flavor() const { return flavor_; }
  Policy policy() const { return policy_; }
  /// True when a lenient tie-break actually fired; such graphs are not
  /// canonical and are excluded from equivalence comparisons.
  bool perturbed() const { return perturbed_; }

  const std::vector<DirectedEdge>& directed_edges() const { return directed_; }
  const std::vector<UndirectedEdge>& undirected_edges() const {
    return undirected_;
  }

  /// Target of the directed i-edge out of p, or -1 when C_i^p is empty.
  int out_target(int p, int cone) const { return out_[p * m_ + cone]; }
  bool is_sink(int p, int cone) const { return out_target(p, cone) < 0; }

  const std::vector<int>& neighbors(int p) const { return adjacency_[p]; }
  const UndirectedEdge* find_undirected(int u, int v) const;

 private:
  PointSet points_;
  int m_ = 3;
  Flavor flavor_ = Flavor::Theta;
  Policy policy_ = Policy::Strict;
  bool perturbed_ = false;
  std::vector<DirectedEdge> directed_;
  std::vector<UndirectedEdge> undirected_;
  std::vector<int> out_;
  std::vector<std::vector<int>> adjacency_;
};

/// Reference construction: for every point and every cone, scan all other
/// points and keep the closest under the flavor's measure. O(n^2 m).
/// Building with a non-exact-capable m demotes exact input to float mode.
ConeGraph build(const PointSet& points, int m, Flavor flavor,
                Policy policy = Policy::Strict);

/// Plane-sweep construction of the Theta graph, O(n m log n): per cone
/// class, points are processed in boundary-coordinate order and queried
/// through an ordered structure keyed by the opposite boundary coordinate.
/// Produces the same directed edge set as build(). Strict mode only.
ConeGraph build_sweep(const PointSet& points, int m,
                      Policy policy = Policy::Strict);

/// The one or two (endpoint, cone) roles under which edge uv was selected.
std::vector<EdgeRole> edge_roles(const ConeGraph& g, int u, int v);

}  // namespace conegraph
