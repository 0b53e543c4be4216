#pragma once

#include <vector>

#include "conegraph/graph.hpp"

namespace conegraph {

/// Chain obtained by repeatedly following the directed i-edge; the last
/// vertex has an empty i-cone (projections strictly increase along the way,
/// so the walk always terminates on well-formed graphs).
struct IPath {
  int cone_class = -1;
  std::vector<int> vertices;  // start first, sink last
  bool ends_at_sink = false;

  int start() const { return vertices.front(); }
  int sink() const { return vertices.back(); }
};

struct SinkReport {
  std::vector<std::vector<int>> by_class;  // per cone class, ascending ids
};

/// Result of a lemma audit: clean, or a list of re-checkable witnesses.
struct AuditReport {
  enum class Kind { IEdgeCrossings, EmptyConeCrossings };

  struct CrossingWitness {
    DirectedEdge first;
    DirectedEdge second;  // same cone class as first
  };
  struct ConeWitness {
    int edge_u = -1;
    int edge_v = -1;
    int sink = -1;
    int cone_class = -1;
  };

  Kind kind = Kind::IEdgeCrossings;
  bool clean = true;
  std::vector<CrossingWitness> crossings;
  std::vector<ConeWitness> cone_crossings;
};

struct Components {
  std::vector<int> component_of;  // ids normalized by first appearance
  int count = 0;
  bool same(int a, int b) const { return component_of[a] == component_of[b]; }
};

/// An i-path capped by two empty cones: the terminal sink's i-cone and an
/// empty j-cone (j != i) of the start vertex. The separator curve runs from
/// infinity along the reversed class axis, through the path, and out along
/// a boundary ray of the terminal cone; it is strictly monotone in the
/// class-axis projection, so every query level meets it exactly once.
struct Barrier {
  enum class Side { Left, Right, OnBarrier };

  int cone_class = -1;       // i
  int start_cap_class = -1;  // j != i with C_j^start empty
  int m = 3;
  IPath path;
  std::vector<Point> polyline;  // copies of the path vertices, in order

  /// Exact side of the separator. Vertices report OnBarrier; any other
  /// query on the separator geometry (curve or capping cones) raises
  /// Degenerate.
  Side classify(const Point& q) const;
  Side classify(const ConeGraph& g, int id) const;
};

IPath i_path(const ConeGraph& g, int start, int cone_class);

SinkReport sinks(const ConeGraph& g);

/// Pairwise crossing audit of same-class edges (clean on valid m=3 graphs
/// of either flavor).
AuditReport audit_i_edge_crossings(const ConeGraph& g);

/// For every i-sink, checks that no non-incident edge meets its empty cone.
AuditReport audit_empty_cone_crossings(const ConeGraph& g);

Components connected_components(const ConeGraph& g);
Components strongly_connected_components(const ConeGraph& g);

/// Builds the class-i barrier anchored at `start`, which must have an empty
/// j-cone for some j != i (the flanking cap that closes the separator).
Barrier barrier(const ConeGraph& g, int cone_class, int start);

/// Checks the 0-sink triple configuration: a, b, c are 0-sinks ordered by
/// x, and the 1-path from a ends at a 1-sink whose 0-path ends at c.
/// Returns whether all three share a connected component.
bool verify_sink_triple(const ConeGraph& g, int a, int b, int c);

/// Max over point pairs of graph-distance / straight-line distance,
/// Euclidean edge weights. Reporting only, computed in doubles.
double stretch_factor(const ConeGraph& g);

}  // namespace conegraph
