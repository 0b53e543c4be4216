#pragma once

#include <vector>

#include "conegraph/graph.hpp"

namespace conegraph {

struct RouteTrace {
  enum class Outcome { Reached, Cycled, Stuck };

  int source = -1;
  int destination = -1;
  std::vector<int> visited;  // includes the source; length <= n + 1
  Outcome outcome = Outcome::Stuck;
  int repeated = -1;  // the revisited vertex when Cycled
};

/// Memoryless cone routing: from u, follow the directed edge of the cone
/// that contains the destination. The walk either reaches t, revisits a
/// vertex (proof of divergence, since the next hop depends only on the
/// current vertex), or -- guarded but unreachable on well-formed graphs --
/// finds no edge in the destination's cone. Strict mode raises Degenerate
/// when t lies on a cone boundary of a visited vertex.
RouteTrace theta_route(const ConeGraph& g, int source, int destination);

}  // namespace conegraph
