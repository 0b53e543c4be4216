#include "conegraph/routing.hpp"

namespace conegraph {

RouteTrace theta_route(const ConeGraph& g, int source, int destination) {
  if (source < 0 || source >= g.size() || destination < 0 ||
      destination >= g.size())
    fail(ErrorCode::PreconditionUnmet, "route endpoint out of range");
  if (g.flavor() != Flavor::Theta)
    fail(ErrorCode::PreconditionUnmet, "routing is defined on theta graphs");

  RouteTrace trace;
  trace.source = source;
  trace.destination = destination;
  std::vector<char> seen(g.size(), 0);
  int u = source;
  while (true) {
    trace.visited.push_back(u);
    if (u == destination) {
      trace.outcome = RouteTrace::Outcome::Reached;
      return trace;
    }
    if (seen[u]) {
      trace.outcome = RouteTrace::Outcome::Cycled;
      trace.repeated = u;
      return trace;
    }
    seen[u] = 1;
    int cone = cone_index(g.points()[u], g.points()[destination], g.m(),
                          g.policy());
    int next = g.out_target(u, cone);
    if (next < 0) {
      // Impossible while the destination itself sits in that cone, but the
      // graph is caller-supplied, so keep the guard.
      trace.outcome = RouteTrace::Outcome::Stuck;
      return trace;
    }
    u = next;
  }
}

}  // namespace conegraph
