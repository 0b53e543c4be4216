#pragma once

#include <string>

#include "conegraph/analysis.hpp"
#include "conegraph/routing.hpp"

namespace conegraph {

/// Static figure rendering. Vertices are single circle glyphs (sink classes
/// are encoded in attributes, not extra elements), edges are line strokes
/// color-coded by cone class, and overlays add polylines and shaded cone
/// wedges on top. Output is deterministic for a given input.
struct RenderOptions {
  double canvas = 800.0;        // square canvas edge, px
  bool draw_sink_cones = false;  // shade every sink's empty cone
  bool labels = true;
  const IPath* path = nullptr;
  const Barrier* barrier = nullptr;
  const RouteTrace* route = nullptr;
};

std::string render_svg(const ConeGraph& g, const RenderOptions& opts = {});

}  // namespace conegraph
