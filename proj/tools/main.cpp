// Command line front end: build/audit/inspect cone graphs, run the fuzzing
// harness, and render SVG figures from point-set documents.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "conegraph/document.hpp"
#include "conegraph/harness.hpp"
#include "conegraph/routing.hpp"
#include "conegraph/svg.hpp"

namespace cg = conegraph;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 2 usage/input, 3 routing cycled, 4 degeneracy,
// 5 property or audit failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCycled = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitPropertyFailure = 5;

int exit_code_for(const cg::Error& e) {
  switch (e.code()) {
    case cg::ErrorCode::Degenerate:
    case cg::ErrorCode::AmbiguousSign:
    case cg::ErrorCode::DegenerateGeometry:
    case cg::ErrorCode::IdenticalPoints:
    case cg::ErrorCode::Overlap:
      return kExitDegenerate;
    case cg::ErrorCode::ParseError:
    case cg::ErrorCode::DuplicatePoint:
    case cg::ErrorCode::UnknownProperty:
    case cg::ErrorCode::PreconditionUnmet:
      return kExitUsage;
    default:
      return 1;
  }
}

/// Vertex ids are 0-based indices; single letters are accepted as a
/// convenience (a=0, b=1, ...).
int parse_id(const std::string& text) {
  if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z')
    return text[0] - 'a';
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  cg::fail(cg::ErrorCode::ParseError, "bad vertex id '" + text + "'");
}

struct LoadOptions {
  std::string file;
  std::optional<int> m;
  std::optional<std::string> flavor;
  bool lenient = false;
  bool validate = false;
};

void add_load_options(CLI::App* cmd, LoadOptions& opt) {
  cmd->add_option("file", opt.file, "point-set document (JSON)")->required();
  cmd->add_option("--m", opt.m, "override the document's cone count");
  cmd->add_option("--flavor", opt.flavor, "theta|yao (default: document)");
  cmd->add_flag("--lenient", opt.lenient,
                "break degeneracies deterministically instead of failing");
  cmd->add_flag("--validate", opt.validate,
                "check the general-position assumption while parsing");
}

cg::ConeGraph load_graph(const LoadOptions& opt, bool sweep = false) {
  cg::Document doc = cg::read_document_file(opt.file, opt.validate);
  int m = opt.m.value_or(doc.m);
  cg::Flavor flavor =
      opt.flavor ? cg::flavor_from_string(*opt.flavor) : doc.flavor;
  cg::Policy policy = opt.lenient ? cg::Policy::Lenient : cg::Policy::Strict;
  if (sweep) {
    if (flavor != cg::Flavor::Theta)
      cg::fail(cg::ErrorCode::PreconditionUnmet,
               "--sweep applies to the theta flavor only");
    return cg::build_sweep(doc.points, m, policy);
  }
  return cg::build(doc.points, m, flavor, policy);
}

ordered_json graph_json(const cg::ConeGraph& g) {
  ordered_json j;
  j["m"] = g.m();
  j["flavor"] = cg::to_string(g.flavor());
  j["n"] = g.size();
  j["perturbed"] = g.perturbed();
  ordered_json directed = ordered_json::array();
  for (const auto& e : g.directed_edges())
    directed.push_back({e.source, e.target, e.cone});
  j["directed_edges"] = std::move(directed);
  ordered_json undirected = ordered_json::array();
  for (const auto& e : g.undirected_edges()) {
    ordered_json roles = ordered_json::array();
    for (const auto& r : e.roles)
      roles.push_back({{"endpoint", r.endpoint}, {"cone", r.cone}});
    undirected.push_back({{"u", e.u}, {"v", e.v}, {"roles", roles}});
  }
  j["undirected_edges"] = std::move(undirected);
  return j;
}

ordered_json pointset_json(const cg::PointSet& ps) {
  cg::Document doc;
  doc.points = ps;
  doc.mode = ps.mode();
  ordered_json parsed = ordered_json::parse(cg::serialize_document(doc));
  return parsed["points"];
}

int cmd_build(const LoadOptions& opt, bool sweep, bool as_json) {
  cg::ConeGraph g = load_graph(opt, sweep);
  if (as_json) {
    std::cout << graph_json(g).dump() << "\n";
  } else {
    for (const auto& e : g.directed_edges())
      std::cout << e.source << " -> " << e.target << "  [cone " << e.cone
                << "]\n";
    std::cout << g.size() << " points, " << g.directed_edges().size()
              << " directed edges, " << g.undirected_edges().size()
              << " undirected edges\n";
  }
  return kExitOk;
}

int cmd_audit(const LoadOptions& opt, bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  auto crossings = cg::audit_i_edge_crossings(g);
  auto cones = cg::audit_empty_cone_crossings(g);

  bool paths_ok = true;
  for (int v = 0; v < g.size() && paths_ok; ++v) {
    for (int i = 0; i < g.m() && paths_ok; ++i) {
      cg::IPath path = cg::i_path(g, v, i);
      if (!g.is_sink(path.sink(), i)) paths_ok = false;
      for (std::size_t j = 1; j < path.vertices.size(); ++j) {
        if (cg::compare_projection(g.points()[path.vertices[j]],
                                   g.points()[path.vertices[j - 1]], i,
                                   g.m()) <= 0)
          paths_ok = false;
      }
    }
  }
  int components = g.size() ? cg::connected_components(g).count : 0;
  bool connected_ok = g.size() == 0 || components == 1;

  ordered_json j;
  j["i_edge_crossings"] = {{"clean", crossings.clean},
                           {"violations", crossings.crossings.size()}};
  j["empty_cone_crossings"] = {{"clean", cones.clean},
                               {"violations", cones.cone_crossings.size()}};
  j["i_paths_monotone_to_sinks"] = paths_ok;
  j["components"] = components;
  j["connected"] = connected_ok;
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "i-edge crossings:      "
              << (crossings.clean ? "clean" : "VIOLATED") << "\n"
              << "empty-cone crossings:  "
              << (cones.clean ? "clean" : "VIOLATED") << "\n"
              << "i-paths sink+monotone: " << (paths_ok ? "clean" : "VIOLATED")
              << "\n"
              << "components:            " << components
              << (connected_ok ? "" : "  (DISCONNECTED)") << "\n";
  }
  bool all_ok = crossings.clean && cones.clean && paths_ok && connected_ok;
  return all_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_sinks(const LoadOptions& opt, bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  cg::SinkReport report = cg::sinks(g);
  if (as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& cls : report.by_class) j.push_back(cls);
    std::cout << j.dump() << "\n";
  } else {
    for (int i = 0; i < g.m(); ++i) {
      std::cout << i << "-sinks:";
      for (int s : report.by_class[i]) std::cout << " " << s;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_path(const LoadOptions& opt, const std::string& from, int cone,
             bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  cg::IPath path = cg::i_path(g, parse_id(from), cone);
  if (as_json) {
    ordered_json j{{"class", path.cone_class},
                   {"vertices", path.vertices},
                   {"sink", path.sink()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << cone << "-path:";
    for (int v : path.vertices) std::cout << " " << v;
    std::cout << "  (sink " << path.sink() << ")\n";
  }
  return kExitOk;
}

int cmd_barrier(const LoadOptions& opt, const std::string& from, int cone,
                bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  cg::Barrier bar = cg::barrier(g, cone, parse_id(from));
  std::vector<int> left, right, on;
  for (int v = 0; v < g.size(); ++v) {
    switch (bar.classify(g, v)) {
      case cg::Barrier::Side::Left: left.push_back(v); break;
      case cg::Barrier::Side::Right: right.push_back(v); break;
      case cg::Barrier::Side::OnBarrier: on.push_back(v); break;
    }
  }
  if (as_json) {
    ordered_json j{{"class", bar.cone_class},
                   {"start_cap_class", bar.start_cap_class},
                   {"path", bar.path.vertices},
                   {"left", left},
                   {"right", right},
                   {"on_barrier", on}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << cone << "-barrier path:";
    for (int v : bar.path.vertices) std::cout << " " << v;
    std::cout << "  (start cap: empty " << bar.start_cap_class << "-cone)\n";
    auto dump = [](const char* name, const std::vector<int>& ids) {
      std::cout << name << ":";
      for (int v : ids) std::cout << " " << v;
      std::cout << "\n";
    };
    dump("left", left);
    dump("right", right);
    dump("on-barrier", on);
  }
  return kExitOk;
}

int cmd_route(const LoadOptions& opt, const std::string& from,
              const std::string& to, bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  cg::RouteTrace trace = cg::theta_route(g, parse_id(from), parse_id(to));
  const char* outcome =
      trace.outcome == cg::RouteTrace::Outcome::Reached
          ? "reached"
          : (trace.outcome == cg::RouteTrace::Outcome::Cycled ? "cycled"
                                                              : "stuck");
  if (as_json) {
    ordered_json j{{"from", trace.source},
                   {"to", trace.destination},
                   {"outcome", outcome},
                   {"visited", trace.visited}};
    if (trace.outcome == cg::RouteTrace::Outcome::Cycled)
      j["repeated"] = trace.repeated;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "route:";
    for (int v : trace.visited) std::cout << " " << v;
    std::cout << "  (" << outcome << ")\n";
  }
  switch (trace.outcome) {
    case cg::RouteTrace::Outcome::Reached: return kExitOk;
    case cg::RouteTrace::Outcome::Cycled: return kExitCycled;
    case cg::RouteTrace::Outcome::Stuck: return 1;
  }
  return 1;
}

int cmd_components(const LoadOptions& opt, bool directed, bool as_json) {
  cg::ConeGraph g = load_graph(opt);
  cg::Components comps = directed ? cg::strongly_connected_components(g)
                                  : cg::connected_components(g);
  if (as_json) {
    ordered_json j{{"directed", directed},
                   {"count", comps.count},
                   {"component_of", comps.component_of}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << comps.count << (directed ? " SCC" : " component")
              << (comps.count == 1 ? "" : "s") << "\n";
    for (int c = 0; c < comps.count; ++c) {
      std::cout << "  [" << c << "]";
      for (int v = 0; v < g.size(); ++v)
        if (comps.component_of[v] == c) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_fuzz(std::uint64_t seed, int trials, const std::string& property,
             int n_min, int n_max, const std::string& dist, long long bound,
             int clusters) {
  cg::GenSpec spec;
  spec.seed = seed;
  spec.n_min = n_min;
  spec.n_max = n_max;
  spec.dist = cg::distribution_from_string(dist);
  spec.bound = bound;
  spec.clusters = clusters;
  cg::PropertyResult result = cg::run_property(property, spec, trials);

  ordered_json j;
  j["property"] = result.property;
  j["seed"] = seed;
  j["trials"] = result.trials;
  j["failures"] = result.failures;
  j["failing_trials"] = result.failing_trials;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(pointset_json(w));
  j["witnesses"] = std::move(witnesses);
  std::cout << j.dump() << "\n";
  std::cerr << result.property << ": " << result.failures << "/"
            << result.trials << " failures\n";
  return result.failures == 0 ? kExitOk : kExitPropertyFailure;
}

int cmd_render(const LoadOptions& opt, const std::string& out_file,
               const std::string& overlay, const std::string& from,
               const std::string& to, int cone, bool cones, bool no_labels,
               double canvas) {
  cg::ConeGraph g = load_graph(opt);
  cg::RenderOptions render;
  render.canvas = canvas;
  render.draw_sink_cones = cones;
  render.labels = !no_labels;

  cg::IPath path;
  cg::Barrier bar;
  cg::RouteTrace trace;
  if (overlay == "path") {
    path = cg::i_path(g, parse_id(from), cone);
    render.path = &path;
  } else if (overlay == "barrier") {
    bar = cg::barrier(g, cone, parse_id(from));
    render.barrier = &bar;
  } else if (overlay == "route") {
    trace = cg::theta_route(g, parse_id(from), parse_id(to));
    render.route = &trace;
  } else if (!overlay.empty()) {
    cg::fail(cg::ErrorCode::ParseError,
             "overlay must be path, barrier or route");
  }

  std::string svg = cg::render_svg(g, render);
  std::ofstream file(out_file, std::ios::binary);
  if (!file)
    cg::fail(cg::ErrorCode::ParseError, "cannot write '" + out_file + "'");
  file << svg;
  std::cerr << "wrote " << out_file << " (" << svg.size() << " bytes)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta/yao cone graph construction and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  LoadOptions build_opt;
  bool sweep = false;
  auto* build_cmd = app.add_subcommand("build", "construct the cone graph");
  add_load_options(build_cmd, build_opt);
  build_cmd->add_flag("--sweep", sweep, "use the plane-sweep construction");

  LoadOptions audit_opt;
  auto* audit_cmd =
      app.add_subcommand("audit", "run every structural audit on the graph");
  add_load_options(audit_cmd, audit_opt);

  LoadOptions sinks_opt;
  auto* sinks_cmd = app.add_subcommand("sinks", "list sinks per cone class");
  add_load_options(sinks_cmd, sinks_opt);

  LoadOptions path_opt;
  std::string path_from;
  int path_class = 0;
  auto* path_cmd = app.add_subcommand("path", "trace an i-path to its sink");
  add_load_options(path_cmd, path_opt);
  path_cmd->add_option("--from", path_from, "start vertex")->required();
  path_cmd->add_option("--class", path_class, "cone class")->required();

  LoadOptions barrier_opt;
  std::string barrier_from;
  int barrier_class = 0;
  auto* barrier_cmd =
      app.add_subcommand("barrier", "build a barrier and classify sides");
  add_load_options(barrier_cmd, barrier_opt);
  barrier_cmd->add_option("--from", barrier_from, "start vertex")->required();
  barrier_cmd->add_option("--class", barrier_class, "cone class")->required();

  LoadOptions route_opt;
  std::string route_from, route_to;
  auto* route_cmd = app.add_subcommand("route", "simulate cone routing");
  add_load_options(route_cmd, route_opt);
  route_cmd->add_option("--from", route_from, "source vertex")->required();
  route_cmd->add_option("--to", route_to, "destination vertex")->required();

  LoadOptions comp_opt;
  bool directed = false;
  auto* comp_cmd =
      app.add_subcommand("components", "connected components or SCCs");
  add_load_options(comp_cmd, comp_opt);
  comp_cmd->add_flag("--directed", directed,
                     "strongly connected components of the directed graph");

  std::uint64_t fuzz_seed = 0;
  int fuzz_trials = 100;
  std::string fuzz_property;
  int fuzz_n_min = 1, fuzz_n_max = 64, fuzz_clusters = 4;
  long long fuzz_bound = 1000000;
  std::string fuzz_dist = "uniform";
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run a registered property");
  fuzz_cmd->add_option("--seed", fuzz_seed, "base seed")->required();
  fuzz_cmd->add_option("--trials", fuzz_trials, "number of generated sets")
      ->required();
  fuzz_cmd->add_option("--property", fuzz_property, "property name")
      ->required();
  fuzz_cmd->add_option("--n-min", fuzz_n_min, "minimum set size");
  fuzz_cmd->add_option("--n-max", fuzz_n_max, "maximum set size");
  fuzz_cmd->add_option("--dist", fuzz_dist,
                       "uniform|clustered|jittered-grid|jittered-collinear");
  fuzz_cmd->add_option("--bound", fuzz_bound, "coordinate bound");
  fuzz_cmd->add_option("--clusters", fuzz_clusters, "clusters for clustered");

  LoadOptions render_opt;
  std::string render_out, render_overlay, render_from, render_to;
  int render_class = 0;
  bool render_cones = false, render_no_labels = false;
  double render_canvas = 800.0;
  auto* render_cmd = app.add_subcommand("render", "write an SVG figure");
  add_load_options(render_cmd, render_opt);
  render_cmd->add_option("--out", render_out, "output SVG file")->required();
  render_cmd->add_option("--overlay", render_overlay,
                         "highlight a path, barrier or route");
  render_cmd->add_option("--from", render_from, "overlay start vertex");
  render_cmd->add_option("--to", render_to, "overlay destination vertex");
  render_cmd->add_option("--class", render_class, "overlay cone class");
  render_cmd->add_flag("--cones", render_cones, "shade empty sink cones");
  render_cmd->add_flag("--no-labels", render_no_labels, "omit vertex labels");
  render_cmd->add_option("--canvas", render_canvas, "canvas size in px");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build_opt, sweep, as_json);
    if (audit_cmd->parsed()) return cmd_audit(audit_opt, as_json);
    if (sinks_cmd->parsed()) return cmd_sinks(sinks_opt, as_json);
    if (path_cmd->parsed())
      return cmd_path(path_opt, path_from, path_class, as_json);
    if (barrier_cmd->parsed())
      return cmd_barrier(barrier_opt, barrier_from, barrier_class, as_json);
    if (route_cmd->parsed())
      return cmd_route(route_opt, route_from, route_to, as_json);
    if (comp_cmd->parsed()) return cmd_components(comp_opt, directed, as_json);
    if (fuzz_cmd->parsed())
      return cmd_fuzz(fuzz_seed, fuzz_trials, fuzz_property, fuzz_n_min,
                      fuzz_n_max, fuzz_dist, fuzz_bound, fuzz_clusters);
    if (render_cmd->parsed())
      return cmd_render(render_opt, render_out, render_overlay, render_from,
                        render_to, render_class, render_cones,
                        render_no_labels, render_canvas);
  } catch (const cg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
