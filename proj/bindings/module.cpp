// Python bindings for the cone graph library: point sets, graph builders,
// structure analysis, routing, the fuzzing harness, documents and SVG.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conegraph/document.hpp"
#include "conegraph/harness.hpp"
#include "conegraph/routing.hpp"
#include "conegraph/svg.hpp"

namespace py = pybind11;
namespace cg = conegraph;

namespace {

cg::PointSet pointset_from_list(const py::sequence& entries) {
  std::vector<std::pair<cg::Rational, cg::Rational>> coords;
  coords.reserve(py::len(entries));
  auto convert = [](py::handle v) -> cg::Rational {
    if (py::isinstance<py::int_>(v))
      return cg::Rational(v.cast<long long>());
    if (py::isinstance<py::str>(v))
      return cg::rational_from_string(v.cast<std::string>());
    throw py::type_error(
        "exact coordinates are ints or decimal/fraction strings; use "
        "PointSet.from_floats for float mode");
  };
  for (py::handle entry : entries) {
    py::sequence pair = entry.cast<py::sequence>();
    if (py::len(pair) != 2) throw py::value_error("points are (x, y) pairs");
    coords.emplace_back(convert(pair[0]), convert(pair[1]));
  }
  return cg::PointSet::from_rationals(coords);
}

cg::Flavor flavor_arg(const std::string& name) {
  return cg::flavor_from_string(name);
}

cg::Policy policy_arg(bool lenient) {
  return lenient ? cg::Policy::Lenient : cg::Policy::Strict;
}

cg::Distribution dist_arg(const std::string& name) {
  return cg::distribution_from_string(name);
}

const char* side_name(cg::Barrier::Side s) {
  switch (s) {
    case cg::Barrier::Side::Left: return "left";
    case cg::Barrier::Side::Right: return "right";
    case cg::Barrier::Side::OnBarrier: return "on-barrier";
  }
  return "?";
}

const char* outcome_name(cg::RouteTrace::Outcome o) {
  switch (o) {
    case cg::RouteTrace::Outcome::Reached: return "reached";
    case cg::RouteTrace::Outcome::Cycled: return "cycled";
    case cg::RouteTrace::Outcome::Stuck: return "stuck";
  }
  return "?";
}

py::list coords_list(const cg::PointSet& ps) {
  py::list out;
  for (const auto& p : ps.points()) {
    if (ps.mode() == cg::CoordMode::Exact) {
      const auto& ex = p.x.exact_rep();
      const auto& ey = p.y.exact_rep();
      out.append(py::make_tuple(cg::rational_to_string(ex.a),
                                cg::rational_to_string(ey.a)));
    } else {
      out.append(py::make_tuple(p.x.to_double(), p.y.to_double()));
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "theta and Yao cone graphs with executable structure checks";

  py::register_exception<cg::Error>(m, "GeometryError");

  py::class_<cg::PointSet>(m, "PointSet")
      .def(py::init(&pointset_from_list), py::arg("points"),
           "exact point set from (x, y) pairs of ints or rational strings")
      .def_static(
          "from_floats",
          [](const std::vector<std::pair<double, double>>& coords,
             double eps_rel) {
            return cg::PointSet::from_doubles(coords, eps_rel);
          },
          py::arg("points"), py::arg("eps_rel") = 1e-9)
      .def("__len__", &cg::PointSet::size)
      .def_property_readonly("mode",
                             [](const cg::PointSet& ps) {
                               return ps.mode() == cg::CoordMode::Exact
                                          ? "exact"
                                          : "float";
                             })
      .def("coords", &coords_list,
           "coordinates as rational strings (exact) or floats")
      .def("point",
           [](const cg::PointSet& ps, int id) {
             if (id < 0 || id >= ps.size())
               throw py::index_error("point id out of range");
             return py::make_tuple(ps[id].x.to_double(), ps[id].y.to_double());
           })
      .def("without", &cg::PointSet::without, py::arg("ids"))
      .def("validate",
           [](const cg::PointSet& ps, const std::vector<int>& ms,
              bool yao_ties) {
             py::list out;
             for (const auto& v :
                  cg::validate_general_position(ps, ms, yao_ties)) {
               const char* kind =
                   v.kind == cg::PositionViolation::Kind::BoundaryParallel
                       ? "boundary-parallel"
                       : (v.kind == cg::PositionViolation::Kind::ProjectionTie
                              ? "projection-tie"
                              : "yao-distance-tie");
               out.append(py::dict(py::arg("kind") = kind, py::arg("p") = v.p,
                                   py::arg("q") = v.q, py::arg("m") = v.m));
             }
             return out;
           },
           py::arg("ms") = std::vector<int>{3}, py::arg("yao_ties") = false);

  py::class_<cg::ConeGraph>(m, "ConeGraph")
      .def_property_readonly("n", &cg::ConeGraph::size)
      .def_property_readonly("m", &cg::ConeGraph::m)
      .def_property_readonly(
          "flavor",
          [](const cg::ConeGraph& g) { return cg::to_string(g.flavor()); })
      .def_property_readonly("perturbed", &cg::ConeGraph::perturbed)
      .def_property_readonly("points", &cg::ConeGraph::points)
      .def("directed_edges",
           [](const cg::ConeGraph& g) {
             py::list out;
             for (const auto& e : g.directed_edges())
               out.append(py::make_tuple(e.source, e.target, e.cone));
             return out;
           })
      .def("undirected_edges",
           [](const cg::ConeGraph& g) {
             py::list out;
             for (const auto& e : g.undirected_edges()) {
               py::list roles;
               for (const auto& r : e.roles)
                 roles.append(py::make_tuple(r.endpoint, r.cone));
               out.append(py::make_tuple(e.u, e.v, roles));
             }
             return out;
           })
      .def("out_target", &cg::ConeGraph::out_target, py::arg("p"),
           py::arg("cone"))
      .def("is_sink", &cg::ConeGraph::is_sink, py::arg("p"), py::arg("cone"))
      .def("neighbors", &cg::ConeGraph::neighbors, py::arg("p"));

  m.def(
      "build",
      [](const cg::PointSet& ps, int m_cones, const std::string& flavor,
         bool lenient) {
        return cg::build(ps, m_cones, flavor_arg(flavor), policy_arg(lenient));
      },
      py::arg("points"), py::arg("m") = 3, py::arg("flavor") = "theta",
      py::arg("lenient") = false);
  m.def(
      "build_sweep",
      [](const cg::PointSet& ps, int m_cones, bool lenient) {
        return cg::build_sweep(ps, m_cones, policy_arg(lenient));
      },
      py::arg("points"), py::arg("m") = 3, py::arg("lenient") = false);
  m.def("edge_roles",
        [](const cg::ConeGraph& g, int u, int v) {
          py::list out;
          for (const auto& r : cg::edge_roles(g, u, v))
            out.append(py::make_tuple(r.endpoint, r.cone));
          return out;
        });

  m.def(
      "cone_index",
      [](std::pair<long long, long long> apex,
         std::pair<long long, long long> q, int m_cones, bool lenient) {
        return cg::cone_index(cg::exact_point(apex.first, apex.second),
                              cg::exact_point(q.first, q.second), m_cones,
                              policy_arg(lenient));
      },
      py::arg("apex"), py::arg("q"), py::arg("m") = 3,
      py::arg("lenient") = false);
  m.def(
      "projected_distance",
      [](std::pair<long long, long long> apex,
         std::pair<long long, long long> q, int cone, int m_cones) {
        return cg::projected_distance(cg::exact_point(apex.first, apex.second),
                                      cg::exact_point(q.first, q.second), cone,
                                      m_cones)
            .to_double();
      },
      py::arg("apex"), py::arg("q"), py::arg("cone"), py::arg("m") = 3);
  m.def(
      "euclidean_distance_sq",
      [](std::pair<long long, long long> p, std::pair<long long, long long> q) {
        return cg::euclidean_distance_sq(cg::exact_point(p.first, p.second),
                                         cg::exact_point(q.first, q.second))
            .to_double();
      });
  m.def(
      "segments_cross",
      [](std::pair<long long, long long> a, std::pair<long long, long long> b,
         std::pair<long long, long long> c,
         std::pair<long long, long long> d) {
        return cg::segments_cross(
            cg::Segment{cg::exact_point(a.first, a.second),
                        cg::exact_point(b.first, b.second)},
            cg::Segment{cg::exact_point(c.first, c.second),
                        cg::exact_point(d.first, d.second)});
      });
  m.def(
      "segment_crosses_cone",
      [](std::pair<long long, long long> a, std::pair<long long, long long> b,
         std::pair<long long, long long> apex, int cone, int m_cones) {
        return cg::segment_crosses_cone(
            cg::Segment{cg::exact_point(a.first, a.second),
                        cg::exact_point(b.first, b.second)},
            cg::ConeSpec{cg::exact_point(apex.first, apex.second), cone,
                         m_cones});
      },
      py::arg("a"), py::arg("b"), py::arg("apex"), py::arg("cone"),
      py::arg("m") = 3);
  m.def(
      "check_arc_enclosure",
      [](std::pair<double, double> u, std::pair<double, double> v,
         std::pair<double, double> x, int samples, double eps_rel) {
        auto mk = [](std::pair<double, double> p) {
          return cg::float_point(p.first, p.second, 0.0);
        };
        return cg::check_arc_enclosure(mk(u), mk(v), mk(x), samples, eps_rel);
      },
      py::arg("u"), py::arg("v"), py::arg("x"), py::arg("samples") = 1000,
      py::arg("eps_rel") = 1e-9);

  py::class_<cg::IPath>(m, "IPath")
      .def_readonly("cone_class", &cg::IPath::cone_class)
      .def_readonly("vertices", &cg::IPath::vertices)
      .def_property_readonly("sink", &cg::IPath::sink);

  py::class_<cg::Barrier>(m, "Barrier")
      .def_readonly("cone_class", &cg::Barrier::cone_class)
      .def_readonly("start_cap_class", &cg::Barrier::start_cap_class)
      .def_property_readonly(
          "path", [](const cg::Barrier& b) { return b.path.vertices; })
      .def("classify",
           [](const cg::Barrier& b, const cg::ConeGraph& g, int id) {
             return side_name(b.classify(g, id));
           });

  py::class_<cg::RouteTrace>(m, "RouteTrace")
      .def_readonly("source", &cg::RouteTrace::source)
      .def_readonly("destination", &cg::RouteTrace::destination)
      .def_readonly("visited", &cg::RouteTrace::visited)
      .def_readonly("repeated", &cg::RouteTrace::repeated)
      .def_property_readonly("outcome", [](const cg::RouteTrace& t) {
        return outcome_name(t.outcome);
      });

  m.def("i_path", &cg::i_path, py::arg("graph"), py::arg("start"),
        py::arg("cone_class"));
  m.def("sinks", [](const cg::ConeGraph& g) { return cg::sinks(g).by_class; });
  m.def("audit_i_edge_crossings", [](const cg::ConeGraph& g) {
    auto r = cg::audit_i_edge_crossings(g);
    py::list witnesses;
    for (const auto& w : r.crossings)
      witnesses.append(py::make_tuple(
          py::make_tuple(w.first.source, w.first.target, w.first.cone),
          py::make_tuple(w.second.source, w.second.target, w.second.cone)));
    return py::dict(py::arg("clean") = r.clean,
                    py::arg("witnesses") = witnesses);
  });
  m.def("audit_empty_cone_crossings", [](const cg::ConeGraph& g) {
    auto r = cg::audit_empty_cone_crossings(g);
    py::list witnesses;
    for (const auto& w : r.cone_crossings)
      witnesses.append(py::dict(
          py::arg("edge") = py::make_tuple(w.edge_u, w.edge_v),
          py::arg("sink") = w.sink, py::arg("cone_class") = w.cone_class));
    return py::dict(py::arg("clean") = r.clean,
                    py::arg("witnesses") = witnesses);
  });
  m.def("connected_components", [](const cg::ConeGraph& g) {
    auto c = cg::connected_components(g);
    return py::make_tuple(c.count, c.component_of);
  });
  m.def("strongly_connected_components", [](const cg::ConeGraph& g) {
    auto c = cg::strongly_connected_components(g);
    return py::make_tuple(c.count, c.component_of);
  });
  m.def("barrier", &cg::barrier, py::arg("graph"), py::arg("cone_class"),
        py::arg("start"));
  m.def("verify_sink_triple", &cg::verify_sink_triple, py::arg("graph"),
        py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("stretch_factor", &cg::stretch_factor);
  m.def("theta_route", &cg::theta_route, py::arg("graph"), py::arg("source"),
        py::arg("destination"));

  m.def(
      "generate",
      [](std::uint64_t seed, int n_min, int n_max, const std::string& dist,
         long long bound, int clusters, const std::vector<int>& ms,
         bool yao_ties) {
        cg::GenSpec spec;
        spec.seed = seed;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.dist = dist_arg(dist);
        spec.bound = bound;
        spec.clusters = clusters;
        spec.ms = ms;
        spec.yao_ties_checked = yao_ties;
        return cg::generate(spec);
      },
      py::arg("seed"), py::arg("n_min") = 1, py::arg("n_max") = 64,
      py::arg("dist") = "uniform", py::arg("bound") = 1000000,
      py::arg("clusters") = 4, py::arg("ms") = std::vector<int>{3},
      py::arg("yao_ties") = false);
  m.def("registered_properties", &cg::registered_properties);
  m.def(
      "run_property",
      [](const std::string& name, std::uint64_t seed, int trials, int n_min,
         int n_max, const std::string& dist, long long bound) {
        cg::GenSpec spec;
        spec.seed = seed;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.dist = dist_arg(dist);
        spec.bound = bound;
        auto r = cg::run_property(name, spec, trials);
        py::list witnesses;
        for (const auto& w : r.witnesses) witnesses.append(coords_list(w));
        return py::dict(py::arg("property") = r.property,
                        py::arg("trials") = r.trials,
                        py::arg("failures") = r.failures,
                        py::arg("failing_trials") = r.failing_trials,
                        py::arg("witnesses") = witnesses);
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("trials") = 100,
      py::arg("n_min") = 1, py::arg("n_max") = 64,
      py::arg("dist") = "uniform", py::arg("bound") = 1000000);
  m.def(
      "minimize",
      [](const cg::PointSet& ps, const std::function<bool(const cg::PointSet&)>& pred) {
        return cg::minimize(ps, pred);
      },
      py::arg("points"), py::arg("still_failing"));

  m.def("parse_document",
        [](const std::string& text, bool validate) {
          cg::Document doc = cg::parse_document(text, validate);
          return py::dict(
              py::arg("version") = doc.version, py::arg("m") = doc.m,
              py::arg("flavor") = cg::to_string(doc.flavor),
              py::arg("mode") =
                  doc.mode == cg::CoordMode::Exact ? "exact" : "float",
              py::arg("points") = doc.points);
        },
        py::arg("text"), py::arg("validate") = false);
  m.def("serialize_document",
        [](const cg::PointSet& ps, int m_cones, const std::string& flavor) {
          cg::Document doc;
          doc.m = m_cones;
          doc.flavor = flavor_arg(flavor);
          doc.mode = ps.mode();
          doc.points = ps;
          return cg::serialize_document(doc);
        },
        py::arg("points"), py::arg("m") = 3, py::arg("flavor") = "theta");
  m.def(
      "render_svg",
      [](const cg::ConeGraph& g, bool cones, bool labels) {
        cg::RenderOptions opts;
        opts.draw_sink_cones = cones;
        opts.labels = labels;
        return cg::render_svg(g, opts);
      },
      py::arg("graph"), py::arg("cones") = false, py::arg("labels") = true);
}
