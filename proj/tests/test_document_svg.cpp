#include "doctest.h"

#include "conegraph/document.hpp"
#include "conegraph/routing.hpp"
#include "conegraph/svg.hpp"

using namespace conegraph;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& pin) {
  std::size_t count = 0, pos = 0;
  while ((pos = hay.find(pin, pos)) != std::string::npos) {
    ++count;
    pos += pin.size();
  }
  return count;
}

const char* kFig2 =
    R"({"version":1,"m":3,"flavor":"theta","mode":"exact","points":[[0,0],[10,1],[6,-20]]})";

}  // namespace

TEST_CASE("canonical documents round-trip byte-identically") {
  std::string canonical = std::string(kFig2) + "\n";
  Document doc = parse_document(canonical);
  CHECK(doc.m == 3);
  CHECK(doc.flavor == Flavor::Theta);
  CHECK(doc.points.size() == 3);
  CHECK(serialize_document(doc) == canonical);
  Document again = parse_document(serialize_document(doc));
  CHECK(serialize_document(again) == canonical);
}

TEST_CASE("decimal and fraction strings parse to exact rationals") {
  Document doc = parse_document(
      R"({"m":3,"points":[["0.1","-2.5"],["1/3",7]]})");
  CHECK(doc.points[0].x.exact_rep().a == Rational(1, 10));
  CHECK(doc.points[0].y.exact_rep().a == Rational(-5, 2));
  CHECK(doc.points[1].x.exact_rep().a == Rational(1, 3));
  CHECK(doc.points[1].y.exact_rep().a == Rational(7));
  // Non-integral exact coordinates serialize as fraction strings.
  std::string text = serialize_document(doc);
  CHECK(text.find("\"1/10\"") != std::string::npos);
  CHECK(text.find("\"-5/2\"") != std::string::npos);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  Document again = parse_document(text);
  CHECK(serialize_document(again) == text);
}

TEST_CASE("document error paths") {
  CHECK_THROWS_AS((void)parse_document("not json"), Error);
  CHECK_THROWS_AS((void)parse_document(R"({"m":3})"), Error);
  CHECK_THROWS_AS(
      (void)parse_document(R"({"m":3,"points":[[0,0],[0,0]]})"), Error);
  try {
    (void)parse_document(R"({"m":3,"points":[[0,0],[0,0]]})");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicatePoint);
  }
  // Raw floats are rejected in exact mode but fine in float mode.
  CHECK_THROWS_AS((void)parse_document(R"({"m":3,"points":[[0.25,1]]})"),
                  Error);
  CHECK_NOTHROW(
      (void)parse_document(R"({"m":3,"mode":"float","points":[[0.25,1]]})"));
  // Validation flag enforces general position.
  CHECK_THROWS_AS((void)parse_document(
                      R"({"m":3,"points":[[0,0],[0,5]]})", true),
                  Error);
  CHECK_NOTHROW((void)parse_document(std::string(kFig2), true));
}

TEST_CASE("float documents build and audit end to end") {
  Document doc = parse_document(
      R"({"m":3,"mode":"float","points":[[0.5,0.25],[10.75,1.5],[6.25,-20.5]]})");
  CHECK(doc.points.mode() == CoordMode::Float);
  auto g = build(doc.points, 3, Flavor::Theta);
  CHECK(g.points().mode() == CoordMode::Float);
  CHECK(connected_components(g).count == 1);
  CHECK(audit_i_edge_crossings(g).clean);
  CHECK(audit_empty_cone_crossings(g).clean);
  // Float coordinates round-trip through the serializer.
  std::string text = serialize_document(doc);
  Document again = parse_document(text);
  CHECK(serialize_document(again) == text);
}

TEST_CASE("svg output is deterministic and structurally sound") {
  Document doc = parse_document(kFig2);
  auto g = build(doc.points, doc.m, doc.flavor);
  RenderOptions opts;
  auto trace = theta_route(g, 0, 2);
  opts.route = &trace;
  std::string svg1 = render_svg(g, opts);
  std::string svg2 = render_svg(g, opts);
  CHECK(svg1 == svg2);
  // Three vertex glyphs, two edge strokes, one route overlay.
  CHECK(count_occurrences(svg1, "<circle ") == 3);
  CHECK(count_occurrences(svg1, "<line ") == 2);
  CHECK(count_occurrences(svg1, "class=\"route\"") == 1);
  CHECK(svg1.find("<svg xmlns") == 0);
  CHECK(count_occurrences(svg1, "</svg>") == 1);
}

TEST_CASE("empty point sets render to a bare frame") {
  Document doc = parse_document(R"({"m":3,"points":[]})");
  auto g = build(doc.points, 3, Flavor::Theta);
  std::string svg = render_svg(g);
  CHECK(count_occurrences(svg, "<circle ") == 0);
  CHECK(count_occurrences(svg, "<line ") == 0);
  CHECK(count_occurrences(svg, "class=\"frame\"") == 1);
}

TEST_CASE("sink markers and cone wedges appear when requested") {
  Document doc = parse_document(kFig2);
  auto g = build(doc.points, doc.m, doc.flavor);
  RenderOptions opts;
  opts.draw_sink_cones = true;
  std::string svg = render_svg(g, opts);
  // fig2 has six empty cones in total (two sinks per class).
  CHECK(count_occurrences(svg, "<path ") == 6);
  CHECK(count_occurrences(svg, "data-sinks=") == 3);
}
