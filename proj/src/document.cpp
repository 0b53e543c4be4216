#include "conegraph/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace conegraph {

using json = nlohmann::ordered_json;

const char* to_string(Flavor f) {
  return f == Flavor::Theta ? "theta" : "yao";
}

Flavor flavor_from_string(const std::string& name) {
  if (name == "theta") return Flavor::Theta;
  if (name == "yao") return Flavor::Yao;
  fail(ErrorCode::ParseError, "unknown flavor '" + name + "'");
}

namespace {

Rational coord_to_rational(const json& v, const char* which, std::size_t row) {
  auto where = [&] {
    return std::string(which) + " coordinate of point " + std::to_string(row);
  };
  if (v.is_number_integer())
    return Rational(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_float())
    fail(ErrorCode::ParseError,
         where() + ": exact documents take integers or quoted decimals, "
                   "not raw floats");
  fail(ErrorCode::ParseError, where() + " has an unsupported type");
}

double coord_to_double(const json& v, const char* which, std::size_t row) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string())
    return static_cast<double>(rational_from_string(v.get<std::string>()));
  fail(ErrorCode::ParseError, std::string(which) + " coordinate of point " +
                                  std::to_string(row) +
                                  " has an unsupported type");
}

}  // namespace

Document parse_document(const std::string& json_text, bool validate_strict) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ParseError, "document is not an object");

  Document doc;
  doc.version = j.value("version", 1);
  if (doc.version != 1)
    fail(ErrorCode::ParseError,
         "unsupported version " + std::to_string(doc.version));
  doc.m = j.value("m", 3);
  if (doc.m < 2) fail(ErrorCode::ParseError, "m must be at least 2");
  doc.flavor = flavor_from_string(j.value("flavor", "theta"));
  std::string mode = j.value("mode", "exact");
  if (mode != "exact" && mode != "float")
    fail(ErrorCode::ParseError, "mode must be 'exact' or 'float'");
  doc.mode = mode == "exact" ? CoordMode::Exact : CoordMode::Float;

  if (!j.contains("points") || !j["points"].is_array())
    fail(ErrorCode::ParseError, "missing points array");
  if (doc.mode == CoordMode::Exact) {
    std::vector<std::pair<Rational, Rational>> coords;
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      const json& entry = j["points"][i];
      if (!entry.is_array() || entry.size() != 2)
        fail(ErrorCode::ParseError,
             "point " + std::to_string(i) + " is not an [x, y] pair");
      coords.emplace_back(coord_to_rational(entry[0], "x", i),
                          coord_to_rational(entry[1], "y", i));
    }
    doc.points = PointSet::from_rationals(coords);
  } else {
    std::vector<std::pair<double, double>> coords;
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      const json& entry = j["points"][i];
      if (!entry.is_array() || entry.size() != 2)
        fail(ErrorCode::ParseError,
             "point " + std::to_string(i) + " is not an [x, y] pair");
      coords.emplace_back(coord_to_double(entry[0], "x", i),
                          coord_to_double(entry[1], "y", i));
    }
    doc.points = PointSet::from_doubles(coords);
  }
  if (validate_strict) {
    const int ms[] = {doc.m};
    require_general_position(doc.points, ms,
                             doc.flavor == Flavor::Yao);
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json j;
  j["version"] = doc.version;
  j["m"] = doc.m;
  j["flavor"] = to_string(doc.flavor);
  j["mode"] = doc.mode == CoordMode::Exact ? "exact" : "float";
  json pts = json::array();
  for (const auto& p : doc.points.points()) {
    json entry = json::array();
    if (doc.mode == CoordMode::Exact) {
      for (const Scalar* s : {&p.x, &p.y}) {
        const auto& e = s->exact_rep();
        if (e.b != 0)
          fail(ErrorCode::Internal, "document coordinates must be rational");
        const Rational& r = e.a;
        if (boost::multiprecision::denominator(r) == 1 &&
            boost::multiprecision::numerator(r) >=
                std::numeric_limits<std::int64_t>::min() &&
            boost::multiprecision::numerator(r) <=
                std::numeric_limits<std::int64_t>::max()) {
          entry.push_back(static_cast<std::int64_t>(
              boost::multiprecision::numerator(r)));
        } else {
          entry.push_back(rational_to_string(r));
        }
      }
    } else {
      entry.push_back(p.x.to_double());
      entry.push_back(p.y.to_double());
    }
    pts.push_back(std::move(entry));
  }
  j["points"] = std::move(pts);
  return j.dump() + "\n";
}

Document read_document_file(const std::string& path, bool validate_strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), validate_strict);
}

void write_document_file(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << serialize_document(doc);
}

}  // namespace conegraph
