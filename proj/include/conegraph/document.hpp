#pragma once

#include <string>

#include "conegraph/graph.hpp"

namespace conegraph {

const char* to_string(Flavor f);
Flavor flavor_from_string(const std::string& name);

/// On-disk point-set document. Exact coordinates are integers or quoted
/// decimal/fraction strings (parsed to exact rationals); float mode uses
/// plain JSON numbers.
struct Document {
  int version = 1;
  int m = 3;
  Flavor flavor = Flavor::Theta;
  CoordMode mode = CoordMode::Exact;
  PointSet points;
};

/// Parses the JSON document; with validate_strict, also enforces the
/// general-position assumption for the document's m.
Document parse_document(const std::string& json_text,
                        bool validate_strict = false);

/// Canonical single-line JSON: fixed key order, integers kept as integers,
/// other exact coordinates as "n/d" strings. parse(serialize(d)) == d and
/// serialize(parse(t)) == t on canonical inputs.
std::string serialize_document(const Document& doc);

Document read_document_file(const std::string& path,
                            bool validate_strict = false);
void write_document_file(const Document& doc, const std::string& path);

}  // namespace conegraph
