#pragma once

#include <map>
#include <string>

#include "lconvex/cat.hpp"

namespace lconvex::io {

using nlohmann::json;

// Document forms:
//   quantale: {"size": n, "leq": [[0/1,..],..], "tensor": [[idx,..],..], "labels": [..]}
//             or a builder {"chain": {"n": 3, "flavor": "godel"|"lukasiewicz"}}
//   space:    {"quantale": <name or inline>, "points": ["a","b"],
//              "generators": [{"degrees": [..]},..], "stratified": true}
//             or explicit {"convexes": [{"degrees": [..]},..]}
//   map:      {"source": <name or inline space>, "target": .., "points": [..]}
// A file holds one {"name": .., "quantale"|"space"|"map": ..} object or an
// array of them; anonymous objects are named after the file stem.

json quantale_to_json(const Quantale& q);
QuantalePtr quantale_from_json(const json& doc);

json lset_to_json(const LSet& s);
std::vector<Elem> degrees_from_json(const json& doc);

json space_to_json(const LConvexSpace& x, const std::vector<std::string>* labels = nullptr);
json map_to_json(const SpaceMap& f);

/// Named objects loaded from document files. Spaces and maps may reference
/// previously registered quantales/spaces by name.
struct Workspace {
  std::map<std::string, QuantalePtr> quantales;
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, std::vector<std::string>> space_labels;
  std::map<std::string, SpaceMap> maps;

  /// Registers every object in the file; returns the names registered,
  /// in document order. Malformed documents raise ParseError; objects
  /// failing mathematical validation raise their named violation.
  std::vector<std::string> load_file(const std::string& path);
  std::vector<std::string> load_json(const json& doc, const std::string& default_name);

  QuantalePtr resolve_quantale(const json& ref);
  SpacePtr resolve_space(const json& ref);

  /// Lookup by registered name, or load the path on the fly if the argument
  /// names an existing file.
  SpacePtr space(const std::string& name_or_path);
  const SpaceMap& map(const std::string& name_or_path);
  const std::vector<std::string>& labels_for(const SpacePtr& space) const;
};

/// Full per-space report: point hulls, irr, S0, sobriety verdict with
/// witness, eta, and a reloadable sobrification document.
json analyze_report(const SpacePtr& x, const std::vector<std::string>* labels = nullptr);

json sober_verdict_to_json(const SoberVerdict& verdict);

}  // namespace lconvex::io
