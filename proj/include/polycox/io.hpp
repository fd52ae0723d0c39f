#pragma once

#include <string>

#include "json.hpp"
#include "polycox/coxeter.hpp"
#include "polycox/tietze.hpp"

namespace polycox {

using Json = nlohmann::ordered_json;

// Words are strings of generator names, dot-separated when a name is longer
// than one letter. Steps and entries refer to rules and cells by id.
// All readers throw InputError on malformed documents.

Json to_json(const Polygraph2& p);
Polygraph2 polygraph2_from_json(const Json& j);

Json to_json(const Polygraph2& p, const Path2& f);
Path2 path_from_json(const Polygraph2& p, const Json& j);

Json to_json(const Polygraph31& p);
Polygraph31 polygraph31_from_json(const Json& j);

Json to_json(const Polygraph31& p, const Sphere3& s);
Sphere3 sphere_from_json(const Polygraph31& p, const Json& j);

Json to_json(const Polygraph31& p, const CollapsiblePart& g);
CollapsiblePart collapsible_from_json(const Polygraph31& p, const Json& j);

// {"removed": {...}, "surviving": {...}} with generator, rule and cell ids.
Json reduction_report(const Reduction& r);

// ∞ is written as null; null, "inf" and 0 are all read as ∞.
Json to_json(const CoxeterMatrix& m);
CoxeterMatrix coxeter_from_json(const Json& j);

// "deglex" (declaration order, later letters larger), "deglex:t,s,a"
// (largest first) or "wreath:w1,w2,..." (weights per generator).
TerminationOrder parse_order(const Polygraph2& p, const std::string& text);

// Reads a whole file ("-" for stdin) and parses it as JSON.
Json read_json_file(const std::string& path);

}  // namespace polycox
