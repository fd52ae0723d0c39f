#include "polycox/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "polycox/error.hpp"

namespace polycox {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return v;
}

std::string optional_str(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return {};
  if (!it->is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

int rule_ref(const Polygraph2& p, const std::string& id) {
  int r = p.rule_index(id);
  if (r < 0) throw InputError("unknown rule '" + id + "'");
  return r;
}

int cell_ref(const Polygraph31& p, const std::string& id) {
  int c = p.cell_index(id);
  if (c < 0) throw InputError("unknown 3-cell '" + id + "'");
  return c;
}

Json rank_map(const std::map<std::string, int>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::map<std::string, int> rank_map_from(const Json& j, const char* key) {
  std::map<std::string, int> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_object()) throw InputError(std::string("field '") + key + "' must be an object");
  for (const auto& [k, v] : it->items()) {
    if (!v.is_number_integer()) throw InputError("rank of '" + k + "' must be an integer");
    out[k] = v.get<int>();
  }
  return out;
}

}  // namespace

Json to_json(const Polygraph2& p) {
  Json j;
  j["generators"] = p.generators;
  Json rules = Json::array();
  for (const Rule& r : p.rules) {
    Json e;
    e["id"] = r.id;
    e["lhs"] = p.word_string(r.lhs);
    e["rhs"] = p.word_string(r.rhs);
    if (!r.label.empty()) e["label"] = r.label;
    rules.push_back(std::move(e));
  }
  j["rules"] = std::move(rules);
  return j;
}

Polygraph2 polygraph2_from_json(const Json& j) {
  Polygraph2 p;
  for (const Json& g : array(j, "generators")) {
    if (!g.is_string()) throw InputError("generator names must be strings");
    p.generators.push_back(g.get<std::string>());
  }
  for (const Json& r : array(j, "rules")) {
    Rule rule;
    rule.id = str(r, "id");
    rule.lhs = p.parse_word(str(r, "lhs"));
    rule.rhs = p.parse_word(str(r, "rhs"));
    rule.label = optional_str(r, "label");
    p.rules.push_back(std::move(rule));
  }
  p.validate();
  return p;
}

Json to_json(const Polygraph2& p, const Path2& f) {
  Json j;
  j["source"] = p.word_string(f.source);
  Json steps = Json::array();
  for (const Step2& s : f.steps) {
    Json e;
    e["rule"] = p.rules.at(s.rule).id;
    e["dir"] = s.dir;
    e["at"] = s.at;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

Path2 path_from_json(const Polygraph2& p, const Json& j) {
  Path2 f;
  f.source = p.parse_word(str(j, "source"));
  for (const Json& s : array(j, "steps")) {
    Step2 st{rule_ref(p, str(s, "rule")), integer(s, "dir"), integer(s, "at")};
    if (st.dir != 1 && st.dir != -1) throw InputError("step direction must be 1 or -1");
    f.steps.push_back(st);
  }
  path_words(p, f);  // throws StepError when a step does not apply
  return f;
}

Json to_json(const Polygraph31& p) {
  Json j = to_json(p.base);
  Json cells = Json::array();
  for (const ThreeCell& c : p.cells) {
    Json e;
    e["id"] = c.id;
    if (!c.label.empty()) e["label"] = c.label;
    e["src"] = to_json(p.base, c.src);
    e["tgt"] = to_json(p.base, c.tgt);
    cells.push_back(std::move(e));
  }
  j["three_cells"] = std::move(cells);
  return j;
}

Polygraph31 polygraph31_from_json(const Json& j) {
  Polygraph31 p;
  p.base = polygraph2_from_json(j);
  if (j.contains("three_cells")) {
    for (const Json& c : array(j, "three_cells")) {
      ThreeCell cell;
      cell.id = str(c, "id");
      cell.label = optional_str(c, "label");
      cell.src = path_from_json(p.base, field(c, "src"));
      cell.tgt = path_from_json(p.base, field(c, "tgt"));
      p.cells.push_back(std::move(cell));
    }
  }
  p.validate();
  return p;
}

namespace {

Json entries_json(const Polygraph31& p, const std::vector<SphereEntry>& es) {
  Json out = Json::array();
  for (const SphereEntry& e : es) {
    Json j;
    j["cell"] = p.cells.at(e.cell).id;
    j["dir"] = e.dir;
    j["left"] = p.base.word_string(e.left);
    j["right"] = p.base.word_string(e.right);
    j["prefix"] = to_json(p.base, e.prefix);
    j["suffix"] = to_json(p.base, e.suffix);
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<SphereEntry> entries_from(const Polygraph31& p, const Json& j) {
  std::vector<SphereEntry> out;
  if (!j.is_array()) throw InputError("sphere sides must be arrays");
  for (const Json& e : j) {
    SphereEntry s;
    s.cell = cell_ref(p, str(e, "cell"));
    s.dir = integer(e, "dir");
    if (s.dir != 1 && s.dir != -1) throw InputError("entry direction must be 1 or -1");
    s.left = p.base.parse_word(str(e, "left"));
    s.right = p.base.parse_word(str(e, "right"));
    s.prefix = path_from_json(p.base, field(e, "prefix"));
    s.suffix = path_from_json(p.base, field(e, "suffix"));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Json to_json(const Polygraph31& p, const Sphere3& s) {
  Json j;
  j["from"] = to_json(p.base, s.from);
  j["to"] = to_json(p.base, s.to);
  j["lhs"] = entries_json(p, s.lhs);
  j["rhs"] = entries_json(p, s.rhs);
  return j;
}

Sphere3 sphere_from_json(const Polygraph31& p, const Json& j) {
  Sphere3 s;
  s.from = path_from_json(p.base, field(j, "from"));
  s.to = path_from_json(p.base, field(j, "to"));
  s.lhs = entries_from(p, field(j, "lhs"));
  s.rhs = entries_from(p, field(j, "rhs"));
  return s;
}

Json to_json(const Polygraph31& p, const CollapsiblePart& g) {
  Json j;
  Json two = Json::array(), three = Json::array(), spheres = Json::array();
  for (const auto& c : g.two_cells) two.push_back({{"rule", c.rule}, {"generator", c.generator}});
  for (const auto& c : g.three_cells) three.push_back({{"cell", c.cell}, {"rule", c.rule}});
  for (const auto& c : g.spheres) spheres.push_back({{"cell", c.cell}, {"sphere", to_json(p, c.sphere)}});
  j["two_cells"] = std::move(two);
  j["three_cells"] = std::move(three);
  j["spheres"] = std::move(spheres);
  j["order"] = {{"generators", rank_map(g.order.generators)},
                {"rules", rank_map(g.order.rules)},
                {"cells", rank_map(g.order.cells)}};
  return j;
}

CollapsiblePart collapsible_from_json(const Polygraph31& p, const Json& j) {
  CollapsiblePart g;
  if (j.contains("two_cells"))
    for (const Json& c : array(j, "two_cells")) g.two_cells.push_back({str(c, "rule"), str(c, "generator")});
  if (j.contains("three_cells"))
    for (const Json& c : array(j, "three_cells")) g.three_cells.push_back({str(c, "cell"), str(c, "rule")});
  if (j.contains("spheres"))
    for (const Json& c : array(j, "spheres"))
      g.spheres.push_back({sphere_from_json(p, field(c, "sphere")), str(c, "cell")});
  if (j.contains("order")) {
    const Json& o = field(j, "order");
    g.order.generators = rank_map_from(o, "generators");
    g.order.rules = rank_map_from(o, "rules");
    g.order.cells = rank_map_from(o, "cells");
  }
  return g;
}

Json reduction_report(const Reduction& r) {
  Json surviving;
  surviving["generators"] = r.result.base.generators;
  Json rules = Json::array(), cells = Json::array();
  for (const Rule& x : r.result.base.rules) rules.push_back(x.id);
  for (const ThreeCell& c : r.result.cells) cells.push_back(c.id);
  surviving["rules"] = std::move(rules);
  surviving["cells"] = std::move(cells);
  Json removed;
  removed["generators"] = r.removed_generators;
  removed["rules"] = r.removed_rules;
  removed["cells"] = r.removed_cells;
  return {{"removed", std::move(removed)}, {"surviving", std::move(surviving)}};
}

Json to_json(const CoxeterMatrix& m) {
  Json j;
  j["generators"] = m.names;
  Json rows = Json::array();
  for (const auto& row : m.m) {
    Json r = Json::array();
    for (int x : row) r.push_back(x == 0 ? Json(nullptr) : Json(x));
    rows.push_back(std::move(r));
  }
  j["m"] = std::move(rows);
  return j;
}

CoxeterMatrix coxeter_from_json(const Json& j) {
  CoxeterMatrix m;
  for (const Json& g : array(j, "generators")) {
    if (!g.is_string()) throw InputError("generator names must be strings");
    m.names.push_back(g.get<std::string>());
  }
  for (const Json& row : array(j, "m")) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<int> r;
    for (const Json& x : row) {
      // ∞ may be written as null, "inf" or 0.
      if (x.is_null() || (x.is_string() && x.get<std::string>() == "inf")) {
        r.push_back(0);
        continue;
      }
      if (!x.is_number_integer()) throw InputError("matrix entries must be integers, null or \"inf\"");
      r.push_back(x.get<int>());
    }
    m.m.push_back(std::move(r));
  }
  m.validate();
  return m;
}

TerminationOrder parse_order(const Polygraph2& p, const std::string& text) {
  const std::size_t n = p.generators.size();
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
  };
  if (text == "deglex") {
    std::vector<int> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<int>(i);
    return TerminationOrder::deglex(rank);
  }
  if (text.rfind("deglex:", 0) == 0) {
    std::vector<int> prec;
    for (const std::string& name : split(text.substr(7))) {
      int g = p.generator_index(name);
      if (g < 0) throw InputError("order names unknown generator '" + name + "'");
      prec.push_back(g);
    }
    if (prec.size() != n) throw InputError("order must list every generator exactly once");
    return TerminationOrder::deglex_from_precedence(prec, n);
  }
  if (text.rfind("wreath:", 0) == 0) {
    std::vector<int> weight;
    for (const std::string& w : split(text.substr(7))) {
      try {
        weight.push_back(std::stoi(w));
      } catch (const std::exception&) {
        throw InputError("bad weight '" + w + "'");
      }
    }
    if (weight.size() != n) throw InputError("order must give one weight per generator");
    return TerminationOrder::garside(weight);
  }
  throw InputError("unknown order '" + text + "'");
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace polycox
