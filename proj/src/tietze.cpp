#include "polycox/tietze.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "polycox/error.hpp"

namespace polycox {

namespace {

std::optional<int> rank_of(const std::map<std::string, int>& m, const std::string& id) {
  auto it = m.find(id);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

Path2 boundary_loop(const Polygraph2& b, const ThreeCell& c) {
  return compose(b, c.src, inverse(b, c.tgt));
}

// Position of the unique step on `rule` in the loop, or -1.
int unique_occurrence(const Polygraph2& b, const Path2& loop, int rule, bool& unwhiskered) {
  int found = -1, count = 0;
  auto words = path_words(b, loop);
  for (std::size_t i = 0; i < loop.steps.size(); ++i) {
    const Step2& s = loop.steps[i];
    if (s.rule != rule) continue;
    ++count;
    found = static_cast<int>(i);
    unwhiskered = s.at == 0 && consumed(b, s) == static_cast<int>(words[i].size());
  }
  return count == 1 ? found : -1;
}

}  // namespace

std::vector<std::string> validate_collapsible(const Polygraph31& p, const CollapsiblePart& g) {
  std::vector<std::string> v;
  const Polygraph2& b = p.base;
  const OrderWitness& ord = g.order;

  std::set<std::string> red_gens, red_rules, red_cells, col_rules, col_cells;
  for (const auto& e : g.two_cells) {
    if (!red_gens.insert(e.generator).second)
      v.push_back("generator '" + e.generator + "' is eliminated twice");
    if (!col_rules.insert(e.rule).second) v.push_back("rule '" + e.rule + "' is listed twice");
  }
  for (const auto& e : g.three_cells) {
    if (!red_rules.insert(e.rule).second) v.push_back("rule '" + e.rule + "' is eliminated twice");
    if (!col_cells.insert(e.cell).second) v.push_back("3-cell '" + e.cell + "' is listed twice");
  }
  for (const auto& e : g.spheres)
    if (!red_cells.insert(e.cell).second) v.push_back("3-cell '" + e.cell + "' is eliminated twice");

  // A redundant cell may not also serve as a collapsible cell.
  for (const std::string& r : red_rules)
    if (col_rules.count(r)) v.push_back("rule '" + r + "' is both collapsible and redundant");
  for (const std::string& c : red_cells)
    if (col_cells.count(c)) v.push_back("3-cell '" + c + "' is both collapsible and redundant");

  for (std::size_t i = 0; i < g.two_cells.size(); ++i) {
    const auto& e = g.two_cells[i];
    const std::string where = "two_cells[" + std::to_string(i) + "]: ";
    int r = b.rule_index(e.rule), x = b.generator_index(e.generator);
    if (r < 0 || x < 0) {
      v.push_back(where + "unknown rule or generator");
      continue;
    }
    const Rule& rule = b.rules[r];
    const Word* other = nullptr;
    if (rule.lhs == Word{x}) other = &rule.rhs;
    else if (rule.rhs == Word{x}) other = &rule.lhs;
    if (!other || std::count(other->begin(), other->end(), x)) {
      v.push_back(where + "rule '" + e.rule + "' does not define generator '" + e.generator + "'");
      continue;
    }
    auto rx = rank_of(ord.generators, e.generator);
    for (int y : *other) {
      auto ry = rank_of(ord.generators, b.generators[y]);
      if (!rx || !ry || *rx <= *ry)
        v.push_back(where + "generator '" + e.generator + "' does not outrank '" +
                    b.generators[y] + "'");
    }
  }

  for (std::size_t i = 0; i < g.three_cells.size(); ++i) {
    const auto& e = g.three_cells[i];
    const std::string where = "three_cells[" + std::to_string(i) + "]: ";
    int c = p.cell_index(e.cell), r = b.rule_index(e.rule);
    if (c < 0 || r < 0) {
      v.push_back(where + "unknown 3-cell or rule");
      continue;
    }
    Path2 loop = boundary_loop(b, p.cells[c]);
    bool bare = false;
    if (unique_occurrence(b, loop, r, bare) < 0 || !bare) {
      v.push_back(where + "rule '" + e.rule + "' does not occur exactly once, unwhiskered, in '" +
                  e.cell + "'");
      continue;
    }
    auto rr = rank_of(ord.rules, e.rule);
    std::set<int> others;
    for (const Step2& s : loop.steps)
      if (s.rule != r) others.insert(s.rule);
    for (int o : others) {
      auto ro = rank_of(ord.rules, b.rules[o].id);
      if (!rr || !ro || *rr <= *ro)
        v.push_back(where + "rule '" + e.rule + "' does not outrank '" + b.rules[o].id + "'");
    }
  }

  for (std::size_t i = 0; i < g.spheres.size(); ++i) {
    const auto& e = g.spheres[i];
    const std::string where = "spheres[" + std::to_string(i) + "]: ";
    int c = p.cell_index(e.cell);
    if (c < 0) {
      v.push_back(where + "unknown 3-cell '" + e.cell + "'");
      continue;
    }
    if (std::string d = sphere_defect(p, e.sphere); !d.empty()) {
      v.push_back(where + d);
      continue;
    }
    int count = 0;
    bool bare = true;
    std::set<int> others;
    for (const auto& side : {cancel_entries(p, e.sphere.lhs), cancel_entries(p, e.sphere.rhs)})
      for (const SphereEntry& x : side) {
        if (x.cell == c) {
          ++count;
          bare = bare && x.left.empty() && x.right.empty();
        } else {
          others.insert(x.cell);
        }
      }
    if (count != 1 || !bare) {
      v.push_back(where + "3-cell '" + e.cell + "' does not occur exactly once, unwhiskered");
      continue;
    }
    auto rc = rank_of(ord.cells, e.cell);
    for (int o : others) {
      auto ro = rank_of(ord.cells, p.cells[o].id);
      if (!rc || !ro || *rc <= *ro)
        v.push_back(where + "3-cell '" + e.cell + "' does not outrank '" + p.cells[o].id + "'");
    }
  }
  return v;
}

namespace {

class Projector {
 public:
  Projector(const Polygraph31& p, const CollapsiblePart& g) : p_(p), b_(p.base) {
    const int ng = static_cast<int>(b_.generators.size());
    const int nr = static_cast<int>(b_.rules.size());
    defining_rule_.assign(ng, -1);
    for (const auto& e : g.two_cells) {
      int x = b_.generator_index(e.generator), r = b_.rule_index(e.rule);
      defining_rule_[x] = r;
      status_.emplace(r, Status::Identity);
    }
    for (const auto& e : g.three_cells) {
      int r = b_.rule_index(e.rule);
      status_.emplace(r, Status::FromCell);
      defining_cell_.emplace(r, p.cell_index(e.cell));
    }
    new_gen_.assign(ng, -1);
    for (int x = 0; x < ng; ++x)
      if (defining_rule_[x] < 0) {
        new_gen_[x] = static_cast<int>(out_.generators.size());
        out_.generators.push_back(b_.generators[x]);
      }
    gen_image_.resize(ng);
    for (int x = 0; x < ng; ++x) gen_image_[x] = generator_image(x, 0);
    new_rule_.assign(nr, -1);
    for (int r = 0; r < nr; ++r) {
      if (status_.count(r)) continue;
      Rule nr_rule = b_.rules[r];
      nr_rule.lhs = word(nr_rule.lhs);
      nr_rule.rhs = word(nr_rule.rhs);
      if (nr_rule.lhs.empty())
        throw PreconditionError("rule '" + nr_rule.id + "' would rewrite the empty word");
      new_rule_[r] = static_cast<int>(out_.rules.size());
      out_.rules.push_back(std::move(nr_rule));
    }
    rule_image_.resize(nr);
  }

  const Polygraph2& base() const { return out_; }
  const std::vector<Word>& generator_images() const { return gen_image_; }
  bool generator_kept(int x) const { return new_gen_[x] >= 0; }
  bool rule_kept(int r) const { return new_rule_[r] >= 0; }

  Word word(const Word& w) const {
    Word out;
    for (int x : w) out.insert(out.end(), gen_image_[x].begin(), gen_image_[x].end());
    return out;
  }

  const Path2& rule_image(int r, std::size_t depth = 0) {
    if (rule_image_[r]) return *rule_image_[r];
    if (depth > b_.rules.size())
      throw PreconditionError("elimination of rule '" + b_.rules[r].id + "' does not terminate");
    const Rule& rule = b_.rules[r];
    Path2 img;
    auto st = status_.find(r);
    if (st == status_.end()) {
      img = single_step(word(rule.lhs), new_rule_[r], 1, 0);
    } else if (st->second == Status::Identity) {
      img = identity_path(word(rule.lhs));
    } else {
      const ThreeCell& cell = p_.cells[defining_cell_.at(r)];
      Path2 loop = boundary_loop(b_, cell);
      bool bare = false;
      const int k = unique_occurrence(b_, loop, r, bare);
      auto words = path_words(b_, loop);
      Path2 before{loop.source, {loop.steps.begin(), loop.steps.begin() + k}};
      Path2 after{words[k + 1], {loop.steps.begin() + k + 1, loop.steps.end()}};
      Path2 composite = loop.steps[k].dir > 0
                            ? compose(b_, inverse(b_, before), inverse(b_, after))
                            : compose(b_, after, before);
      img = path(composite, depth + 1);
    }
    rule_image_[r] = normalize_path(out_, img);
    return *rule_image_[r];
  }

  Path2 path(const Path2& f, std::size_t depth = 0) {
    Path2 out = identity_path(word(f.source));
    Word cur = f.source;
    for (const Step2& s : f.steps) {
      const int len = consumed(b_, s);
      Word left(cur.begin(), cur.begin() + s.at);
      Word right(cur.begin() + s.at + len, cur.end());
      Path2 img = rule_image(s.rule, depth);
      if (s.dir < 0) img = inverse(out_, img);
      out = compose(out_, out, whisker(word(left), img, word(right)));
      cur = apply_step(cur, b_, s);
    }
    return normalize_path(out_, out);
  }

 private:
  enum class Status { Identity, FromCell };

  Word generator_image(int x, std::size_t depth) {
    if (depth > b_.generators.size())
      throw PreconditionError("elimination of generator '" + b_.generators[x] +
                              "' does not terminate");
    if (defining_rule_[x] < 0) return Word{new_gen_[x]};
    const Rule& r = b_.rules[defining_rule_[x]];
    const Word& other = r.lhs == Word{x} ? r.rhs : r.lhs;
    Word out;
    for (int y : other) {
      Word part = generator_image(y, depth + 1);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  const Polygraph31& p_;
  const Polygraph2& b_;
  Polygraph2 out_;
  std::vector<int> defining_rule_, new_gen_, new_rule_;
  std::map<int, Status> status_;
  std::map<int, int> defining_cell_;
  std::vector<Word> gen_image_;
  std::vector<std::optional<Path2>> rule_image_;
};

}  // namespace

Reduction homotopical_reduce(const Polygraph31& p, const CollapsiblePart& g) {
  if (auto v = validate_collapsible(p, g); !v.empty()) {
    std::string msg = "collapsible part is invalid:";
    for (const std::string& s : v) msg += "\n  " + s;
    throw PreconditionError(msg);
  }
  Projector pi(p, g);
  Reduction out;
  out.result.base = pi.base();
  out.generator_image = pi.generator_images();
  for (std::size_t x = 0; x < p.base.generators.size(); ++x)
    if (!pi.generator_kept(static_cast<int>(x)))
      out.removed_generators.push_back(p.base.generators[x]);
  for (std::size_t r = 0; r < p.base.rules.size(); ++r) {
    out.rule_image.push_back(pi.rule_image(static_cast<int>(r)));
    if (!pi.rule_kept(static_cast<int>(r))) out.removed_rules.push_back(p.base.rules[r].id);
  }
  std::set<std::string> gone;
  for (const auto& e : g.three_cells) gone.insert(e.cell);
  for (const auto& e : g.spheres) gone.insert(e.cell);
  for (const ThreeCell& c : p.cells) {
    if (gone.count(c.id)) {
      out.removed_cells.push_back(c.id);
      continue;
    }
    ThreeCell nc = c;
    nc.src = pi.path(c.src);
    nc.tgt = pi.path(c.tgt);
    out.result.cells.push_back(std::move(nc));
  }
  return out;
}

Polygraph31 nielsen_invert_rule(const Polygraph31& p, int rule, std::string new_id,
                                std::string new_label) {
  if (rule < 0 || static_cast<std::size_t>(rule) >= p.base.rules.size())
    throw InputError("unknown rule index " + std::to_string(rule));
  Polygraph31 out = p;
  Rule& r = out.base.rules[rule];
  std::swap(r.lhs, r.rhs);
  if (r.lhs.empty()) throw PreconditionError("inverse of rule '" + r.id + "' rewrites the empty word");
  if (!new_id.empty()) r.id = std::move(new_id);
  if (!new_label.empty() || !r.label.empty()) r.label = std::move(new_label);
  for (ThreeCell& c : out.cells)
    for (Path2* f : {&c.src, &c.tgt})
      for (Step2& s : f->steps)
        if (s.rule == rule) s.dir = -s.dir;
  return out;
}

Polygraph31 adjoin_rule(const Polygraph31& p, Rule r, const Path2& witness,
                        const std::string& cell_id) {
  if (witness.source != r.lhs || target(p.base, witness) != r.rhs)
    throw PreconditionError("witness is not parallel to rule '" + r.id + "'");
  Polygraph31 out = p;
  out.base.rules.push_back(std::move(r));
  const int id = static_cast<int>(out.base.rules.size()) - 1;
  out.cells.push_back({cell_id, witness, single_step(witness.source, id, 1, 0), ""});
  out.validate();
  return out;
}

int FiniteMonoid::unit() const {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("monoid has no elements");
  if (static_cast<int>(table.size()) != n) throw InputError("multiplication table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("multiplication is not associative at (" + names[a] + ", " +
                           names[b] + ", " + names[c] + ")");
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) return e;
  }
  throw InputError("multiplication has no unit");
}

namespace {

std::string gamma_id(const FiniteMonoid& m, int u, int v) {
  return "gamma[" + m.names[u] + "|" + m.names[v] + "]";
}

}  // namespace

Polygraph31 standard_coherent_presentation(const FiniteMonoid& m) {
  const int one = m.unit();
  const int n = static_cast<int>(m.names.size());
  Polygraph31 out;
  Polygraph2& b = out.base;
  b.generators = m.names;
  auto gamma = [&](int u, int v) { return u * n + v; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      b.rules.push_back({gamma_id(m, u, v), {u, v}, {m.table[u][v]},
                         "γ_{" + m.names[u] + "," + m.names[v] + "}"});
  const int iota = static_cast<int>(b.rules.size());
  b.rules.push_back({"iota", {one}, {}, "ι"});
  b.validate();

  auto step = [](int r, int dir, int at) { return Step2{r, dir, at}; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        const int uv = m.table[u][v], vw = m.table[v][w];
        ThreeCell c;
        c.id = "alpha[" + m.names[u] + "|" + m.names[v] + "|" + m.names[w] + "]";
        c.label = "α_{" + m.names[u] + "," + m.names[v] + "," + m.names[w] + "}";
        c.src = Path2{{u, v, w}, {step(gamma(u, v), 1, 0), step(gamma(uv, w), 1, 0)}};
        c.tgt = Path2{{u, v, w}, {step(gamma(v, w), 1, 1), step(gamma(u, vw), 1, 0)}};
        out.cells.push_back(std::move(c));
      }
  for (int u = 0; u < n; ++u) {
    out.cells.push_back({"lambda[" + m.names[u] + "]",
                         Path2{{u}, {step(iota, -1, 0), step(gamma(one, u), 1, 0)}},
                         identity_path({u}), "λ_" + m.names[u]});
  }
  for (int u = 0; u < n; ++u) {
    out.cells.push_back({"rho[" + m.names[u] + "]",
                         Path2{{u}, {step(iota, -1, 1), step(gamma(u, one), 1, 0)}},
                         identity_path({u}), "ρ_" + m.names[u]});
  }
  out.validate();
  return out;
}

CollapsiblePart standard_reduction_part(const Polygraph31& std3, const FiniteMonoid& m) {
  const int one = m.unit();
  const int n = static_cast<int>(m.names.size());
  const Polygraph2& b = std3.base;
  CollapsiblePart g;
  const std::string& unit_name = m.names[one];

  g.two_cells.push_back({"iota", unit_name});
  for (int u = 0; u < n; ++u) g.order.generators[m.names[u]] = u == one ? 1 : 0;

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      g.order.rules[gamma_id(m, u, v)] = (u == one || v == one) ? 2 : 0;
  g.order.rules["iota"] = 1;
  for (int u = 0; u < n; ++u) {
    g.three_cells.push_back({"lambda[" + m.names[u] + "]", gamma_id(m, one, u)});
    if (u != one) g.three_cells.push_back({"rho[" + m.names[u] + "]", gamma_id(m, u, one)});
    g.order.cells["lambda[" + m.names[u] + "]"] = 0;
    g.order.cells["rho[" + m.names[u] + "]"] = 0;
  }

  const int iota = b.rule_index("iota");
  auto gamma = [&](int u, int v) { return b.rule_index(gamma_id(m, u, v)); };
  auto lambda = [&](int u) { return std3.cell_index("lambda[" + m.names[u] + "]"); };
  auto rho = [&](int u) { return std3.cell_index("rho[" + m.names[u] + "]"); };
  auto del = [&](int at) { return Step2{iota, 1, at}; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (u != one && v != one && w != one) continue;
        const std::string id = "alpha[" + m.names[u] + "|" + m.names[v] + "|" + m.names[w] + "]";
        const int a = std3.cell_index(id);
        g.order.cells[id] = 1;
        const ThreeCell& cell = std3.cells[a];
        Sphere3 s;
        s.from = cell.src;
        s.to = cell.tgt;
        s.lhs.push_back({a, 1, {}, {}, identity_path(cell.src.source), identity_path(target(b, cell.src))});
        const Word src{u, v, w};
        if (u == one) {
          const int vw = m.table[v][w];
          s.rhs.push_back({lambda(v), 1, {}, {w}, Path2{src, {del(0)}},
                           Path2{{v, w}, {Step2{gamma(v, w), 1, 0}}}});
          s.rhs.push_back({lambda(vw), -1, {}, {}, Path2{src, {Step2{gamma(v, w), 1, 1}, del(0)}},
                           identity_path({vw})});
        } else if (v == one) {
          s.rhs.push_back({rho(u), 1, {}, {w}, Path2{src, {del(1)}},
                           Path2{{u, w}, {Step2{gamma(u, w), 1, 0}}}});
          s.rhs.push_back({lambda(w), -1, {u}, {}, Path2{src, {del(1)}},
                           Path2{{u, w}, {Step2{gamma(u, w), 1, 0}}}});
        } else {
          const int uv = m.table[u][v];
          s.rhs.push_back({rho(uv), 1, {}, {}, Path2{src, {del(2), Step2{gamma(u, v), 1, 0}}},
                           identity_path({uv})});
          s.rhs.push_back({rho(v), -1, {u}, {}, Path2{src, {del(2)}},
                           Path2{{u, v}, {Step2{gamma(u, v), 1, 0}}}});
        }
        g.spheres.push_back({std::move(s), id});
      }
  return g;
}

Polygraph31 reduced_standard_presentation(const FiniteMonoid& m) {
  Polygraph31 std3 = standard_coherent_presentation(m);
  Reduction first = homotopical_reduce(std3, standard_reduction_part(std3, m));
  // ρ_1 is left as a 3-cell between identities of the empty word.
  const std::string rho1 = "rho[" + m.names[m.unit()] + "]";
  const int c = first.result.cell_index(rho1);
  if (c < 0) return first.result;
  CollapsiblePart g;
  Sphere3 s{identity_path({}), identity_path({}),
            {SphereEntry{c, 1, {}, {}, identity_path({}), identity_path({})}}, {}};
  g.spheres.push_back({std::move(s), rho1});
  g.order.cells[rho1] = 1;
  return homotopical_reduce(first.result, g).result;
}

}  // namespace polycox
