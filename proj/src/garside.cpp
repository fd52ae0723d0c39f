#include "polycox/garside.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "polycox/error.hpp"

namespace polycox {

namespace {

std::string join_names(const CoxeterGroup& g, const std::vector<int>& idx, char sep) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += sep;
    out += g.name(idx[i]);
  }
  return out;
}

bool additive(const CoxeterGroup& g, const std::vector<int>& xs) {
  int prod = g.identity(), sum = 0;
  for (int x : xs) {
    prod = g.mul(prod, x);
    sum += g.length(x);
  }
  return g.length(prod) == sum;
}

Step2 fwd(int rule, int at) { return {rule, 1, at}; }

}  // namespace

GarsidePresentation garside_presentation(const CoxeterGroup& g) {
  GarsidePresentation out;
  const int n = static_cast<int>(g.size());
  for (int u = 1; u < n; ++u) {
    out.base.generators.push_back(g.name(u));
    out.element.push_back(u);
  }
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) {
      if (!g.is_reduced_product(u, v)) continue;
      Rule r;
      r.id = "alpha[" + g.name(u) + "|" + g.name(v) + "]";
      r.label = "α_{" + g.name(u) + "," + g.name(v) + "}";
      r.lhs = {out.generator(u), out.generator(v)};
      r.rhs = {out.generator(g.mul(u, v))};
      out.alpha[{u, v}] = static_cast<int>(out.base.rules.size());
      out.base.rules.push_back(std::move(r));
    }
  return out;
}

std::string tag_id(const CoxeterGroup& g, const FamilyTag& t) {
  return std::string(1, t.family) + "[" + join_names(g, t.index, '|') + "]";
}

namespace {

// What every rule of the completed presentation does, in W terms.
struct Shape {
  bool beta = false;
  int u = 0, v = 0, w = 0;  // α: u|v ⇒ uv;  β: u|vw ⇒ uv|w
};

struct GarsideState {
  const CoxeterGroup& g;
  const GarsidePresentation& gar2;
  std::vector<Shape> shapes;
  std::map<std::tuple<int, int, int>, int> beta;
  mutable std::vector<FamilyTag> produced;  // one per joined branching

  int elem(Gen x) const { return x + 1; }

  int alpha_rule(int u, int v) const {
    auto it = gar2.alpha.find({u, v});
    return it == gar2.alpha.end() ? -1 : it->second;
  }
  int beta_rule(int u, int v, int w) const {
    auto it = beta.find({u, v, w});
    return it == beta.end() ? -1 : it->second;
  }
  int need_alpha(int u, int v) const {
    int r = alpha_rule(u, v);
    if (r < 0) throw PreconditionError("classification: missing α_{" + g.name(u) + "," + g.name(v) + "}");
    return r;
  }
  int need_beta(int u, int v, int w) const {
    int r = beta_rule(u, v, w);
    if (r < 0)
      throw PreconditionError("classification: missing β_{" + g.name(u) + "," + g.name(v) + "," +
                              g.name(w) + "}");
    return r;
  }

  Joined join(const Polygraph2& cur, const Branching& b) const;
  Joined tagged(const Word& source, std::vector<Step2> src, std::vector<Step2> tgt, char family,
                std::vector<int> index) const;
  Joined join_overlap(const Branching& b) const;
  Joined join_inclusion(const Branching& b) const;
};

Joined GarsideState::tagged(const Word& source, std::vector<Step2> src, std::vector<Step2> tgt,
                            char family, std::vector<int> index) const {
  Joined j;
  j.src = {source, std::move(src)};
  j.tgt = {source, std::move(tgt)};
  FamilyTag t{family, std::move(index)};
  j.tag = tag_id(g, t);
  produced.push_back(std::move(t));
  return j;
}

Joined GarsideState::join(const Polygraph2& cur, const Branching& b) const {
  if (cur.rules.size() != shapes.size())
    throw PreconditionError("classification: rule table out of sync");
  if (b.source.size() == 3 && b.left.at == 0 && b.right.at == 1) return join_overlap(b);
  if (b.source.size() == 2 && b.left.at == 0 && b.right.at == 0) return join_inclusion(b);
  throw PreconditionError("classification: branching of unexpected shape");
}

Joined GarsideState::join_overlap(const Branching& b) const {
  const Shape& L = shapes[b.left.rule];
  const Shape& R = shapes[b.right.rule];
  const Word& src = b.source;
  if (!L.beta && !R.beta) {
    const int u = L.u, v = L.v, w = R.v;
    if (additive(g, {u, v, w})) {
      return tagged(src, {b.left, fwd(need_alpha(g.mul(u, v), w), 0)},
                    {b.right, fwd(need_alpha(u, g.mul(v, w)), 0)}, 'A', {u, v, w});
    }
    return tagged(src, {b.left}, {b.right}, 'B', {u, v, w});
  }
  if (!L.beta && R.beta) {
    const int u = L.u, v = L.v, w = R.v, x = R.w;
    const int vw = g.mul(v, w);
    if (alpha_rule(u, vw) >= 0) {
      return tagged(src, {b.left, fwd(need_beta(g.mul(u, v), w, x), 0)},
                    {b.right, fwd(need_alpha(u, vw), 0)}, 'C', {u, v, w, x});
    }
    return tagged(src, {b.left},
                  {b.right, fwd(need_beta(u, v, w), 0), fwd(need_alpha(w, x), 1)}, 'D',
                  {u, v, w, x});
  }
  if (L.beta && !R.beta) {
    const int u = L.u, v = L.v, w = L.w, x = R.v;
    return tagged(src, {b.left, fwd(need_alpha(w, x), 1)},
                  {b.right, fwd(need_beta(u, v, g.mul(w, x)), 0)}, 'E', {u, v, w, x});
  }
  const int u = L.u, v = L.v, w = L.w, x = R.v, y = R.w;
  const int xy = g.mul(x, y), wx = g.mul(w, x);
  if (alpha_rule(w, xy) >= 0) {
    return tagged(src, {b.left, fwd(need_alpha(w, xy), 1)},
                  {b.right, fwd(need_beta(u, v, wx), 0), fwd(need_alpha(wx, y), 1)}, 'F',
                  {u, v, w, x, y});
  }
  return tagged(src, {b.left, fwd(need_beta(w, x, y), 1)},
                {b.right, fwd(need_beta(u, v, wx), 0)}, 'G', {u, v, w, x, y});
}

Joined GarsideState::join_inclusion(const Branching& b) const {
  const Shape& L = shapes[b.left.rule];
  const Shape& R = shapes[b.right.rule];
  if (!L.beta || !R.beta) throw PreconditionError("classification: α rule with a shared source");
  const int u = L.u, z = elem(b.source[1]);
  const int v1 = L.v, w1 = L.w, v2 = R.v, w2 = R.w;
  // The least common multiple of v1 and v2 among the left divisors of z.
  int m = -1;
  for (int x = 0; x < static_cast<int>(g.size()); ++x) {
    if (!g.left_divides(v1, x) || !g.left_divides(v2, x) || !g.left_divides(x, z)) continue;
    if (m < 0 || g.length(x) < g.length(m)) m = x;
  }
  if (m < 0) throw PreconditionError("classification: no common multiple below the source");
  const int x1 = g.complement(v1, m), x2 = g.complement(v2, m), y = g.complement(m, z);
  auto side = [&](int v, int w, int x) {
    std::vector<Step2> s{fwd(need_beta(u, v, w), 0)};
    if (x != g.identity()) s.push_back(fwd(need_beta(g.mul(u, v), x, y), 0));
    return s;
  };
  std::vector<Step2> p1 = side(v1, w1, x1), p2 = side(v2, w2, x2);
  if (x2 == g.identity()) return tagged(b.source, p1, p2, 'H', {u, v1, x1, y});
  if (x1 == g.identity()) return tagged(b.source, p1, p2, 'H', {u, v2, x2, y});
  return tagged(b.source, p1, p2, 'I', {u, v1, w1, v2, w2});
}

std::string cell_label(const CoxeterGroup& g, const FamilyTag& t) {
  return std::string(1, t.family) + "_{" + join_names(g, t.index, ',') + "}";
}

}  // namespace

GarsideCompletion complete_garside(const CoxeterGroup& g) {
  GarsideCompletion out;
  out.gar2 = garside_presentation(g);
  auto state = std::make_shared<GarsideState>(GarsideState{g, out.gar2, {}, {}, {}});
  for (const Rule& r : out.gar2.base.rules)
    state->shapes.push_back({false, r.lhs[0] + 1, r.lhs[1] + 1, 0});

  std::vector<int> weight(out.gar2.element.size());
  for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = g.length(out.gar2.element[i]);

  CompletionOptions opts;
  opts.max_rules = 1000000;
  opts.max_branchings = 10000000;
  opts.cell_prefix = "cell";
  opts.joiner = [state](const Polygraph2& cur, const Branching& b) { return state->join(cur, b); };
  opts.namer = [state, &g](const Polygraph2& cur, const Word& lhs, const Word& rhs) {
    // u|vw ⇒ uv|w is the only shape completion may adjoin here.
    if (lhs.size() != 2 || rhs.size() != 2)
      throw PreconditionError("classification: adjoined rule is not of type β");
    const int u = lhs[0] + 1, vw = lhs[1] + 1, uv = rhs[0] + 1, w = rhs[1] + 1;
    if (!g.left_divides(u, uv)) throw PreconditionError("classification: adjoined rule is not of type β");
    const int v = g.complement(u, uv);
    if (v == g.identity() || g.mul(v, w) != vw || !g.is_reduced_product(v, w))
      throw PreconditionError("classification: adjoined rule is not of type β");
    state->beta[{u, v, w}] = static_cast<int>(cur.rules.size());
    state->shapes.push_back({true, u, v, w});
    Rule r;
    r.id = "beta[" + g.name(u) + "|" + g.name(v) + "|" + g.name(w) + "]";
    r.label = "β_{" + g.name(u) + "," + g.name(v) + "," + g.name(w) + "}";
    r.lhs = lhs;
    r.rhs = rhs;
    return r;
  };

  out.completion = homotopical_complete(out.gar2.base, TerminationOrder::garside(weight), opts);
  out.beta = state->beta;
  auto& cells = out.completion.presentation.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    FamilyTag t = state->produced.at(i);
    cells[i].id = out.completion.tags[i];
    cells[i].label = cell_label(g, t);
    if (!out.cell_of.emplace(t, static_cast<int>(i)).second)
      throw PreconditionError("classification: two cells tagged " + cells[i].id);
    out.tags.push_back(std::move(t));
  }
  return out;
}

CollapsiblePart garside_reduction_part(const CoxeterGroup& g, const GarsideCompletion& gc) {
  const Polygraph31& p = gc.completion.presentation;
  const GarsidePresentation& gar2 = gc.gar2;
  CollapsiblePart part;

  auto gen = [&](int u) { return gar2.generator(u); };
  auto alpha = [&](int u, int v) {
    auto it = gar2.alpha.find({u, v});
    if (it == gar2.alpha.end()) throw PreconditionError("coherence: missing α_{" + g.name(u) + "," + g.name(v) + "}");
    return it->second;
  };
  auto beta = [&](int u, int v, int w) {
    auto it = gc.beta.find({u, v, w});
    if (it == gc.beta.end()) throw PreconditionError("coherence: missing β rule");
    return it->second;
  };
  auto face = [&](char fam, std::vector<int> idx, Word left = {}, Word right = {}) {
    FamilyTag t{fam, std::move(idx)};
    auto it = gc.cell_of.find(t);
    if (it == gc.cell_of.end()) throw PreconditionError("coherence: missing face " + tag_id(g, t));
    return Face{it->second, std::move(left), std::move(right)};
  };

  for (std::size_t i = 0; i < gc.tags.size(); ++i) {
    const FamilyTag& t = gc.tags[i];
    const auto& ix = t.index;
    const std::string& cid = p.cells[i].id;
    auto m = [&](int a, int b) { return g.mul(a, b); };
    Path2 from;
    std::vector<Face> lhs, rhs;
    switch (t.family) {
      case 'A':
        continue;
      case 'B':
        part.three_cells.push_back({cid, p.base.rules[beta(ix[0], ix[1], ix[2])].id});
        continue;
      case 'C': {
        const int u = ix[0], v = ix[1], w = ix[2], x = ix[3];
        from = {{gen(u), gen(v), gen(w), gen(x)}, {fwd(alpha(u, v), 0), fwd(alpha(m(u, v), w), 0)}};
        lhs = {face('A', {u, v, w}, {}, {gen(x)}), face('B', {v, w, x}, {gen(u)})};
        rhs = {face('B', {m(u, v), w, x}), face('C', ix)};
        break;
      }
      case 'D': {
        const int u = ix[0], v = ix[1], w = ix[2], x = ix[3];
        from = {{gen(u), gen(v), gen(w), gen(x)}, {fwd(alpha(u, v), 0), fwd(alpha(w, x), 1)}};
        lhs = {face('B', {u, v, w}, {}, {gen(x)}), face('B', {v, w, x}, {gen(u)})};
        rhs = {face('D', ix)};
        break;
      }
      case 'E': {
        const int u = ix[0], v = ix[1], w = ix[2], x = ix[3];
        from = {{gen(u), gen(v), gen(w), gen(x)}, {fwd(alpha(u, v), 0), fwd(alpha(w, x), 1)}};
        lhs = {face('B', {u, v, w}, {}, {gen(x)}), face('A', {v, w, x}, {gen(u)}), face('E', ix)};
        rhs = {face('B', {u, v, m(w, x)})};
        break;
      }
      case 'F': {
        const int u = ix[0], v = ix[1], w = ix[2], x = ix[3], y = ix[4];
        from = {{gen(u), gen(m(v, w)), gen(x), gen(y)},
                {fwd(beta(u, v, w), 0), fwd(alpha(w, x), 1), fwd(alpha(m(w, x), y), 1)}};
        lhs = {face('E', {u, v, w, x}, {}, {gen(y)}), face('B', {m(v, w), x, y}, {gen(u)})};
        rhs = {face('A', {w, x, y}, {gen(m(u, v))}), face('F', ix)};
        break;
      }
      case 'G': {
        const int u = ix[0], v = ix[1], w = ix[2], x = ix[3], y = ix[4];
        from = {{gen(u), gen(v), gen(w), gen(m(x, y))}, {fwd(alpha(u, v), 0), fwd(beta(w, x, y), 1)}};
        lhs = {face('B', {u, v, w}, {}, {gen(m(x, y))}), face('C', {v, w, x, y}, {gen(u)}),
               face('G', ix)};
        rhs = {face('B', {u, v, m(w, x)}, {}, {gen(y)})};
        break;
      }
      case 'H': {
        const int u = ix[0], v = ix[1], x = ix[2], y = ix[3];
        from = {{gen(u), gen(v), gen(x), gen(y)}, {fwd(alpha(u, v), 0), fwd(alpha(m(u, v), x), 0)}};
        lhs = {face('A', {u, v, x}, {}, {gen(y)}), face('A', {v, x, y}, {gen(u)}),
               face('B', {u, m(v, x), y})};
        rhs = {face('B', {m(u, v), x, y}), face('B', {u, v, m(x, y)}), face('H', ix)};
        break;
      }
      case 'I': {
        const int u = ix[0], v1 = ix[1], w1 = ix[2], v2 = ix[3];
        const int z = m(v1, w1);
        int lcm = -1;
        for (int c = 0; c < static_cast<int>(g.size()); ++c)
          if (g.left_divides(v1, c) && g.left_divides(v2, c) && g.left_divides(c, z) &&
              (lcm < 0 || g.length(c) < g.length(lcm)))
            lcm = c;
        const int x1 = g.complement(v1, lcm), x2 = g.complement(v2, lcm), y = g.complement(lcm, z);
        from = {{gen(u), gen(z)}, {fwd(beta(u, v1, w1), 0), fwd(beta(m(u, v1), x1, y), 0)}};
        lhs = {face('I', ix), face('H', {u, v2, x2, y})};
        rhs = {face('H', {u, v1, x1, y})};
        break;
      }
      default:
        throw PreconditionError("coherence: unknown family");
    }
    part.spheres.push_back({assemble_sphere(p, from, lhs, rhs), cid});
  }

  // I > H > ... > C above the A and B cells; β above α.
  for (std::size_t i = 0; i < gc.tags.size(); ++i) {
    const char f = gc.tags[i].family;
    part.order.cells[p.cells[i].id] = f == 'A' ? 0 : f - 'B' + 1;
  }
  for (const Rule& r : p.base.rules) part.order.rules[r.id] = r.id.rfind("beta", 0) == 0 ? 2 : 1;
  for (const std::string& s : p.base.generators) part.order.generators[s] = 0;
  return part;
}

Reduction reduce_garside(const CoxeterGroup& g, const GarsideCompletion& gc) {
  return homotopical_reduce(gc.completion.presentation, garside_reduction_part(g, gc));
}

Polygraph31 garside_coherent(const CoxeterGroup& g, const GarsidePresentation& gar2) {
  Polygraph31 out;
  out.base = gar2.base;
  const int n = static_cast<int>(g.size());
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) {
      if (!g.is_reduced_product(u, v)) continue;
      const int uv = g.mul(u, v);
      for (int w = 1; w < n; ++w) {
        if (!g.is_reduced_product(uv, w)) continue;
        const int vw = g.mul(v, w);
        Word src{gar2.generator(u), gar2.generator(v), gar2.generator(w)};
        FamilyTag t{'A', {u, v, w}};
        ThreeCell c;
        c.id = tag_id(g, t);
        c.label = cell_label(g, t);
        c.src = {src, {fwd(gar2.alpha.at({u, v}), 0), fwd(gar2.alpha.at({uv, w}), 0)}};
        c.tgt = {src, {fwd(gar2.alpha.at({v, w}), 1), fwd(gar2.alpha.at({u, vw}), 0)}};
        out.cells.push_back(std::move(c));
      }
    }
  return out;
}

std::vector<Gar4Sphere> gar4_spheres(const CoxeterGroup& g, const GarsidePresentation& gar2,
                                     const Polygraph31& gar3) {
  std::map<std::string, int> cell_index;
  for (std::size_t i = 0; i < gar3.cells.size(); ++i) cell_index[gar3.cells[i].id] = static_cast<int>(i);
  auto face = [&](std::vector<int> idx, Word left = {}, Word right = {}) {
    std::string id = tag_id(g, {'A', std::move(idx)});
    auto it = cell_index.find(id);
    if (it == cell_index.end()) throw PreconditionError("coherence: missing face " + id);
    return Face{it->second, std::move(left), std::move(right)};
  };
  auto gen = [&](int u) { return gar2.generator(u); };
  std::vector<Gar4Sphere> out;
  const int n = static_cast<int>(g.size());
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) {
      if (!g.is_reduced_product(u, v)) continue;
      const int uv = g.mul(u, v);
      for (int w = 1; w < n; ++w) {
        if (!g.is_reduced_product(uv, w)) continue;
        const int uvw = g.mul(uv, w);
        for (int x = 1; x < n; ++x) {
          if (!g.is_reduced_product(uvw, x)) continue;
          const int vw = g.mul(v, w), wx = g.mul(w, x);
          Path2 from{{gen(u), gen(v), gen(w), gen(x)},
                     {fwd(gar2.alpha.at({u, v}), 0), fwd(gar2.alpha.at({uv, w}), 0),
                      fwd(gar2.alpha.at({uvw, x}), 0)}};
          std::vector<Face> lhs{face({u, v, w}, {}, {gen(x)}), face({v, w, x}, {gen(u)}),
                                face({u, vw, x})};
          std::vector<Face> rhs{face({uv, w, x}), face({u, v, wx})};
          out.push_back({{u, v, w, x}, assemble_sphere(gar3, from, lhs, rhs)});
        }
      }
    }
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Essential: return "essential";
    case Classification::Collapsible: return "collapsible";
    case Classification::Redundant: return "redundant";
  }
  return "?";
}

namespace {

void check_tuple(const CoxeterGroup& g, const std::vector<int>& tuple) {
  if (tuple.empty()) throw PreconditionError("empty tuple");
  for (int u : tuple)
    if (u <= 0 || u >= static_cast<int>(g.size()))
      throw PreconditionError("tuple entries must be nontrivial elements");
  if (!additive(g, tuple)) throw PreconditionError("tuple product is not length-additive");
}

}  // namespace

Classification classify_tuple(const CoxeterGroup& g, const std::vector<int>& tuple) {
  check_tuple(g, tuple);
  int prod = g.identity();
  std::vector<int> chain;  // s_1, ..., s_k
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    prod = g.mul(prod, tuple[k]);
    chain.push_back(g.smallest_divisor(prod));
    std::vector<int> gens = chain;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (prod == *g.longest_element(gens)) continue;
    if (k == 0) return Classification::Redundant;
    return chain[k - 1] == chain[k] ? Classification::Collapsible : Classification::Redundant;
  }
  return Classification::Essential;
}

std::vector<int> phi_key(const CoxeterGroup& g, const std::vector<int>& tuple) {
  check_tuple(g, tuple);
  int total = g.identity();
  for (int u : tuple) total = g.mul(total, u);
  std::vector<int> key{g.length(total)};
  int prod = g.identity();
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
    prod = g.mul(prod, tuple[k]);
    key.push_back(g.smallest_divisor(prod));
    key.push_back(g.length(prod));
  }
  return key;
}

std::string gamma_id(const CoxeterMatrix& m, int s, int t) {
  return "gamma[" + m.names[s] + "|" + m.names[t] + "]";
}

Polygraph2 artin_presentation(const CoxeterMatrix& m) {
  m.validate();
  Polygraph2 p;
  p.generators = m.names;
  bool short_names = true;
  for (const auto& n : m.names) short_names = short_names && n.size() == 1;
  for (int s = 0; s < m.rank(); ++s)
    for (int t = s + 1; t < m.rank(); ++t) {
      const int k = m.m[s][t];
      if (k == kInfinity) continue;
      Rule r;
      r.id = gamma_id(m, s, t);
      r.label = short_names ? "γ_" + m.names[s] + m.names[t] : "γ_{" + m.names[s] + "," + m.names[t] + "}";
      for (int i = 0; i < k; ++i) {
        r.lhs.push_back(i % 2 ? s : t);
        r.rhs.push_back(i % 2 ? t : s);
      }
      p.rules.push_back(std::move(r));
    }
  return p;
}

ArtinProjection::ArtinProjection(const CoxeterGroup& g) : g_(g), art_(artin_presentation(g.matrix())) {}

int ArtinProjection::gamma(int s, int t) const {
  int r = art_.rule_index(gamma_id(g_.matrix(), s, t));
  if (r < 0) throw PreconditionError("no braid relation between " + g_.matrix().names[s] + " and " +
                                     g_.matrix().names[t]);
  return r;
}

Path2 ArtinProjection::alpha(int u, int v) {
  if (!g_.is_reduced_product(u, v) || u == 0 || v == 0)
    throw PreconditionError("α_{u,v} needs nontrivial u, v with l(uv) = l(u) + l(v)");
  return normalize_path(art_, alpha_raw(u, v));
}

Path2 ArtinProjection::alpha_raw(int u, int v) {
  if (auto it = memo_.find({u, v}); it != memo_.end()) return it->second;
  if (++depth_ > static_cast<int>(g_.size()) * 4)
    throw PreconditionError("projection does not terminate; a pair is misclassified");
  Word source = element(u);
  source.insert(source.end(), element(v).begin(), element(v).end());
  const int s = g_.smallest_divisor(u);
  const int se = g_.generator(s);
  Path2 out;
  if (u != se) {
    // u = s·u' with s = d_u: the 3-cell A_{s,u',v} read from left to right.
    const int rest = g_.complement(se, u);
    out = compose(art_, whisker({s}, alpha_raw(rest, v), {}), alpha_raw(se, g_.mul(rest, v)));
  } else {
    const int d = g_.smallest_divisor(g_.mul(u, v));
    if (d == s) {
      out = identity_path(source);  // collapsible
    } else {
      const int w0 = *g_.longest_element({d, s});
      const int c = g_.complement(se, w0);
      if (c == v) {
        out = single_step(source, gamma(d, s), 1, 0);
      } else {
        // v = c·v' with (s, c) essential.
        const int rest = g_.complement(c, v);
        Path2 a = whisker({s}, inverse(art_, alpha_raw(c, rest)), {});
        Word head{s};
        head.insert(head.end(), element(c).begin(), element(c).end());
        Path2 b = whisker({}, single_step(head, gamma(d, s), 1, 0), element(rest));
        out = compose(art_, compose(art_, a, b), alpha_raw(w0, rest));
      }
    }
  }
  --depth_;
  if (out.source != source) throw PreconditionError("projection produced a path with the wrong source");
  memo_.emplace(std::make_pair(u, v), out);
  return out;
}

std::pair<Path2, Path2> ArtinProjection::cell(int u, int v, int w) {
  if (!additive(g_, {u, v, w}) || !u || !v || !w)
    throw PreconditionError("A_{u,v,w} needs a length-additive triple");
  const int uv = g_.mul(u, v), vw = g_.mul(v, w);
  Path2 src = compose(art_, whisker({}, alpha_raw(u, v), element(w)), alpha_raw(uv, w));
  Path2 tgt = compose(art_, whisker(element(u), alpha_raw(v, w), {}), alpha_raw(u, vw));
  return {normalize_path(art_, src), normalize_path(art_, tgt)};
}

ThreeCell zamolodchikov(const CoxeterGroup& g) {
  if (g.rank() != 3) throw PreconditionError("Z_{r,s,t} needs a rank-3 group");
  const int r = 0, s = 1, t = 2;
  ArtinProjection pi(g);
  const int te = g.generator(t);
  const int w_st = *g.longest_element({s, t});
  const int w_rst = *g.longest_element({r, s, t});
  const int u = g.complement(te, w_st), v = g.complement(w_st, w_rst);
  auto [src, tgt] = pi.cell(te, u, v);
  const auto& n = g.matrix().names;
  ThreeCell z;
  z.id = "Z[" + n[r] + "|" + n[s] + "|" + n[t] + "]";
  z.label = "Z_{" + n[r] + "," + n[s] + "," + n[t] + "}";
  z.src = std::move(src);
  z.tgt = std::move(tgt);
  return z;
}

Polygraph31 artin_coherent(const CoxeterMatrix& m) {
  Polygraph31 out;
  out.base = artin_presentation(m);
  const int n = m.rank();
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        if (!rank3_finite(m.m[r][s], m.m[r][t], m.m[s][t])) continue;
        CoxeterMatrix sub = m.parabolic({r, s, t});
        CoxeterGroup g = CoxeterGroup::enumerate_or_throw(sub);
        ThreeCell z = zamolodchikov(g);
        // Letters 0, 1, 2 of the parabolic are r, s, t; rules keep their
        // relative order so ids carry over.
        const Polygraph2 local = artin_presentation(sub);
        const int map[3] = {r, s, t};
        auto lift = [&](Path2& f) {
          for (Gen& x : f.source) x = map[x];
          for (Step2& st : f.steps) st.rule = out.base.rule_index(
              gamma_id(m, map[local.rules[st.rule].lhs[1]], map[local.rules[st.rule].lhs[0]]));
        };
        lift(z.src);
        lift(z.tgt);
        out.cells.push_back(std::move(z));
      }
  return out;
}

Census cell_census(const Polygraph31& p) {
  return {1, p.base.generators.size(), p.base.rules.size(), p.cells.size()};
}

bool is_left_weighted(const CoxeterGroup& g, int u, int v) {
  return g.left_weighted(u, v) == std::make_pair(u, v);
}

std::vector<int> slide_at(const CoxeterGroup& g, const std::vector<int>& word, std::size_t i) {
  if (i + 1 >= word.size()) throw PreconditionError("no pair at this position");
  auto [a, b] = g.left_weighted(word[i], word[i + 1]);
  std::vector<int> out(word.begin(), word.begin() + static_cast<long>(i));
  out.push_back(a);
  if (b != g.identity()) out.push_back(b);
  out.insert(out.end(), word.begin() + static_cast<long>(i) + 2, word.end());
  return out;
}

std::vector<int> sliding_normal_form(const CoxeterGroup& g, std::vector<int> word) {
  std::erase(word, g.identity());
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (!is_left_weighted(g, word[i], word[i + 1])) {
        word = slide_at(g, word, i);
        moved = true;
        break;
      }
  }
  return word;
}

}  // namespace polycox
