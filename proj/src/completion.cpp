#include "polycox/completion.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "polycox/error.hpp"

namespace polycox {

int Polygraph31::cell_index(std::string_view id) const {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].id == id) return static_cast<int>(i);
  return -1;
}

void Polygraph31::validate() const {
  base.validate();
  std::set<std::string> ids;
  for (const ThreeCell& c : cells) {
    if (!ids.insert(c.id).second) throw InputError("duplicate 3-cell id '" + c.id + "'");
    try {
      if (c.src.source != c.tgt.source || target(base, c.src) != target(base, c.tgt))
        throw InputError("3-cell '" + c.id + "' has non-parallel boundaries");
    } catch (const StepError& e) {
      throw InputError("3-cell '" + c.id + "': " + e.what());
    }
  }
}

namespace {

struct Interval {
  int lo, hi;
};

Interval interval(const Polygraph2& p, const Step2& s) {
  return {s.at, s.at + consumed(p, s)};
}

bool intersects(Interval a, Interval b) { return a.lo < b.hi && b.lo < a.hi; }

bool step_less(const Step2& a, const Step2& b) {
  return std::tie(a.at, a.rule, a.dir) < std::tie(b.at, b.rule, b.dir);
}

using StepKey = std::tuple<int, int, int>;
StepKey key(const Step2& s) { return {s.at, s.rule, s.dir}; }

}  // namespace

BranchingKind classify_branching(const Polygraph2& p, const Step2& a, const Step2& b) {
  if (a == b) return BranchingKind::Aspherical;
  if (!intersects(interval(p, a), interval(p, b))) return BranchingKind::Peiffer;
  return BranchingKind::Overlap;
}

std::vector<Branching> critical_branchings(const Polygraph2& p) {
  using Key = std::tuple<Word, StepKey, StepKey>;
  std::set<Key> seen;
  std::vector<Branching> out;
  auto add = [&](Word source, Step2 x, Step2 y, bool inclusion) {
    if (step_less(y, x)) std::swap(x, y);
    if (!seen.insert({source, key(x), key(y)}).second) return;
    out.push_back({std::move(source), x, y, BranchingKind::Critical, inclusion});
  };
  // Bucket by first letter for the overlap scan.
  RuleIndex idx(p);
  const int nr = static_cast<int>(p.rules.size());
  for (int i = 0; i < nr; ++i) {
    const Word& l1 = p.rules[i].lhs;
    // Proper overlaps: a proper suffix of l1 is a proper prefix of l2.
    for (std::size_t start = 1; start < l1.size(); ++start) {
      for (int j : idx.starting_with(l1[start])) {
        const Word& l2 = p.rules[j].lhs;
        const std::size_t k = l1.size() - start;
        if (k >= l2.size()) continue;
        if (!std::equal(l1.begin() + static_cast<long>(start), l1.end(), l2.begin())) continue;
        Word src = l1;
        src.insert(src.end(), l2.begin() + static_cast<long>(k), l2.end());
        add(std::move(src), {i, 1, 0}, {j, 1, static_cast<int>(start)}, false);
      }
    }
    // Inclusions: l2 occurs inside l1.
    for (std::size_t q = 0; q < l1.size(); ++q) {
      for (int j : idx.starting_with(l1[q])) {
        if (j == i) continue;
        const Word& l2 = p.rules[j].lhs;
        if (!occurs_at(l1, l2, q)) continue;
        add(l1, {i, 1, 0}, {j, 1, static_cast<int>(q)}, true);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Branching& a, const Branching& b) {
    if (a.source.size() != b.source.size()) return a.source.size() < b.source.size();
    if (a.source != b.source) return a.source < b.source;
    return std::make_tuple(key(a.left), key(a.right)) < std::make_tuple(key(b.left), key(b.right));
  });
  return out;
}

namespace {

Path2 step_then_normalize(const Polygraph2& p, const RuleIndex& idx, const Word& w,
                          const Step2& s, std::size_t budget) {
  Path2 out = single_step(w, s.rule, s.dir, s.at);
  Word next = apply_step(w, p, s);
  auto nf = normalize(next, p, idx, Strategy::Leftmost, budget);
  out.steps.insert(out.steps.end(), nf.path.steps.begin(), nf.path.steps.end());
  return out;
}

std::string fresh_id(const Polygraph2& p, const std::string& prefix, std::size_t& counter) {
  std::string id;
  do {
    id = prefix + std::to_string(++counter);
  } while (p.rule_index(id) >= 0);
  return id;
}

// Processing order inside a round: source by length then letter precedence.
bool source_less(const TerminationOrder& order, const Branching& a, const Branching& b) {
  if (a.source.size() != b.source.size()) return a.source.size() < b.source.size();
  if (a.source != b.source) {
    for (std::size_t i = 0; i < a.source.size(); ++i) {
      int x = a.source[i], y = b.source[i];
      if (x == y) continue;
      if (order.kind == TerminationOrder::Kind::Deglex && !order.rank.empty())
        return order.rank.at(x) < order.rank.at(y);
      return x < y;
    }
  }
  return std::make_tuple(key(a.left), key(a.right)) < std::make_tuple(key(b.left), key(b.right));
}

}  // namespace

Completion homotopical_complete(const Polygraph2& input, const TerminationOrder& order,
                                const CompletionOptions& opts) {
  input.validate();
  if (auto bad = check_termination(input, order); !bad.empty())
    throw PreconditionError("rule '" + input.rules[bad.front()].id +
                            "' is not decreasing for the termination order");
  Completion out;
  Polygraph2& cur = out.presentation.base;
  cur = input;
  std::set<std::tuple<Word, StepKey, StepKey>> done;
  std::size_t rule_counter = 0;

  while (true) {
    std::vector<Branching> todo;
    for (Branching& b : critical_branchings(cur))
      if (!done.count({b.source, key(b.left), key(b.right)})) todo.push_back(std::move(b));
    if (todo.empty()) break;
    std::stable_sort(todo.begin(), todo.end(), [&](const Branching& a, const Branching& b) {
      return source_less(order, a, b);
    });
    for (const Branching& b : todo) {
      done.insert({b.source, key(b.left), key(b.right)});
      if (++out.branchings > opts.max_branchings)
        throw BudgetError("completion examined more than " +
                          std::to_string(opts.max_branchings) + " branchings");
      Joined j;
      if (opts.joiner) {
        j = opts.joiner(cur, b);
      } else {
        RuleIndex idx(cur);
        j.src = step_then_normalize(cur, idx, b.source, b.left, opts.step_budget);
        j.tgt = step_then_normalize(cur, idx, b.source, b.right, opts.step_budget);
      }
      Word e1 = target(cur, j.src), e2 = target(cur, j.tgt);
      ThreeCell cell;
      cell.id = opts.cell_prefix + std::to_string(out.presentation.cells.size() + 1);
      if (e1 == e2) {
        cell.src = std::move(j.src);
        cell.tgt = std::move(j.tgt);
      } else {
        Ordering o = compare(order, e1, e2);
        if (o != Ordering::Greater && o != Ordering::Less)
          throw PreconditionError("cannot orient the pair '" + cur.word_string(e1) + "', '" +
                                  cur.word_string(e2) + "'");
        const bool first_big = o == Ordering::Greater;
        const Word& big = first_big ? e1 : e2;
        const Word& small = first_big ? e2 : e1;
        if (big.empty()) throw PreconditionError("would adjoin a rule with empty source");
        Rule r = opts.namer ? opts.namer(cur, big, small) : Rule{"", big, small, ""};
        if (r.id.empty()) r.id = fresh_id(cur, "r", rule_counter);
        cur.rules.push_back(std::move(r));
        if (++out.rules_added > opts.max_rules || cur.rules.size() > opts.max_rules)
          throw BudgetError("completion exceeded " + std::to_string(opts.max_rules) + " rules");
        const int rid = static_cast<int>(cur.rules.size()) - 1;
        // The new rule goes on the target side of the 3-cell.
        Path2& grow = first_big ? j.src : j.tgt;
        grow.steps.push_back({rid, 1, 0});
        cell.src = first_big ? std::move(j.tgt) : std::move(j.src);
        cell.tgt = std::move(grow);
      }
      out.presentation.cells.push_back(std::move(cell));
      out.tags.push_back(std::move(j.tag));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triple branchings.

namespace {

bool critical_triple(const Polygraph2& p, const Word& w, const std::array<Step2, 3>& s) {
  if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) return false;
  Interval iv[3];
  int lo = static_cast<int>(w.size()), hi = 0;
  for (int i = 0; i < 3; ++i) {
    iv[i] = interval(p, s[i]);
    lo = std::min(lo, iv[i].lo);
    hi = std::max(hi, iv[i].hi);
  }
  for (int i = 0; i < 3; ++i) {
    bool touches = false;
    for (int j = 0; j < 3; ++j)
      if (j != i && intersects(iv[i], iv[j])) touches = true;
    if (!touches) return false;  // Peiffer: disjoint from both others
  }
  return lo == 0 && hi == static_cast<int>(w.size());
}

}  // namespace

std::vector<TripleBranching> triple_critical_branchings(const Polygraph2& p) {
  std::set<std::tuple<Word, StepKey, StepKey, StepKey>> seen;
  std::vector<TripleBranching> out;
  RuleIndex idx(p);
  auto consider = [&](const Word& w, Step2 a, Step2 b, Step2 c) {
    std::array<Step2, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), step_less);
    if (!critical_triple(p, w, s)) return;
    if (!seen.insert({w, key(s[0]), key(s[1]), key(s[2])}).second) return;
    out.push_back({w, s[0], s[1], s[2]});
  };
  for (const Branching& br : critical_branchings(p)) {
    const Word& w = br.source;
    for (const Redex& r : find_redexes(w, p, idx)) consider(w, br.left, br.right, {r.rule, 1, r.at});
    for (std::size_t r = 0; r < p.rules.size(); ++r) {
      const Word& l = p.rules[r].lhs;
      for (std::size_t k = 1; k < l.size() && k <= w.size(); ++k) {
        // Third redex sticking out on the right.
        if (std::equal(w.end() - static_cast<long>(k), w.end(), l.begin())) {
          Word ext = w;
          ext.insert(ext.end(), l.begin() + static_cast<long>(k), l.end());
          consider(ext, br.left, br.right,
                   {static_cast<int>(r), 1, static_cast<int>(w.size() - k)});
        }
        // Third redex sticking out on the left.
        if (std::equal(w.begin(), w.begin() + static_cast<long>(k),
                       l.end() - static_cast<long>(k))) {
          const int shift = static_cast<int>(l.size() - k);
          Word ext(l.begin(), l.begin() + shift);
          ext.insert(ext.end(), w.begin(), w.end());
          Step2 x = br.left, y = br.right;
          x.at += shift;
          y.at += shift;
          consider(ext, x, y, {static_cast<int>(r), 1, 0});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleBranching& a, const TripleBranching& b) {
    if (a.source.size() != b.source.size()) return a.source.size() < b.source.size();
    if (a.source != b.source) return a.source < b.source;
    return std::make_tuple(key(a.a), key(a.b), key(a.c)) <
           std::make_tuple(key(b.a), key(b.b), key(b.c));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Spheres.

namespace {

const Path2& cell_side(const ThreeCell& c, int dir) { return dir > 0 ? c.src : c.tgt; }

Path2 entry_path(const Polygraph31& p, const SphereEntry& e, bool before) {
  const ThreeCell& c = p.cells.at(e.cell);
  const Path2& side = cell_side(c, before ? e.dir : -e.dir);
  Path2 mid = whisker(e.left, side, e.right);
  return compose(p.base, compose(p.base, e.prefix, mid), e.suffix);
}

}  // namespace

Path2 entry_before(const Polygraph31& p, const SphereEntry& e) { return entry_path(p, e, true); }
Path2 entry_after(const Polygraph31& p, const SphereEntry& e) { return entry_path(p, e, false); }

std::vector<SphereEntry> inverse_entries(const std::vector<SphereEntry>& es) {
  std::vector<SphereEntry> out(es.rbegin(), es.rend());
  for (SphereEntry& e : out) e.dir = -e.dir;
  return out;
}

std::vector<SphereEntry> cancel_entries(const Polygraph31& p, std::vector<SphereEntry> es) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      const SphereEntry& a = es[i];
      const SphereEntry& b = es[i + 1];
      if (a.cell == b.cell && a.dir == -b.dir && a.left == b.left && a.right == b.right &&
          paths_equal(p.base, a.prefix, b.prefix) && paths_equal(p.base, a.suffix, b.suffix)) {
        es.erase(es.begin() + static_cast<long>(i), es.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return es;
}

std::string sphere_defect(const Polygraph31& p, const Sphere3& s) {
  try {
    if (s.from.source != s.to.source || target(p.base, s.from) != target(p.base, s.to))
      return "sphere boundary 2-cells are not parallel";
    for (const auto* side : {&s.lhs, &s.rhs}) {
      Path2 cur = s.from;
      for (std::size_t i = 0; i < side->size(); ++i) {
        const SphereEntry& e = (*side)[i];
        if (e.cell < 0 || static_cast<std::size_t>(e.cell) >= p.cells.size())
          return "sphere entry refers to an unknown 3-cell";
        if (!paths_equal(p.base, entry_before(p, e), cur))
          return std::string(side == &s.lhs ? "lhs" : "rhs") + " entry " + std::to_string(i) +
                 " (" + render_entry(p, e) + ") does not start where the previous one ends";
        cur = entry_after(p, e);
      }
      if (!paths_equal(p.base, cur, s.to))
        return std::string(side == &s.lhs ? "lhs" : "rhs") + " does not end at the sphere target";
    }
  } catch (const StepError& e) {
    return std::string("malformed sphere: ") + e.what();
  }
  return {};
}

std::string render_entry(const Polygraph31& p, const SphereEntry& e) {
  std::string out;
  if (!e.left.empty()) out += p.base.word_string(e.left) + "·";
  out += p.cells.at(e.cell).name();
  if (e.dir < 0) out += "⁻";
  if (!e.right.empty()) out += "·" + p.base.word_string(e.right);
  return out;
}

namespace {

// Builds 3-paths towards the leftmost normalization strategy.
class Connector {
 public:
  explicit Connector(const Polygraph31& p) : p_(p), idx_(p.base) {
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      const ThreeCell& cell = p.cells[c];
      if (cell.src.steps.empty() || cell.tgt.steps.empty()) continue;
      const Step2 a = cell.src.steps.front(), b = cell.tgt.steps.front();
      by_branch_.emplace(std::make_tuple(cell.src.source, key(a), key(b)),
                         std::make_pair(static_cast<int>(c), 1));
      by_branch_.emplace(std::make_tuple(cell.src.source, key(b), key(a)),
                         std::make_pair(static_cast<int>(c), -1));
    }
  }

  Path2 sigma(const Word& w) const {
    return normalize(w, p_.base, idx_, Strategy::Leftmost).path;
  }

  // Entries turning the forward normalizing path f into sigma(source f).
  std::vector<SphereEntry> conn(const Path2& f) const {
    if (f.steps.empty()) return {};
    const Word& u = f.source;
    const Step2 s = f.steps.front();
    if (s.dir < 0) throw PreconditionError("connection through a non-reducing path");
    Path2 rest{apply_step(u, p_.base, s), {f.steps.begin() + 1, f.steps.end()}};
    std::vector<SphereEntry> out = prefixed(u, s, conn(rest));
    const Step2 s0 = sigma(u).steps.front();
    if (s == s0) return out;
    auto more = direct(u, s, s0);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }

  // Entries turning x ⋆ sigma into y ⋆ sigma for two reducing steps on u.
  std::vector<SphereEntry> direct(const Word& u, const Step2& x, const Step2& y) const {
    if (x == y) return {};
    const Polygraph2& b = p_.base;
    const Word ux = apply_step(u, b, x), uy = apply_step(u, b, y);
    if (classify_branching(b, x, y) == BranchingKind::Peiffer) {
      Step2 y1 = shifted_after(x, y), x1 = shifted_after(y, x);
      Word w = apply_step(ux, b, y1);
      Path2 via_x{ux, {y1}};
      via_x = compose(b, via_x, sigma(w));
      Path2 via_y{uy, {x1}};
      via_y = compose(b, via_y, sigma(w));
      auto out = prefixed(u, x, inverse_entries(conn(via_x)));
      auto tail = prefixed(u, y, conn(via_y));
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
    Interval ix = interval(b, x), iy = interval(b, y);
    const int lo = std::min(ix.lo, iy.lo), hi = std::max(ix.hi, iy.hi);
    Word inner(u.begin() + lo, u.begin() + hi);
    Word left(u.begin(), u.begin() + lo), right(u.begin() + hi, u.end());
    Step2 xi = x, yi = y;
    xi.at -= lo;
    yi.at -= lo;
    auto it = by_branch_.find(std::make_tuple(inner, key(xi), key(yi)));
    if (it == by_branch_.end())
      throw PreconditionError("no 3-cell for the branching (" + render_step(b, inner, xi) + ", " +
                              render_step(b, inner, yi) + ")");
    const auto [c, dir] = it->second;
    const ThreeCell& cell = p_.cells[c];
    Path2 px = whisker(left, cell_side(cell, dir), right);
    Path2 py = whisker(left, cell_side(cell, -dir), right);
    Word e = target(b, px);
    Path2 se = sigma(e);
    Path2 rest_x = compose(b, Path2{ux, {px.steps.begin() + 1, px.steps.end()}}, se);
    Path2 rest_y = compose(b, Path2{uy, {py.steps.begin() + 1, py.steps.end()}}, se);
    auto out = prefixed(u, x, inverse_entries(conn(rest_x)));
    out.push_back(SphereEntry{c, dir, left, right, identity_path(u), se});
    auto tail = prefixed(u, y, conn(rest_y));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }

 private:
  // Position of b once a has been applied (a, b disjoint and on the same word).
  Step2 shifted_after(const Step2& a, const Step2& b) const {
    Step2 out = b;
    if (b.at >= a.at + consumed(p_.base, a)) out.at += produced(p_.base, a) - consumed(p_.base, a);
    return out;
  }

  std::vector<SphereEntry> prefixed(const Word& u, const Step2& s,
                                    std::vector<SphereEntry> es) const {
    for (SphereEntry& e : es) {
      Path2 pre = single_step(u, s.rule, s.dir, s.at);
      pre.steps.insert(pre.steps.end(), e.prefix.steps.begin(), e.prefix.steps.end());
      e.prefix = std::move(pre);
    }
    return es;
  }

  const Polygraph31& p_;
  RuleIndex idx_;
  std::map<std::tuple<Word, StepKey, StepKey>, std::pair<int, int>> by_branch_;
};

}  // namespace

Sphere3 generating_triple_confluence(const Polygraph31& p, const TripleBranching& t) {
  Connector k(p);
  const Polygraph2& b = p.base;
  auto full = [&](const Step2& s) {
    return compose(b, single_step(t.source, s.rule, s.dir, s.at), k.sigma(apply_step(t.source, b, s)));
  };
  Sphere3 s;
  s.from = full(t.a);
  s.to = full(t.c);
  s.lhs = k.direct(t.source, t.a, t.b);
  auto second = k.direct(t.source, t.b, t.c);
  s.lhs.insert(s.lhs.end(), second.begin(), second.end());
  s.rhs = k.direct(t.source, t.a, t.c);
  s.lhs = cancel_entries(p, std::move(s.lhs));
  s.rhs = cancel_entries(p, std::move(s.rhs));
  return s;
}

// ---------------------------------------------------------------------------
// Locating faces inside a 2-cell, up to exchange.

namespace {

struct Tagged {
  int id;
  Step2 step;
};

// Moves element m to the front by exchanges; false if some pair overlaps.
bool bubble_to_front(const Polygraph2& p, std::vector<Tagged>& r, std::size_t m) {
  for (std::size_t i = m; i-- > 0;) {
    auto sw = exchange(p, r[i].step, r[i + 1].step);
    if (!sw) return false;
    Tagged moved{r[i + 1].id, sw->first}, stayed{r[i].id, sw->second};
    r[i] = moved;
    r[i + 1] = stayed;
  }
  return true;
}

// Extracts q as a prefix of r (modulo exchange); returns the remainder.
std::optional<std::vector<Tagged>> strip_prefix(const Polygraph2& p, std::vector<Tagged> r,
                                                const std::vector<Step2>& q) {
  for (const Step2& want : q) {
    bool found = false;
    for (std::size_t m = 0; m < r.size() && !found; ++m) {
      std::vector<Tagged> trial = r;
      if (!bubble_to_front(p, trial, m)) continue;
      if (trial.front().step == want) {
        trial.erase(trial.begin());
        r = std::move(trial);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return r;
}

struct FaceSearch {
  const Polygraph2& p;
  const Path2& q;
  std::set<std::uint64_t> visited;
  std::vector<Step2> prefix;
  std::optional<std::pair<std::vector<Step2>, std::vector<Step2>>> found;

  void run(const Word& w, const std::vector<Tagged>& r, std::uint64_t mask) {
    if (found) return;
    if (w == q.source) {
      if (auto rest = strip_prefix(p, r, q.steps)) {
        std::vector<Step2> suffix;
        for (const Tagged& t : *rest) suffix.push_back(t.step);
        found = std::make_pair(prefix, suffix);
        return;
      }
    }
    for (std::size_t m = 0; m < r.size(); ++m) {
      std::vector<Tagged> trial = r;
      if (!bubble_to_front(p, trial, m)) continue;
      std::uint64_t next = mask | (std::uint64_t{1} << trial.front().id);
      if (!visited.insert(next).second) continue;
      Step2 s = trial.front().step;
      trial.erase(trial.begin());
      prefix.push_back(s);
      run(apply_step(w, p, s), trial, next);
      prefix.pop_back();
      if (found) return;
    }
  }
};

}  // namespace

std::optional<SphereEntry> locate_face(const Polygraph31& p, const Path2& current,
                                       const Face& face) {
  const Polygraph2& b = p.base;
  Path2 cur = normalize_path(b, current);
  if (cur.steps.size() > 60) throw PreconditionError("2-cell too long to search for faces");
  std::vector<Tagged> tagged;
  for (std::size_t i = 0; i < cur.steps.size(); ++i)
    tagged.push_back({static_cast<int>(i), cur.steps[i]});
  const ThreeCell& cell = p.cells.at(face.cell);
  for (int dir : {1, -1}) {
    Path2 q = normalize_path(b, whisker(face.left, cell_side(cell, dir), face.right));
    FaceSearch search{b, q, {}, {}, std::nullopt};
    search.run(cur.source, tagged, 0);
    if (!search.found) continue;
    Path2 pre{cur.source, search.found->first};
    Path2 suf{target(b, q), search.found->second};
    return SphereEntry{face.cell, dir, face.left, face.right, std::move(pre), std::move(suf)};
  }
  return std::nullopt;
}

namespace {

void arrangements(const Polygraph31& p, const Path2& cur, std::vector<Face> left,
                  std::vector<SphereEntry>& acc,
                  std::vector<std::pair<std::vector<SphereEntry>, Path2>>& out) {
  if (left.empty()) {
    out.emplace_back(acc, cur);
    return;
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto e = locate_face(p, cur, left[i]);
    if (!e) continue;
    std::vector<Face> rest = left;
    rest.erase(rest.begin() + static_cast<long>(i));
    acc.push_back(*e);
    arrangements(p, normalize_path(p.base, entry_after(p, *e)), rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Sphere3 assemble_sphere(const Polygraph31& p, const Path2& from, const std::vector<Face>& lhs,
                        const std::vector<Face>& rhs) {
  std::vector<std::pair<std::vector<SphereEntry>, Path2>> ls, rs;
  std::vector<SphereEntry> acc;
  Path2 start = normalize_path(p.base, from);
  arrangements(p, start, lhs, acc, ls);
  arrangements(p, start, rhs, acc, rs);
  for (const auto& [le, lend] : ls)
    for (const auto& [re, rend] : rs)
      if (paths_equal(p.base, lend, rend)) return Sphere3{from, lend, le, re};
  throw PreconditionError("faces do not close into a sphere");
}

}  // namespace polycox
