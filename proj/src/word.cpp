#include "polycox/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "polycox/error.hpp"

namespace polycox {

int Polygraph2::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

int Polygraph2::rule_index(std::string_view id) const {
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (rules[i].id == id) return static_cast<int>(i);
  return -1;
}

void Polygraph2::validate() const {
  std::set<std::string> names(generators.begin(), generators.end());
  if (names.size() != generators.size()) throw InputError("duplicate generator name");
  std::set<std::string> ids;
  const int n = static_cast<int>(generators.size());
  for (const Rule& r : rules) {
    if (!ids.insert(r.id).second) throw InputError("duplicate rule id '" + r.id + "'");
    if (r.lhs.empty()) throw InputError("rule '" + r.id + "' has an empty left-hand side");
    for (const Word* w : {&r.lhs, &r.rhs})
      for (Gen g : *w)
        if (g < 0 || g >= n) throw InputError("rule '" + r.id + "' uses an unknown generator");
  }
}

bool Polygraph2::long_names() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const std::string& s) { return s.size() != 1; });
}

std::string Polygraph2::word_string(const Word& w) const {
  const bool dotted = long_names();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dotted && i) out += '.';
    out += generators.at(w[i]);
  }
  return out;
}

Word Polygraph2::parse_word(std::string_view s) const {
  Word w;
  if (s.empty()) return w;
  auto lookup = [&](std::string_view name) {
    int g = generator_index(name);
    if (g < 0) throw InputError("unknown generator '" + std::string(name) + "'");
    return g;
  };
  if (long_names() || s.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t dot = s.find('.', start);
      w.push_back(lookup(s.substr(start, dot == std::string_view::npos ? dot : dot - start)));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : s) w.push_back(lookup(std::string_view(&c, 1)));
  }
  return w;
}

RuleIndex::RuleIndex(const Polygraph2& p) : by_first_(p.generators.size()) {
  for (std::size_t r = 0; r < p.rules.size(); ++r) {
    Gen g = p.rules[r].lhs.at(0);
    by_first_.at(g).push_back(static_cast<int>(r));
  }
}

const std::vector<int>& RuleIndex::starting_with(Gen g) const {
  if (g < 0 || static_cast<std::size_t>(g) >= by_first_.size()) return none_;
  return by_first_[g];
}

bool occurs_at(const Word& w, const Word& factor, std::size_t at) {
  if (at + factor.size() > w.size()) return false;
  return std::equal(factor.begin(), factor.end(), w.begin() + static_cast<long>(at));
}

std::vector<Redex> find_redexes(const Word& w, const Polygraph2& p, const RuleIndex& idx) {
  std::vector<Redex> out;
  const int n = static_cast<int>(p.generators.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= n) throw InputError("word letter out of range");
    for (int r : idx.starting_with(w[i]))  // ascending rule ids
      if (occurs_at(w, p.rules[r].lhs, i)) out.push_back({r, static_cast<int>(i)});
  }
  return out;
}

std::vector<Redex> find_redexes(const Word& w, const Polygraph2& p) {
  return find_redexes(w, p, RuleIndex(p));
}

Word apply_step(const Word& w, const Polygraph2& p, int rule, int at, int dir) {
  if (rule < 0 || static_cast<std::size_t>(rule) >= p.rules.size())
    throw StepError("unknown rule index " + std::to_string(rule));
  const Rule& r = p.rules[rule];
  const Word& from = r.side(dir);
  const Word& to = r.other(dir);
  if (at < 0 || !occurs_at(w, from, static_cast<std::size_t>(at)))
    throw StepError("rule '" + r.id + "' does not apply at offset " + std::to_string(at) +
                    " of '" + p.word_string(w) + "'");
  Word out(w.begin(), w.begin() + at);
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + at + static_cast<long>(from.size()), w.end());
  return out;
}

std::size_t default_step_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("POLYCOX_BUDGET_STEPS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return budget;
}

Normalized normalize(const Word& w, const Polygraph2& p, const RuleIndex& idx,
                     Strategy strategy, std::size_t budget) {
  Normalized out{w, Path2{w, {}}};
  for (std::size_t n = 0;; ++n) {
    auto redexes = find_redexes(out.normal_form, p, idx);
    if (redexes.empty()) break;
    if (n >= budget)
      throw BudgetError("normalization of '" + p.word_string(w) + "' exceeded " +
                        std::to_string(budget) + " steps");
    Redex pick = redexes.front();
    if (strategy == Strategy::Rightmost) {
      int at = redexes.back().at;
      for (const Redex& r : redexes)
        if (r.at == at) { pick = r; break; }
    }
    out.normal_form = apply_step(out.normal_form, p, pick.rule, pick.at, 1);
    out.path.steps.push_back({pick.rule, 1, pick.at});
  }
  return out;
}

Normalized normalize(const Word& w, const Polygraph2& p, Strategy strategy, std::size_t budget) {
  return normalize(w, p, RuleIndex(p), strategy, budget);
}

TerminationOrder TerminationOrder::deglex(std::vector<int> rank) {
  TerminationOrder o;
  o.kind = Kind::Deglex;
  o.rank = std::move(rank);
  return o;
}

TerminationOrder TerminationOrder::deglex_from_precedence(const std::vector<int>& largest_first,
                                                          std::size_t ngens) {
  std::vector<int> rank(ngens, -1);
  int r = static_cast<int>(largest_first.size());
  for (int g : largest_first) rank.at(g) = r--;
  for (int& x : rank)
    if (x < 0) throw InputError("precedence list does not mention every generator");
  return deglex(std::move(rank));
}

TerminationOrder TerminationOrder::garside(std::vector<int> weight) {
  TerminationOrder o;
  o.kind = Kind::GarsideWreath;
  o.weight = std::move(weight);
  return o;
}

TerminationOrder TerminationOrder::user(std::vector<std::pair<Word, Word>> table) {
  TerminationOrder o;
  o.kind = Kind::UserTable;
  o.table = std::move(table);
  return o;
}

namespace {

Ordering lex_by_rank(const Word& a, const Word& b, const std::vector<int>& rank) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int ra = rank.empty() ? a[i] : rank.at(a[i]);
    int rb = rank.empty() ? b[i] : rank.at(b[i]);
    if (ra != rb) return ra < rb ? Ordering::Less : Ordering::Greater;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? Ordering::Less : Ordering::Greater;
  return Ordering::Equal;
}

bool table_reaches(const std::vector<std::pair<Word, Word>>& table, const Word& from,
                   const Word& to) {
  std::vector<Word> todo{from};
  std::set<Word> seen{from};
  while (!todo.empty()) {
    Word w = todo.back();
    todo.pop_back();
    for (const auto& [big, small] : table) {
      if (big != w) continue;
      if (small == to) return true;
      if (seen.insert(small).second) todo.push_back(small);
    }
  }
  return false;
}

}  // namespace

Ordering compare(const TerminationOrder& order, const Word& a, const Word& b) {
  if (a == b) return Ordering::Equal;
  switch (order.kind) {
    case TerminationOrder::Kind::Deglex:
      if (a.size() != b.size()) return a.size() < b.size() ? Ordering::Less : Ordering::Greater;
      return lex_by_rank(a, b, order.rank);
    case TerminationOrder::Kind::GarsideWreath: {
      if (a.size() != b.size()) return a.size() < b.size() ? Ordering::Less : Ordering::Greater;
      for (std::size_t i = a.size(); i-- > 0;) {
        int la = order.weight.at(a[i]), lb = order.weight.at(b[i]);
        if (la != lb) return la < lb ? Ordering::Less : Ordering::Greater;
      }
      // Equal profiles: fall back on generator ids so the order stays total.
      return lex_by_rank(a, b, order.rank);
    }
    case TerminationOrder::Kind::UserTable:
      if (table_reaches(order.table, a, b)) return Ordering::Greater;
      if (table_reaches(order.table, b, a)) return Ordering::Less;
      return Ordering::Incomparable;
  }
  return Ordering::Incomparable;
}

std::vector<int> check_termination(const Polygraph2& p, const TerminationOrder& order) {
  std::vector<int> bad;
  for (std::size_t r = 0; r < p.rules.size(); ++r)
    if (compare(order, p.rules[r].lhs, p.rules[r].rhs) != Ordering::Greater)
      bad.push_back(static_cast<int>(r));
  return bad;
}

}  // namespace polycox
