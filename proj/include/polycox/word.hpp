#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycox {

using Gen = int;
using Word = std::vector<Gen>;

struct Rule {
  std::string id;
  Word lhs;
  Word rhs;
  std::string label;  // display name; falls back to id when empty

  const std::string& name() const { return label.empty() ? id : label; }
  const Word& side(int dir) const { return dir > 0 ? lhs : rhs; }
  const Word& other(int dir) const { return dir > 0 ? rhs : lhs; }
};

struct Polygraph2 {
  std::vector<std::string> generators;
  std::vector<Rule> rules;

  int generator_index(std::string_view name) const;  // -1 if absent
  int rule_index(std::string_view id) const;         // -1 if absent
  // Throws InputError on out-of-range letters, empty lhs, duplicate ids.
  void validate() const;
  bool long_names() const;
  std::string word_string(const Word& w) const;
  Word parse_word(std::string_view s) const;
};

// A rewriting step: rule applied forward (dir = +1) or backward (dir = -1)
// at a 0-based letter offset of the running word.
struct Step2 {
  int rule = 0;
  int dir = 1;
  int at = 0;

  friend bool operator==(const Step2&, const Step2&) = default;
};

struct Path2 {
  Word source;
  std::vector<Step2> steps;

  bool empty() const { return steps.empty(); }
  friend bool operator==(const Path2&, const Path2&) = default;
};

// Buckets rules by the first letter of their left-hand side.
class RuleIndex {
 public:
  explicit RuleIndex(const Polygraph2& p);
  const std::vector<int>& starting_with(Gen g) const;

 private:
  std::vector<std::vector<int>> by_first_;
  std::vector<int> none_;
};

struct Redex {
  int rule;
  int at;
  friend bool operator==(const Redex&, const Redex&) = default;
};

bool occurs_at(const Word& w, const Word& factor, std::size_t at);

// All (rule, position) pairs, sorted by (position, rule).
std::vector<Redex> find_redexes(const Word& w, const Polygraph2& p);
std::vector<Redex> find_redexes(const Word& w, const Polygraph2& p, const RuleIndex& idx);

Word apply_step(const Word& w, const Polygraph2& p, int rule, int at, int dir);
inline Word apply_step(const Word& w, const Polygraph2& p, const Step2& s) {
  return apply_step(w, p, s.rule, s.at, s.dir);
}

enum class Strategy { Leftmost, Rightmost };

// Reads POLYCOX_BUDGET_STEPS once; defaults to one million.
std::size_t default_step_budget();

struct Normalized {
  Word normal_form;
  Path2 path;
};

Normalized normalize(const Word& w, const Polygraph2& p,
                     Strategy strategy = Strategy::Leftmost,
                     std::size_t budget = default_step_budget());
Normalized normalize(const Word& w, const Polygraph2& p, const RuleIndex& idx,
                     Strategy strategy = Strategy::Leftmost,
                     std::size_t budget = default_step_budget());

enum class Ordering { Less, Equal, Greater, Incomparable };

struct TerminationOrder {
  enum class Kind { Deglex, GarsideWreath, UserTable };
  Kind kind = Kind::Deglex;
  std::vector<int> rank;    // per generator; larger rank is the larger letter
  std::vector<int> weight;  // GarsideWreath: length of each generator
  std::vector<std::pair<Word, Word>> table;  // UserTable: (greater, smaller)

  static TerminationOrder deglex(std::vector<int> rank);
  // Precedence list from largest to smallest, e.g. {t, s, a}.
  static TerminationOrder deglex_from_precedence(const std::vector<int>& largest_first,
                                                 std::size_t ngens);
  static TerminationOrder garside(std::vector<int> weight);
  static TerminationOrder user(std::vector<std::pair<Word, Word>> table);
};

Ordering compare(const TerminationOrder& order, const Word& a, const Word& b);

// Indices of rules whose lhs is not strictly greater than their rhs.
std::vector<int> check_termination(const Polygraph2& p, const TerminationOrder& order);

}  // namespace polycox
