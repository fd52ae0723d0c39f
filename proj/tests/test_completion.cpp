#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "references.hpp"
#include "polycox/completion.hpp"
#include "polycox/error.hpp"

using namespace polycox;

namespace {

std::set<Word> sources(const std::vector<Branching>& bs) {
  std::set<Word> out;
  for (const Branching& b : bs) out.insert(b.source);
  return out;
}

std::set<std::tuple<Word, int, int, int, int>> keyed(const std::vector<Branching>& bs) {
  std::set<std::tuple<Word, int, int, int, int>> out;
  for (const Branching& b : bs) out.insert({b.source, b.left.at, b.left.rule, b.right.at, b.right.rule});
  return out;
}

Completion complete_b3plus() {
  Polygraph2 p = fx::b3plus();
  return homotopical_complete(p, fx::b3plus_order(p));
}

// Same, with the adjoined rules named gamma and delta.
Completion complete_b3plus_named() {
  Completion c = complete_b3plus();
  c.presentation.base.rules.at(2).id = "gamma";
  c.presentation.base.rules.at(3).id = "delta";
  return c;
}

// Faces of a sphere as (cell, left, right), ignoring direction and context.
std::multiset<std::tuple<std::string, std::string, std::string>> faces(const Polygraph31& p,
                                                                       const Sphere3& s) {
  std::multiset<std::tuple<std::string, std::string, std::string>> out;
  for (const auto* side : {&s.lhs, &s.rhs})
    for (const SphereEntry& e : *side)
      out.insert({p.cells[e.cell].id, p.base.word_string(e.left), p.base.word_string(e.right)});
  return out;
}

}  // namespace

TEST_CASE("critical branchings agree with a brute-force overlap scan") {
  Polygraph2 p = fx::b3plus();
  auto bs = critical_branchings(p);
  CHECK(keyed(bs) == oracle::brute_critical_pairs(p));
  CHECK(bs.size() == 1);
  CHECK(p.word_string(bs.front().source) == "sta");

  Polygraph2 c = fx::b3plus_completed();
  auto cs = critical_branchings(c);
  CHECK(keyed(cs) == oracle::brute_critical_pairs(c));
  std::set<Word> want{c.parse_word("sta"), c.parse_word("sast"), c.parse_word("sasas"),
                      c.parse_word("sasaa")};
  CHECK(sources(cs) == want);
  CHECK(cs.size() == 4);

  Polygraph2 a;
  a.generators = {"a", "b"};
  a.rules.push_back(fx::rule(a, "sq", "aa", "b"));
  auto as = critical_branchings(a);
  REQUIRE(as.size() == 1);
  CHECK(a.word_string(as.front().source) == "aaa");
}

TEST_CASE("inclusion overlaps are critical") {
  Polygraph2 p;
  p.generators = {"a", "b"};
  p.rules.push_back(fx::rule(p, "big", "aba", "b"));
  p.rules.push_back(fx::rule(p, "small", "b", "a"));
  auto bs = critical_branchings(p);
  CHECK(keyed(bs) == oracle::brute_critical_pairs(p));
  CHECK(std::any_of(bs.begin(), bs.end(), [](const Branching& b) { return b.inclusion; }));
}

TEST_CASE("homotopical completion of the B3+ example") {
  Completion c = complete_b3plus();
  const Polygraph2& p = c.presentation.base;
  REQUIRE(p.rules.size() == 4);
  CHECK(c.rules_added == 2);
  CHECK(p.word_string(p.rules[2].lhs) == "sas");
  CHECK(p.word_string(p.rules[2].rhs) == "aa");
  CHECK(p.word_string(p.rules[3].lhs) == "saa");
  CHECK(p.word_string(p.rules[3].rhs) == "aat");
  REQUIRE(c.presentation.cells.size() == 4);

  Polygraph2 named = fx::b3plus_completed();
  auto want = ref::b3plus_cells(named);
  for (std::size_t i = 0; i < 4; ++i) {
    const ThreeCell& got = c.presentation.cells[i];
    CAPTURE(i);
    CHECK(paths_equal(p, got.src, want[i].src));
    CHECK(paths_equal(p, got.tgt, want[i].tgt));
  }
}

TEST_CASE("completed presentation is convergent and every branching has a cell") {
  Completion c = complete_b3plus();
  const Polygraph2& p = c.presentation.base;
  CHECK(oracle::non_confluent_words(p, 8).empty());
  CHECK(c.presentation.cells.size() == critical_branchings(p).size());
  for (const ThreeCell& cell : c.presentation.cells) {
    Word e = target(p, cell.src);
    CHECK(e == target(p, cell.tgt));
    CHECK(find_redexes(e, p).empty());
  }
  CHECK_NOTHROW(c.presentation.validate());
}

TEST_CASE("completion of a convergent system only adds 3-cells") {
  Polygraph2 p = fx::b3plus_completed();
  Completion c = homotopical_complete(p, fx::b3plus_order(p));
  CHECK(c.rules_added == 0);
  CHECK(c.presentation.base.rules.size() == 4);
  CHECK(c.presentation.cells.size() == 4);
}

TEST_CASE("completion errors") {
  Polygraph2 p = fx::b3plus();
  CompletionOptions small;
  small.max_rules = 3;
  CHECK_THROWS_AS(homotopical_complete(p, fx::b3plus_order(p), small), BudgetError);

  Polygraph2 grow;
  grow.generators = {"a"};
  grow.rules.push_back(fx::rule(grow, "grow", "a", "aa"));
  CHECK_THROWS_AS(homotopical_complete(grow, TerminationOrder::deglex({0})), PreconditionError);

  // Terminating on the listed pair, but the adjoined pair cannot be oriented.
  Polygraph2 q;
  q.generators = {"a", "b", "c"};
  q.rules.push_back(fx::rule(q, "r1", "ab", "c"));
  q.rules.push_back(fx::rule(q, "r2", "bb", "a"));
  TerminationOrder table = TerminationOrder::user(
      {{q.parse_word("ab"), q.parse_word("c")}, {q.parse_word("bb"), q.parse_word("a")}});
  CHECK_THROWS_AS(homotopical_complete(q, table), PreconditionError);
}

TEST_CASE("triple critical branchings") {
  Polygraph2 c = fx::b3plus_completed();
  auto ts = triple_critical_branchings(c);
  std::set<Word> got;
  for (const auto& t : ts) got.insert(t.source);
  CHECK(got == oracle::brute_triple_sources(c, 7));
  CHECK(got.count(c.parse_word("sasta")));
  CHECK(got.count(c.parse_word("sasast")));

  CHECK(triple_critical_branchings(fx::b3plus()).empty());
  CHECK(oracle::brute_triple_sources(fx::b3plus(), 6).empty());

  Polygraph2 a;
  a.generators = {"a", "b"};
  a.rules.push_back(fx::rule(a, "sq", "aa", "b"));
  auto as = triple_critical_branchings(a);
  REQUIRE(as.size() == 1);
  CHECK(a.word_string(as.front().source) == "aaaa");
}

TEST_CASE("generating triple confluences of the B3+ example") {
  Completion c = complete_b3plus();
  Polygraph31& p = c.presentation;
  const char* names[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 4; ++i) p.cells[i].id = names[i];
  auto ts = triple_critical_branchings(p.base);
  auto find = [&](std::string_view src) {
    for (const auto& t : ts)
      if (t.source == p.base.parse_word(src)) return t;
    FAIL("missing triple " << src);
    return ts.front();
  };
  using F = std::multiset<std::tuple<std::string, std::string, std::string>>;

  Sphere3 w1 = generating_triple_confluence(p, find("sasta"));
  CHECK(sphere_defect(p, w1).empty());
  CHECK(faces(p, w1) == F{{"B", "", "a"}, {"A", "sa", ""}, {"C", "", ""}});

  Sphere3 w2 = generating_triple_confluence(p, find("sasast"));
  CHECK(sphere_defect(p, w2).empty());
  CHECK(faces(p, w2) == F{{"C", "", "t"}, {"B", "sa", ""}, {"D", "", ""}});

  for (const auto& t : ts) CHECK(sphere_defect(p, generating_triple_confluence(p, t)).empty());
}

TEST_CASE("a triple with a disjoint step still closes") {
  Completion c = complete_b3plus();
  const Polygraph31& p = c.presentation;
  const Polygraph2& b = p.base;
  TripleBranching t{b.parse_word("stata"), {b.rule_index("beta"), 1, 0},
                    {b.rule_index("alpha"), 1, 1}, {b.rule_index("alpha"), 1, 3}};
  Sphere3 s = generating_triple_confluence(p, t);
  CHECK(sphere_defect(p, s).empty());
}

TEST_CASE("faces are located up to exchange") {
  Completion c = complete_b3plus_named();
  const Polygraph31& p = c.presentation;
  const Polygraph2& b = p.base;
  // C·t is the only face needed to go from γast ⋆ aaaβ to its target side.
  Path2 from = compose(b, whisker({}, p.cells[2].src, b.parse_word("t")),
                       fx::path(b, "aaast", {{"beta", 1, 3}}));
  auto e = locate_face(p, from, Face{2, {}, b.parse_word("t")});
  REQUIRE(e.has_value());
  CHECK(e->dir == 1);
  CHECK(e->prefix.steps.empty());
  CHECK(e->suffix.steps.size() == 1);
  CHECK_FALSE(locate_face(p, from, Face{0, {}, {}}).has_value());
}

TEST_CASE("assemble_sphere reproduces the second generating confluence") {
  Completion c = complete_b3plus_named();
  const Polygraph31& p = c.presentation;
  const Polygraph2& b = p.base;
  Path2 from = fx::path(b, "sasast", {{"gamma", 1, 0}, {"beta", 1, 3}});
  Sphere3 s = assemble_sphere(p, from, {Face{2, {}, b.parse_word("t")}, Face{1, b.parse_word("sa"), {}}},
                              {Face{3, {}, {}}});
  CHECK(sphere_defect(p, s).empty());
  CHECK_THROWS_AS(assemble_sphere(p, from, {Face{0, {}, {}}}, {}), PreconditionError);
}
