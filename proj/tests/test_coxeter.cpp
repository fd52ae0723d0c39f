#include <functional>
#include <set>

#include "doctest.h"
#include "oracles_coxeter.hpp"
#include "polycox/coxeter.hpp"
#include "polycox/error.hpp"

using namespace polycox;

namespace {

CoxeterGroup group(const std::string& type) { return CoxeterGroup::enumerate_or_throw(coxeter_matrix(type)); }

int element(const CoxeterGroup& g, const std::string& word) {
  Word w;
  for (char c : word) w.push_back(static_cast<int>(std::string("rst").find(c)));
  return g.element(w);
}

// First letters of all reduced words of u, by brute force over words.
std::set<int> first_letters(const CoxeterGroup& g, int u) {
  std::set<int> out;
  std::function<void(int, int, int)> rec = [&](int x, int depth, int first) {
    if (depth == g.length(u)) {
      if (x == u) out.insert(first);
      return;
    }
    for (int s = 0; s < g.rank(); ++s) {
      int y = g.right(x, s);
      if (g.length(y) == depth + 1) rec(y, depth + 1, depth == 0 ? s : first);
    }
  };
  rec(0, 0, -1);
  return out;
}

}  // namespace

TEST_CASE("Todd-Coxeter group orders agree with the reflection representation") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"A1", 2},   {"A1xA1", 4},  {"A2", 6},   {"B2", 8},  {"A1xA1xA1", 8}, {"A2xA1", 12},
      {"A3", 24},  {"B3", 48},    {"H3", 120}, {"I2(5)xA1", 20}, {"A4", 120}};
  for (const auto& [type, order] : cases) {
    CAPTURE(type);
    CoxeterGroup g = group(type);
    CHECK(g.size() == order);
    auto ref = oracle::reflection_enumerate(coxeter_matrix(type));
    CHECK(ref.closed);
    CHECK(ref.size == g.size());
    CHECK(ref.longest_length == g.length(g.longest()));
  }
}

TEST_CASE("Cayley actions satisfy the Coxeter relations") {
  for (const std::string type : {"A2", "B2", "A3", "B3", "H3", "A1xA1xA1"}) {
    CoxeterGroup g = group(type);
    const CoxeterMatrix& m = g.matrix();
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (int s = 0; s < g.rank(); ++s) {
        CHECK(g.right(g.right(static_cast<int>(u), s), s) == static_cast<int>(u));
        CHECK(std::abs(g.length(g.right(static_cast<int>(u), s)) - g.length(static_cast<int>(u))) == 1);
        for (int t = s + 1; t < g.rank(); ++t) {
          int x = static_cast<int>(u);
          for (int k = 0; k < m.m[s][t]; ++k) x = g.right(g.right(x, s), t);
          CHECK(x == static_cast<int>(u));
        }
      }
    }
  }
}

TEST_CASE("small Coxeter groups") {
  CoxeterGroup a2 = group("A2");
  CHECK(a2.length(a2.longest()) == 3);
  CoxeterGroup a111 = group("A1xA1xA1");
  CHECK(a111.name(a111.longest()) == "rst");
  CHECK(a111.length(a111.longest()) == 3);
}

TEST_CASE("length-additive products") {
  CoxeterGroup g = group("A2");
  int s = g.generator(0), t = g.generator(1);
  CHECK(g.is_reduced_product(s, t));
  CHECK_FALSE(g.is_reduced_product(s, s));
  int st = g.mul(s, t);
  CHECK(g.is_reduced_product(st, s));
  CHECK_FALSE(g.is_reduced_product(st, t));
}

TEST_CASE("smallest divisors") {
  CoxeterGroup g = group("A3");
  CHECK(g.smallest_divisor(g.generator(2)) == 2);
  CHECK(g.smallest_divisor(g.longest()) == 0);
  CHECK_THROWS_AS(g.smallest_divisor(g.identity()), PreconditionError);
  for (std::size_t u = 1; u < g.size(); ++u)
    CHECK(g.smallest_divisor(static_cast<int>(u)) == *first_letters(g, static_cast<int>(u)).begin());
}

TEST_CASE("complements") {
  CoxeterGroup g = group("A2");
  int w0 = g.longest();
  CHECK(g.complement(w0, w0) == g.identity());
  CHECK(g.complement(g.identity(), w0) == w0);
  CHECK(g.name(g.complement(g.generator(0), w0)) == "sr");
  CHECK_THROWS_AS(g.complement(element(g, "rs"), element(g, "sr")), PreconditionError);
  CoxeterGroup b3 = group("B3");
  for (std::size_t u = 0; u < b3.size(); ++u)
    for (std::size_t v = 0; v < b3.size(); ++v) {
      int ui = static_cast<int>(u), vi = static_cast<int>(v);
      if (!b3.left_divides(ui, vi)) continue;
      int c = b3.complement(ui, vi);
      CHECK(b3.mul(ui, c) == vi);
      CHECK(b3.length(ui) + b3.length(c) == b3.length(vi));
    }
}

TEST_CASE("longest elements of parabolics are least common multiples") {
  CoxeterGroup a2 = group("A2");
  CHECK(a2.longest_element({0}) == a2.generator(0));
  int w = *a2.longest_element({0, 1});
  CHECK(a2.length(w) == 3);
  CHECK(w == element(a2, "rsr"));
  CHECK(w == element(a2, "srs"));
  CoxeterGroup a3 = group("A3");
  CHECK(a3.length(*a3.longest_element({0, 1, 2})) == 6);

  CoxeterGroup h3 = group("H3");
  for (std::vector<int> gens : std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}) {
    int l = *h3.longest_element(gens);
    for (int s : gens) CHECK(h3.left_divides(h3.generator(s), l));
    for (std::size_t x = 0; x < h3.size(); ++x) {
      bool common = true;
      for (int s : gens) common = common && h3.left_divides(h3.generator(s), static_cast<int>(x));
      if (common) CHECK(h3.left_divides(l, static_cast<int>(x)));
    }
  }
}

TEST_CASE("rank-3 finiteness") {
  CHECK(rank3_finite(3, 2, 3));
  CHECK_FALSE(rank3_finite(3, 3, 3));
  CHECK(rank3_finite(2, 2, 2));
  CHECK_FALSE(rank3_finite(2, kInfinity, 3));
  CHECK_FALSE(CoxeterGroup::enumerate(coxeter_matrix("A~2"), 20000).has_value());
  // Agreement with closure of the reflection representation and with the
  // list A3, B3, H3, A1³, I2(p)×A1.
  const std::vector<int> values{2, 3, 4, 5, 6, 7, kInfinity};
  for (int a : values)
    for (int b : values)
      for (int c : values) {
        CoxeterMatrix m{{"r", "s", "t"}, {{1, a, b}, {a, 1, c}, {b, c, 1}}};
        bool closes = CoxeterGroup::enumerate(m, 5000).has_value();
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(rank3_finite(a, b, c) == closes);
        std::multiset<int> ms{a, b, c};
        bool listed = ms == std::multiset<int>{2, 3, 3} || ms == std::multiset<int>{2, 3, 4} ||
                      ms == std::multiset<int>{2, 3, 5} || ms == std::multiset<int>{2, 2, 2} ||
                      (ms.count(2) >= 2 && !ms.count(kInfinity));
        CHECK(rank3_finite(a, b, c) == listed);
      }
}

TEST_CASE("left-weighted pairs") {
  CoxeterGroup g = group("A2");
  // r·sr = rsr is the longest element, so everything slides left.
  auto [u, v] = g.left_weighted(g.generator(0), element(g, "sr"));
  CHECK(u == g.longest());
  CHECK(v == g.identity());
  for (std::size_t a = 1; a < g.size(); ++a)
    for (std::size_t b = 1; b < g.size(); ++b) {
      auto [x, y] = g.left_weighted(static_cast<int>(a), static_cast<int>(b));
      CHECK(g.mul(x, y) == g.mul(static_cast<int>(a), static_cast<int>(b)));
      CHECK(g.gcd(g.complement(x, g.longest()), y) == g.identity());
      if (g.gcd(g.complement(static_cast<int>(a), g.longest()), static_cast<int>(b)) == 0)
        CHECK(std::make_pair(x, y) == std::make_pair(static_cast<int>(a), static_cast<int>(b)));
    }
}

TEST_CASE("invalid Coxeter matrices") {
  CoxeterMatrix bad{{"r", "s"}, {{1, 3}, {2, 1}}};
  CHECK_THROWS_AS(CoxeterGroup::enumerate(bad), InputError);
  CoxeterMatrix one{{"r", "s"}, {{1, 1}, {1, 1}}};
  CHECK_THROWS_AS(CoxeterGroup::enumerate(one), InputError);
  CHECK_THROWS_AS(coxeter_matrix("E8"), InputError);
}
