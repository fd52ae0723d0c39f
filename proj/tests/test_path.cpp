#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "polycox/error.hpp"
#include "polycox/path.hpp"

using namespace polycox;

namespace {

// r, s, t pairwise commuting: tr -> rt, ts -> st, sr -> rs.
Polygraph2 commuting3() {
  Polygraph2 p;
  p.generators = {"r", "s", "t"};
  p.rules.push_back(fx::rule(p, "gamma_rs", "sr", "rs", "γ_rs"));
  p.rules.push_back(fx::rule(p, "gamma_rt", "tr", "rt", "γ_rt"));
  p.rules.push_back(fx::rule(p, "gamma_st", "ts", "st", "γ_st"));
  return p;
}

// A random valid path of the given length, steps in both directions.
Path2 random_path(const Polygraph2& p, std::mt19937& rng, Word source, int len) {
  Path2 f{source, {}};
  Word w = source;
  for (int i = 0; i < len; ++i) {
    std::vector<Step2> options;
    for (std::size_t r = 0; r < p.rules.size(); ++r)
      for (int dir : {1, -1}) {
        const Word& side = p.rules[r].side(dir);
        for (std::size_t at = 0; at + side.size() <= w.size(); ++at)
          if (occurs_at(w, side, at)) options.push_back({static_cast<int>(r), dir, static_cast<int>(at)});
      }
    if (options.empty()) break;
    Step2 s = options[rng() % options.size()];
    w = apply_step(w, p, s);
    f.steps.push_back(s);
  }
  return f;
}

// Same rewriting as normalize_path, but with swaps tried before cancellations.
Path2 swap_first(const Polygraph2& p, const Path2& f) {
  std::vector<Step2> st = f.steps;
  auto key = [&](const Step2& s) { return std::make_tuple(s.at, consumed(p, s), s.rule, s.dir); };
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < st.size() && !changed; ++i)
      if (auto sw = exchange(p, st[i], st[i + 1]); sw && key(sw->first) < key(st[i])) {
        st[i] = sw->first;
        st[i + 1] = sw->second;
        changed = true;
      }
    for (std::size_t i = 0; i + 1 < st.size() && !changed; ++i)
      if (inverse_steps(st[i], st[i + 1])) {
        st.erase(st.begin() + i, st.begin() + i + 2);
        changed = true;
      }
    if (!changed) break;
  }
  return {f.source, st};
}

}  // namespace

TEST_CASE("compose with an identity is neutral and checks boundaries") {
  Polygraph2 p = commuting3();
  Path2 f = fx::path(p, "tsr", {{"gamma_st", 1, 0}});
  CHECK(compose(p, f, identity_path(target(p, f))) == f);
  CHECK_THROWS_AS(compose(p, f, identity_path(p.parse_word("tsr"))), StepError);
}

TEST_CASE("the source branch of the commuting Zamolodchikov cell") {
  Polygraph2 p = commuting3();
  Path2 f = fx::path(p, "tsr", {{"gamma_st", 1, 0}});
  f = compose(p, f, fx::path(p, "str", {{"gamma_rt", 1, 1}}));
  f = compose(p, f, fx::path(p, "srt", {{"gamma_rs", 1, 0}}));
  CHECK(p.word_string(target(p, f)) == "rst");
  CHECK(render(p, f) == "γ_st·r ⋆ s·γ_rt ⋆ γ_rs·t");
  CHECK(render(p, identity_path(p.parse_word("rs"))) == "1_rs");
}

TEST_CASE("inverse reverses steps") {
  Polygraph2 p = commuting3();
  CHECK(inverse(p, identity_path(p.parse_word("rs"))) == identity_path(p.parse_word("rs")));
  Path2 one = fx::path(p, "tsr", {{"gamma_st", 1, 0}});
  Path2 inv = inverse(p, one);
  CHECK(inv.source == p.parse_word("str"));
  CHECK(inv.steps == std::vector<Step2>{{p.rule_index("gamma_st"), -1, 0}});
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Path2 f = random_path(p, rng, p.parse_word("tsrts"), 6);
    CHECK(inverse(p, inverse(p, f)) == f);
    CHECK(normalize_path(p, compose(p, f, inverse(p, f))).steps.empty());
  }
}

TEST_CASE("whisker shifts offsets") {
  Polygraph2 p = commuting3();
  Path2 f = fx::path(p, "tr", {{"gamma_rt", 1, 0}});
  CHECK(whisker({}, f, {}) == f);
  Path2 g = whisker(p.parse_word("s"), f, p.parse_word("srt"));
  CHECK(g.source == p.parse_word("strsrt"));
  CHECK(g.steps.front().at == 1);
  CHECK(target(p, g) == p.parse_word("srtsrt"));
}

TEST_CASE("normalize_path puts disjoint steps left to right") {
  Polygraph2 p = commuting3();
  // s·γ_rt·srt then srts·γ_rt⁻ written in the other order.
  Path2 a = fx::path(p, "strsrt", {{"gamma_rt", 1, 1}, {"gamma_rt", -1, 4}});
  Path2 b = fx::path(p, "strsrt", {{"gamma_rt", -1, 4}, {"gamma_rt", 1, 1}});
  CHECK(normalize_path(p, b) == a);
  CHECK(paths_equal(p, a, b));
  CHECK(render(p, normalize_path(p, a)) == "s·γ_rt·srt ⋆ srts·γ_rt⁻");
}

TEST_CASE("normalize_path is idempotent and preserves boundaries") {
  Polygraph2 p = fx::b3plus_completed();
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    Path2 f = random_path(p, rng, p.parse_word("sastsast"), 8);
    Path2 n = normalize_path(p, f);
    CHECK(normalize_path(p, n) == n);
    CHECK(target(p, n) == target(p, f));
    CHECK(paths_equal(p, f, compose(p, f, identity_path(target(p, f)))));
  }
}

TEST_CASE("cancel-first and swap-first normalization agree") {
  std::vector<std::pair<Polygraph2, std::vector<std::string>>> cases{
      {commuting3(), {"tsr", "tsrs", "srtr"}},
      {fx::b3plus_completed(), {"stst", "sasa", "tast"}}};
  for (auto& [p, sources] : cases) {
    for (const std::string& src : sources) {
      // Every path of length <= 5 from src.
      std::function<void(Path2&, Word&, int)> rec = [&](Path2& f, Word& w, int left) {
        CHECK(normalize_path(p, f) == swap_first(p, f));
        if (left == 0) return;
        for (std::size_t r = 0; r < p.rules.size(); ++r)
          for (int dir : {1, -1}) {
            const Word& side = p.rules[r].side(dir);
            for (std::size_t at = 0; at + side.size() <= w.size(); ++at) {
              if (!occurs_at(w, side, at)) continue;
              Step2 s{static_cast<int>(r), dir, static_cast<int>(at)};
              Word next = apply_step(w, p, s);
              f.steps.push_back(s);
              rec(f, next, left - 1);
              f.steps.pop_back();
            }
          }
      };
      Path2 f{p.parse_word(src), {}};
      Word w = f.source;
      rec(f, w, 5);
    }
  }
}

TEST_CASE("all interleavings of disjoint steps are equal") {
  // Four disjoint redexes of β: st -> a in stststst, applied in every order.
  Polygraph2 p = fx::b3plus_completed();
  const int beta = p.rule_index("beta");
  std::vector<int> order{0, 1, 2, 3};
  Path2 first;
  do {
    // Offsets recomputed by hand: each applied block shrinks from 2 to 1.
    Path2 f{p.parse_word("stststst"), {}};
    std::vector<bool> done(4, false);
    for (int k : order) {
      int at = 0;
      for (int j = 0; j < k; ++j) at += done[j] ? 1 : 2;
      f.steps.push_back({beta, 1, at});
      done[k] = true;
    }
    CHECK(p.word_string(target(p, f)) == "aaaa");
    if (first.steps.empty()) first = f;
    CHECK(paths_equal(p, first, f));
  } while (std::next_permutation(order.begin(), order.end()));

  Path2 other = fx::path(p, "stststst", {{"beta", 1, 0}});
  CHECK_FALSE(paths_equal(p, first, other));
}
