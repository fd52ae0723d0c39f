#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polycox/word.hpp"

namespace fx {

inline polycox::Rule rule(const polycox::Polygraph2& p, std::string id, std::string_view lhs,
                          std::string_view rhs, std::string label = {}) {
  return {std::move(id), p.parse_word(lhs), p.parse_word(rhs), std::move(label)};
}

// (s, t, a ; ta -> as, st -> a)
inline polycox::Polygraph2 b3plus() {
  polycox::Polygraph2 p;
  p.generators = {"s", "t", "a"};
  p.rules.push_back(rule(p, "alpha", "ta", "as", "α"));
  p.rules.push_back(rule(p, "beta", "st", "a", "β"));
  return p;
}

inline polycox::Polygraph2 b3plus_completed() {
  polycox::Polygraph2 p = b3plus();
  p.rules.push_back(rule(p, "gamma", "sas", "aa", "γ"));
  p.rules.push_back(rule(p, "delta", "saa", "aat", "δ"));
  return p;
}

// deglex with t > s > a
inline polycox::TerminationOrder b3plus_order(const polycox::Polygraph2& p) {
  return polycox::TerminationOrder::deglex_from_precedence(
      {p.generator_index("t"), p.generator_index("s"), p.generator_index("a")},
      p.generators.size());
}

inline polycox::Path2 path(const polycox::Polygraph2& p, std::string_view source,
                           std::vector<std::tuple<std::string, int, int>> steps) {
  polycox::Path2 out{p.parse_word(source), {}};
  for (auto& [id, dir, at] : steps) out.steps.push_back({p.rule_index(id), dir, at});
  return out;
}

}  // namespace fx
