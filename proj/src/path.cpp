#include "polycox/path.hpp"

#include <tuple>

#include "polycox/error.hpp"

namespace polycox {

Path2 identity_path(Word w) { return Path2{std::move(w), {}}; }

Path2 single_step(Word source, int rule, int dir, int at) {
  return Path2{std::move(source), {Step2{rule, dir, at}}};
}

std::vector<Word> path_words(const Polygraph2& p, const Path2& f) {
  std::vector<Word> words{f.source};
  words.reserve(f.steps.size() + 1);
  for (const Step2& s : f.steps) words.push_back(apply_step(words.back(), p, s));
  return words;
}

Word target(const Polygraph2& p, const Path2& f) {
  Word w = f.source;
  for (const Step2& s : f.steps) w = apply_step(w, p, s);
  return w;
}

Path2 compose(const Polygraph2& p, const Path2& f, const Path2& g) {
  if (target(p, f) != g.source)
    throw StepError("cannot compose: target '" + p.word_string(target(p, f)) +
                    "' differs from source '" + p.word_string(g.source) + "'");
  Path2 out = f;
  out.steps.insert(out.steps.end(), g.steps.begin(), g.steps.end());
  return out;
}

Path2 inverse(const Polygraph2& p, const Path2& f) {
  Path2 out{target(p, f), {}};
  for (auto it = f.steps.rbegin(); it != f.steps.rend(); ++it)
    out.steps.push_back({it->rule, -it->dir, it->at});
  return out;
}

Path2 whisker(const Word& u, const Path2& f, const Word& v) {
  Path2 out;
  out.source = u;
  out.source.insert(out.source.end(), f.source.begin(), f.source.end());
  out.source.insert(out.source.end(), v.begin(), v.end());
  const int shift = static_cast<int>(u.size());
  for (Step2 s : f.steps) {
    s.at += shift;
    out.steps.push_back(s);
  }
  return out;
}

int consumed(const Polygraph2& p, const Step2& s) {
  return static_cast<int>(p.rules.at(s.rule).side(s.dir).size());
}

int produced(const Polygraph2& p, const Step2& s) {
  return static_cast<int>(p.rules.at(s.rule).other(s.dir).size());
}

std::optional<std::pair<Step2, Step2>> exchange(const Polygraph2& p, const Step2& a,
                                                const Step2& b) {
  const int la = consumed(p, a), ta = produced(p, a);
  const int lb = consumed(p, b), tb = produced(p, b);
  const bool left = b.at + lb <= a.at;
  const bool right = b.at >= a.at + ta;
  // An insertion exactly where a deletion happened can be read on either
  // side; that is not an exchange.
  if (left && right) return std::nullopt;
  if (left) return std::make_pair(b, Step2{a.rule, a.dir, a.at + tb - lb});
  if (right) return std::make_pair(Step2{b.rule, b.dir, b.at - ta + la}, a);
  return std::nullopt;
}

bool inverse_steps(const Step2& a, const Step2& b) {
  return a.rule == b.rule && a.at == b.at && a.dir == -b.dir;
}

namespace {

auto order_key(const Polygraph2& p, const Step2& s) {
  return std::make_tuple(s.at, consumed(p, s), s.rule, s.dir);
}

}  // namespace

Path2 normalize_path(const Polygraph2& p, const Path2& f) {
  std::vector<Step2> st = f.steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
      if (inverse_steps(st[i], st[i + 1])) {
        st.erase(st.begin() + static_cast<long>(i), st.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (auto sw = exchange(p, st[i], st[i + 1])) {
        if (order_key(p, sw->first) < order_key(p, st[i])) {
          st[i] = sw->first;
          st[i + 1] = sw->second;
          changed = true;
        }
      }
    }
  }
  return Path2{f.source, std::move(st)};
}

bool paths_equal(const Polygraph2& p, const Path2& f, const Path2& g) {
  if (f.source != g.source) return false;
  if (target(p, f) != target(p, g)) return false;
  return normalize_path(p, f).steps == normalize_path(p, g).steps;
}

std::string render_step(const Polygraph2& p, const Word& before, const Step2& s) {
  const Rule& r = p.rules.at(s.rule);
  const std::size_t len = r.side(s.dir).size();
  Word left(before.begin(), before.begin() + s.at);
  Word right(before.begin() + s.at + static_cast<long>(len), before.end());
  std::string out;
  if (!left.empty()) out += p.word_string(left) + "·";
  out += r.name();
  if (s.dir < 0) out += "⁻";
  if (!right.empty()) out += "·" + p.word_string(right);
  return out;
}

std::string render(const Polygraph2& p, const Path2& f) {
  if (f.steps.empty()) return "1_" + p.word_string(f.source);
  auto words = path_words(p, f);
  std::string out;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    if (i) out += " ⋆ ";
    out += render_step(p, words[i], f.steps[i]);
  }
  return out;
}

}  // namespace polycox
