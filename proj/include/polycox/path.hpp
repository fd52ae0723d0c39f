#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycox/word.hpp"

namespace polycox {

Path2 identity_path(Word w);
Path2 single_step(Word source, int rule, int dir, int at);

// Running words: source, then the word after each step. Throws StepError.
std::vector<Word> path_words(const Polygraph2& p, const Path2& f);
Word target(const Polygraph2& p, const Path2& f);

Path2 compose(const Polygraph2& p, const Path2& f, const Path2& g);
Path2 inverse(const Polygraph2& p, const Path2& f);
Path2 whisker(const Word& u, const Path2& f, const Word& v);

// Lengths of the factor a step consumes and produces.
int consumed(const Polygraph2& p, const Step2& s);
int produced(const Polygraph2& p, const Step2& s);

// For a followed by b, the pair (b', a') with b' then a' equal to a then b
// by exchange, when the two redexes are disjoint.
std::optional<std::pair<Step2, Step2>> exchange(const Polygraph2& p, const Step2& a,
                                                const Step2& b);

bool inverse_steps(const Step2& a, const Step2& b);

Path2 normalize_path(const Polygraph2& p, const Path2& f);
bool paths_equal(const Polygraph2& p, const Path2& f, const Path2& g);

// "γ_st·r ⋆ s·γ_rt ⋆ γ_rs·t"
std::string render(const Polygraph2& p, const Path2& f);
std::string render_step(const Polygraph2& p, const Word& before, const Step2& s);

}  // namespace polycox
