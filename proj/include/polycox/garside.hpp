#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polycox/completion.hpp"
#include "polycox/coxeter.hpp"
#include "polycox/tietze.hpp"

namespace polycox {

// Generators are the elements of W other than 1, in id order, so the
// generator of element u has index u - 1.
struct GarsidePresentation {
  Polygraph2 base;
  std::vector<int> element;                 // generator -> element of W
  std::map<std::pair<int, int>, int> alpha;  // (u, v) -> rule α_{u,v}

  Gen generator(int u) const { return u - 1; }
};

GarsidePresentation garside_presentation(const CoxeterGroup& g);

struct FamilyTag {
  char family = 'A';       // 'A' .. 'I'
  std::vector<int> index;  // elements of W

  friend bool operator<(const FamilyTag& a, const FamilyTag& b) {
    return std::tie(a.family, a.index) < std::tie(b.family, b.index);
  }
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// "C[r|s|rt|t]"
std::string tag_id(const CoxeterGroup& g, const FamilyTag& t);

struct GarsideCompletion {
  GarsidePresentation gar2;
  Completion completion;           // cells renamed after their tags
  std::vector<FamilyTag> tags;     // one per 3-cell
  std::map<std::tuple<int, int, int>, int> beta;  // (u, v, w) -> β_{u,v,w}: u|vw ⇒ uv|w
  std::map<FamilyTag, int> cell_of;
};

// Completion for the wreath order with weights given by length. Every 3-cell
// is recognised structurally as one of the nine families; a branching that
// fits none of them raises PreconditionError.
GarsideCompletion complete_garside(const CoxeterGroup& g);

// B-cells collapsible with their β rules; C..I removed through the spheres
// ω^C..ω^I. Throws PreconditionError when a sphere face is missing.
CollapsiblePart garside_reduction_part(const CoxeterGroup& g, const GarsideCompletion& gc);

// Completion followed by reduction along garside_reduction_part.
Reduction reduce_garside(const CoxeterGroup& g, const GarsideCompletion& gc);

// The same presentation written down directly: rules α_{u,v}, 3-cells
// A_{u,v,w} for every length-additive triple.
Polygraph31 garside_coherent(const CoxeterGroup& g, const GarsidePresentation& gar2);

// The 4-spheres ω_{u,v,w,x} over garside_coherent, one per length-additive
// quadruple.
struct Gar4Sphere {
  std::array<int, 4> index;
  Sphere3 sphere;
};
std::vector<Gar4Sphere> gar4_spheres(const CoxeterGroup& g, const GarsidePresentation& gar2,
                                     const Polygraph31& gar3);

enum class Classification { Essential, Collapsible, Redundant };
const char* to_string(Classification c);

// Throws PreconditionError unless the entries are nontrivial and their
// product is length-additive.
Classification classify_tuple(const CoxeterGroup& g, const std::vector<int>& tuple);

// (l(u₁⋯uₙ), d_{u₁}, l(u₁), ..., d_{u₁⋯uₙ₋₁}, l(u₁⋯uₙ₋₁)), compared
// lexicographically.
std::vector<int> phi_key(const CoxeterGroup& g, const std::vector<int>& tuple);

// Generators S, rules γ_{s,t}: ⟨ts⟩^m ⇒ ⟨st⟩^m for s < t with m finite.
Polygraph2 artin_presentation(const CoxeterMatrix& m);
std::string gamma_id(const CoxeterMatrix& m, int s, int t);

// The images under the reduction Gar₃(W) → Art₃(W): 1-cells go to canonical
// words, 2-cells are expanded by the recursions on essential, collapsible and
// redundant pairs. Results are normalized paths over artin_presentation.
class ArtinProjection {
 public:
  explicit ArtinProjection(const CoxeterGroup& g);

  const Polygraph2& target() const { return art_; }
  const Word& element(int u) const { return g_.canonical_word(u); }
  Path2 alpha(int u, int v);
  std::pair<Path2, Path2> cell(int u, int v, int w);

 private:
  const CoxeterGroup& g_;
  Polygraph2 art_;
  std::map<std::pair<int, int>, Path2> memo_;
  int depth_ = 0;

  Path2 alpha_raw(int u, int v);
  int gamma(int s, int t) const;
};

// Art₂(W) with one 3-cell Z_{r,s,t} for each r < s < t whose parabolic
// subgroup is finite. Each Z is computed inside its own parabolic.
Polygraph31 artin_coherent(const CoxeterMatrix& m);

// Z_{r,s,t} for the generators r < s < t of g itself (rank 3).
ThreeCell zamolodchikov(const CoxeterGroup& g);

struct Census {
  std::size_t c0 = 1, c1 = 0, c2 = 0, c3 = 0;
  friend bool operator==(const Census&, const Census&) = default;
};
Census cell_census(const Polygraph31& p);

// Local sliding on words of elements of W: one step replaces an adjacent
// pair that is not left-weighted by its left-weighted form, dropping a
// trailing 1.
bool is_left_weighted(const CoxeterGroup& g, int u, int v);
std::vector<int> slide_at(const CoxeterGroup& g, const std::vector<int>& word, std::size_t i);
// Slides the leftmost non-left-weighted pair until none is left.
std::vector<int> sliding_normal_form(const CoxeterGroup& g, std::vector<int> word);

}  // namespace polycox
