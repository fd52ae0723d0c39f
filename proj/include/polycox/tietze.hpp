#pragma once

#include <map>
#include <string>
#include <vector>

#include "polycox/completion.hpp"

namespace polycox {

// A rule with one side equal to a single generator that does not occur on
// the other side. The generator is eliminated together with the rule.
struct CollapsibleRule {
  std::string rule;
  std::string generator;
  friend bool operator==(const CollapsibleRule&, const CollapsibleRule&) = default;
};

// A 3-cell whose boundary loop contains the rule exactly once, unwhiskered.
// Rotating the loop reads off the rule as a composite of the other rules.
struct CollapsibleCell {
  std::string cell;
  std::string rule;
  friend bool operator==(const CollapsibleCell&, const CollapsibleCell&) = default;
};

// A 3-sphere containing the 3-cell exactly once, unwhiskered.
struct CollapsibleSphere {
  Sphere3 sphere;
  std::string cell;
};

// Ranks per dimension; a redundant cell must outrank every cell of the same
// dimension in the boundary of its collapsible partner.
struct OrderWitness {
  std::map<std::string, int> generators;
  std::map<std::string, int> rules;
  std::map<std::string, int> cells;
};

struct CollapsiblePart {
  std::vector<CollapsibleRule> two_cells;
  std::vector<CollapsibleCell> three_cells;
  std::vector<CollapsibleSphere> spheres;
  OrderWitness order;

  bool empty() const { return two_cells.empty() && three_cells.empty() && spheres.empty(); }
};

// Empty when the part is collapsible; otherwise one message per violation.
std::vector<std::string> validate_collapsible(const Polygraph31& p, const CollapsiblePart& g);

struct Reduction {
  Polygraph31 result;
  // Image of every input generator as a word over the result's generators.
  std::vector<Word> generator_image;
  // Image of every input rule as a 2-cell over the result's rules.
  std::vector<Path2> rule_image;
  std::vector<std::string> removed_generators;
  std::vector<std::string> removed_rules;
  std::vector<std::string> removed_cells;
};

// Throws PreconditionError listing the violations if the part is invalid.
Reduction homotopical_reduce(const Polygraph31& p, const CollapsiblePart& g);

// Replaces a rule by its formal inverse; steps on it change direction.
Polygraph31 nielsen_invert_rule(const Polygraph31& p, int rule, std::string new_id = {},
                                std::string new_label = {});

// Coherent adjunction of a rule with the 3-cell witness ⇛ rule; undone by
// homotopical_reduce with the part {(cell, rule)}.
Polygraph31 adjoin_rule(const Polygraph31& p, Rule r, const Path2& witness,
                        const std::string& cell_id);

struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[u][v] = uv

  // Throws InputError unless the table is square, associative and unital.
  int unit() const;
};

// Generators û, rules γ_{u,v}: ûv̂ ⇒ (uv)^ and ι (stored as 1̂ ⇒ ε since
// rules may not rewrite the empty word), 3-cells α, λ, ρ.
Polygraph31 standard_coherent_presentation(const FiniteMonoid& m);

// Eliminations taking the standard presentation towards the reduced one:
// α-cells with a unit index, γ_{1,u} with λ_u, γ_{u,1} with ρ_u (u ≠ 1) and
// 1̂ with ι. The leftover ρ_1 becomes a loop on 1_ε and is removed by
// reduced_standard_presentation in a second pass.
CollapsiblePart standard_reduction_part(const Polygraph31& std3, const FiniteMonoid& m);

Polygraph31 reduced_standard_presentation(const FiniteMonoid& m);

}  // namespace polycox
