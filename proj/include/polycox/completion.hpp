#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polycox/path.hpp"
#include "polycox/word.hpp"

namespace polycox {

enum class BranchingKind { Aspherical, Peiffer, Overlap, Critical };

struct Branching {
  Word source;
  Step2 left;   // the step with the smaller (position, rule id)
  Step2 right;
  BranchingKind kind = BranchingKind::Critical;
  bool inclusion = false;  // one left-hand side sits inside the other
};

struct ThreeCell {
  std::string id;
  Path2 src;
  Path2 tgt;
  std::string label;
  const std::string& name() const { return label.empty() ? id : label; }
};

struct Polygraph31 {
  Polygraph2 base;
  std::vector<ThreeCell> cells;

  int cell_index(std::string_view id) const;
  // Throws InputError when a boundary is malformed or not parallel.
  void validate() const;
};

// One whiskered application of a generating 3-cell inside a 2-cell:
// prefix ⋆ (left · side · right) ⋆ suffix, moving from the src side to the
// tgt side when dir = +1.
struct SphereEntry {
  int cell = 0;
  int dir = 1;
  Word left;
  Word right;
  Path2 prefix;
  Path2 suffix;
};

// Two composable sequences of entries between the 2-cells `from` and `to`.
struct Sphere3 {
  Path2 from;
  Path2 to;
  std::vector<SphereEntry> lhs;
  std::vector<SphereEntry> rhs;
};

BranchingKind classify_branching(const Polygraph2& p, const Step2& a, const Step2& b);

std::vector<Branching> critical_branchings(const Polygraph2& p);

// Two paths out of a branching source, the first beginning with one step of
// the branching and the second with the other.
struct Joined {
  Path2 src;
  Path2 tgt;
  std::string tag;
};
using Joiner = std::function<Joined(const Polygraph2&, const Branching&)>;

// Names for rules and 3-cells adjoined by completion; defaults are used when
// these are empty.
using RuleNamer = std::function<Rule(const Polygraph2&, const Word& lhs, const Word& rhs)>;

struct CompletionOptions {
  std::size_t max_rules = 10000;
  std::size_t max_branchings = 100000;
  std::size_t step_budget = default_step_budget();
  Joiner joiner;    // defaults to leftmost normalization of both branches
  RuleNamer namer;  // defaults to ids r1, r2, ...
  std::string cell_prefix = "X";
};

struct Completion {
  Polygraph31 presentation;
  std::vector<std::string> tags;  // one per 3-cell, from the joiner
  std::size_t rules_added = 0;
  std::size_t branchings = 0;
};

Completion homotopical_complete(const Polygraph2& p, const TerminationOrder& order,
                                const CompletionOptions& opts = {});

struct TripleBranching {
  Word source;
  Step2 a, b, c;  // sorted by (position, rule id)
};

std::vector<TripleBranching> triple_critical_branchings(const Polygraph2& p);

// Entry boundaries as 2-cells of the free (2,1)-category.
Path2 entry_before(const Polygraph31& p, const SphereEntry& e);
Path2 entry_after(const Polygraph31& p, const SphereEntry& e);
std::vector<SphereEntry> inverse_entries(const std::vector<SphereEntry>& es);
// Adjacent mutually inverse entries cancelled.
std::vector<SphereEntry> cancel_entries(const Polygraph31& p, std::vector<SphereEntry> es);

// Empty string when the sphere is well formed, otherwise the first defect.
std::string sphere_defect(const Polygraph31& p, const Sphere3& s);

Sphere3 generating_triple_confluence(const Polygraph31& p, const TripleBranching& t);

// A face of a sphere given without its 2-cell context; the context and the
// direction are located inside the running 2-cell.
struct Face {
  int cell;
  Word left;
  Word right;
};

std::optional<SphereEntry> locate_face(const Polygraph31& p, const Path2& current,
                                       const Face& face);

// Applies faces in any order that fits, starting from `from` on both sides.
// Throws PreconditionError if no arrangement closes the sphere.
Sphere3 assemble_sphere(const Polygraph31& p, const Path2& from, const std::vector<Face>& lhs,
                        const std::vector<Face>& rhs);

std::string render_entry(const Polygraph31& p, const SphereEntry& e);

}  // namespace polycox
