#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycox/word.hpp"

namespace polycox {

// m_st = 0 encodes ∞.
inline constexpr int kInfinity = 0;

struct CoxeterMatrix {
  std::vector<std::string> names;  // declaration order is the order on S
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(names.size()); }
  // Throws InputError unless symmetric with m_ss = 1 and m_st >= 2 or ∞.
  void validate() const;
  // The restriction to the listed generators, in the given order.
  CoxeterMatrix parabolic(const std::vector<int>& gens) const;
};

// Common types. Generators are named r, s, t, ... unless names are given.
CoxeterMatrix coxeter_matrix(const std::string& type);

bool rank3_finite(int m_rs, int m_rt, int m_st);

// A finite Coxeter group as the Cayley graph of its right action. Element 0
// is the identity and ids grow with length.
class CoxeterGroup {
 public:
  // Todd-Coxeter coset enumeration over the trivial subgroup; nullopt when the
  // coset cap is exceeded (infinite or too large).
  static std::optional<CoxeterGroup> enumerate(const CoxeterMatrix& m,
                                               std::size_t coset_cap = 1000000);
  // Same, throwing BudgetError instead of returning nullopt.
  static CoxeterGroup enumerate_or_throw(const CoxeterMatrix& m,
                                         std::size_t coset_cap = 1000000);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t size() const { return length_.size(); }
  int identity() const { return 0; }

  int length(int u) const { return length_.at(u); }
  int right(int u, int s) const { return right_[u * rank() + s]; }
  int left(int s, int u) const { return left_[u * rank() + s]; }
  int inverse(int u) const { return inverse_.at(u); }
  int mul(int u, int v) const;
  int element(const Word& letters) const;
  int generator(int s) const { return right(0, s); }

  bool is_reduced_product(int u, int v) const { return length(mul(u, v)) == length(u) + length(v); }
  bool left_divides(int u, int v) const;
  // Least generator s in the order on S with l(su) < l(u). Throws on u = 1.
  int smallest_divisor(int u) const;
  // u⁻¹v; throws PreconditionError unless u left-divides v.
  int complement(int u, int v) const;
  // Greatest common left divisor.
  int gcd(int u, int v) const;
  std::optional<int> longest_element(const std::vector<int>& gens) const;
  int longest() const { return longest_; }
  // (u(∂u ∧ v), (∂u ∧ v)⁻¹v) with ∂u = u⁻¹w₀.
  std::pair<int, int> left_weighted(int u, int v) const;

  // s₁⋯sₙ with sᵢ the smallest divisor of sᵢ⋯sₙ.
  const Word& canonical_word(int u) const { return canonical_.at(u); }
  // The canonical word spelled with generator names; "1" for the identity.
  std::string name(int u) const;

 private:
  CoxeterMatrix matrix_;
  std::vector<int> right_, left_, length_, inverse_;
  std::vector<Word> canonical_;
  std::vector<std::vector<std::uint64_t>> divisors_;  // left divisors per element
  int longest_ = 0;

  void derive();
};

}  // namespace polycox
