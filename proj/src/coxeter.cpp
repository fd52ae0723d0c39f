#include "polycox/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "polycox/error.hpp"

namespace polycox {

void CoxeterMatrix::validate() const {
  const std::size_t n = names.size();
  if (m.size() != n) throw InputError("Coxeter matrix size does not match the generators");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("Coxeter matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw InputError("Coxeter matrix is not symmetric");
      if (i == j && m[i][j] != 1) throw InputError("Coxeter matrix diagonal must be 1");
      if (i != j && m[i][j] != kInfinity && m[i][j] < 2)
        throw InputError("off-diagonal Coxeter entries must be at least 2 or infinite (0)");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names[i] == names[j]) throw InputError("duplicate generator name '" + names[i] + "'");
}

CoxeterMatrix CoxeterMatrix::parabolic(const std::vector<int>& gens) const {
  CoxeterMatrix out;
  for (int g : gens) out.names.push_back(names.at(g));
  for (int a : gens) {
    out.m.emplace_back();
    for (int b : gens) out.m.back().push_back(m.at(a).at(b));
  }
  return out;
}

namespace {

CoxeterMatrix from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  CoxeterMatrix c;
  const std::string letters = "rstuvwxyz";
  if (n > static_cast<int>(letters.size())) throw InputError("rank too large for default names");
  for (int i = 0; i < n; ++i) c.names.push_back(std::string(1, letters[i]));
  c.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) c.m[i][i] = 1;
  for (auto [a, b, v] : edges) c.m[a][b] = c.m[b][a] = v;
  return c;
}

}  // namespace

CoxeterMatrix coxeter_matrix(const std::string& type) {
  // Linear diagrams r - s - t - ...; the marked edge is the first for B and H.
  if (type == "A1") return from_edges(1, {});
  if (type == "A1xA1") return from_edges(2, {});
  if (type == "A2") return from_edges(2, {{0, 1, 3}});
  if (type == "B2") return from_edges(2, {{0, 1, 4}});
  if (type == "G2") return from_edges(2, {{0, 1, 6}});
  if (type.rfind("I2(", 0) == 0) {
    // I2(p) or I2(p)xA1 with t commuting with r and s.
    const std::size_t close = type.find(')');
    if (close == std::string::npos) throw InputError("malformed type '" + type + "'");
    const int p = std::stoi(type.substr(3, close - 3));
    const std::string rest = type.substr(close + 1);
    if (rest.empty()) return from_edges(2, {{0, 1, p}});
    if (rest == "xA1") return from_edges(3, {{0, 1, p}});
    throw InputError("malformed type '" + type + "'");
  }
  if (type == "A1xA1xA1") return from_edges(3, {});
  if (type == "A2xA1") return from_edges(3, {{0, 1, 3}});
  if (type == "A3") return from_edges(3, {{0, 1, 3}, {1, 2, 3}});
  if (type == "B3") return from_edges(3, {{0, 1, 4}, {1, 2, 3}});
  if (type == "H3") return from_edges(3, {{0, 1, 5}, {1, 2, 3}});
  if (type == "A~2") return from_edges(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  if (type == "A4") return from_edges(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}});
  throw InputError("unknown Coxeter type '" + type + "'");
}

bool rank3_finite(int a, int b, int c) {
  if (a == kInfinity || b == kInfinity || c == kInfinity) return false;
  // 1/a + 1/b + 1/c > 1, in integers.
  return b * c + a * c + a * b > a * b * c;
}

namespace {

// Coset table with involutive generators: an s-edge c -> d is stored at both
// ends, so the relators s² hold by construction.
class ToddCoxeter {
 public:
  ToddCoxeter(const CoxeterMatrix& m, std::size_t cap) : n_(m.rank()), cap_(cap) {
    for (int s = 0; s < n_; ++s)
      for (int t = s + 1; t < n_; ++t) {
        int mst = m.m[s][t];
        if (mst == kInfinity) continue;
        Word r;
        for (int k = 0; k < mst; ++k) {
          r.push_back(s);
          r.push_back(t);
        }
        relators_.push_back(std::move(r));
      }
    new_coset();
  }

  bool run() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (const Word& r : relators_) {
        if (!alive(c)) break;
        if (!scan_and_fill(c, r)) return false;
      }
      for (int s = 0; s < n_ && alive(c); ++s)
        if (at(c, s) < 0) {
          if (!define(c, s)) return false;
        }
    }
    return true;
  }

  // Right action on live cosets, renumbered breadth-first from coset 0.
  std::vector<int> table() const {
    std::vector<int> id(parent_.size(), -1), order{0};
    id[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int s = 0; s < n_; ++s) {
        int d = at(order[i], s);
        if (id[d] < 0) {
          id[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    std::vector<int> out(order.size() * n_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int s = 0; s < n_; ++s) out[i * n_ + s] = id[at(order[i], s)];
    return out;
  }

 private:
  int& at(int c, int s) { return table_[static_cast<std::size_t>(c) * n_ + s]; }
  int at(int c, int s) const { return table_[static_cast<std::size_t>(c) * n_ + s]; }
  bool alive(int c) const { return parent_[c] == c; }
  int rep(int c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  int new_coset() {
    int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.insert(table_.end(), n_, -1);
    return c;
  }

  bool define(int c, int s) {
    if (parent_.size() >= cap_) return false;
    int d = new_coset();
    at(c, s) = d;
    at(d, s) = c;
    return true;
  }

  bool scan_and_fill(int c, const Word& r) {
    const int len = static_cast<int>(r.size());
    while (true) {
      int f = c, i = 0, b = c, j = len - 1;
      while (i <= j && at(f, r[i]) >= 0) f = at(f, r[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return true;
      }
      while (j >= i && at(b, r[j]) >= 0) b = at(b, r[j--]);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, r[i]) = b;
        at(b, r[i]) = f;
        return true;
      }
      if (!define(f, r[i])) return false;
    }
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int s = 0; s < n_; ++s) {
        int f = at(e, s);
        if (f < 0) continue;
        at(e, s) = -1;
        if (at(f, s) == e) at(f, s) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, s) >= 0) merge(f1, at(e1, s), queue);
        else if (at(f1, s) >= 0) merge(e1, at(f1, s), queue);
        else {
          at(e1, s) = f1;
          at(f1, s) = e1;
        }
      }
    }
  }

  int n_;
  std::size_t cap_;
  std::vector<Word> relators_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

std::optional<CoxeterGroup> CoxeterGroup::enumerate(const CoxeterMatrix& m,
                                                    std::size_t coset_cap) {
  m.validate();
  CoxeterGroup g;
  g.matrix_ = m;
  if (m.rank() == 0) {
    g.length_ = {0};
    g.inverse_ = {0};
    g.canonical_ = {Word{}};
    g.divisors_ = {{1}};
    return g;
  }
  ToddCoxeter tc(m, coset_cap);
  if (!tc.run()) return std::nullopt;
  g.right_ = tc.table();
  g.derive();
  return g;
}

CoxeterGroup CoxeterGroup::enumerate_or_throw(const CoxeterMatrix& m, std::size_t coset_cap) {
  auto g = enumerate(m, coset_cap);
  if (!g) throw BudgetError("Coxeter group is infinite or exceeds " + std::to_string(coset_cap) +
                            " cosets");
  return std::move(*g);
}

void CoxeterGroup::derive() {
  const int n = rank();
  const int size = static_cast<int>(right_.size()) / n;
  // Breadth-first lengths and one reduced word per element.
  length_.assign(size, -1);
  std::vector<Word> some_word(size);
  length_[0] = 0;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    for (int s = 0; s < n; ++s) {
      int v = right(u, s);
      if (length_[v] >= 0) continue;
      length_[v] = length_[u] + 1;
      some_word[v] = some_word[u];
      some_word[v].push_back(s);
      todo.push_back(v);
    }
  }
  inverse_.assign(size, 0);
  for (int u = 0; u < size; ++u) {
    int x = 0;
    for (auto it = some_word[u].rbegin(); it != some_word[u].rend(); ++it) x = right(x, *it);
    inverse_[u] = x;
  }
  left_.assign(static_cast<std::size_t>(size) * n, 0);
  for (int u = 0; u < size; ++u)
    for (int s = 0; s < n; ++s) left_[u * n + s] = inverse_[right(inverse_[u], s)];

  longest_ = static_cast<int>(std::max_element(length_.begin(), length_.end()) - length_.begin());

  canonical_.assign(size, Word{});
  for (int u = 1; u < size; ++u) {
    int x = u;
    Word w;
    while (x != 0) {
      int s = smallest_divisor(x);
      w.push_back(s);
      x = left(s, x);
    }
    canonical_[u] = std::move(w);
  }

  const std::size_t words = (static_cast<std::size_t>(size) + 63) / 64;
  divisors_.assign(size, std::vector<std::uint64_t>(words, 0));
  for (int v = 0; v < size; ++v)
    for (int u = 0; u < size; ++u)
      if (length(u) + length(mul(inverse_[u], v)) == length(v))
        divisors_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

int CoxeterGroup::mul(int u, int v) const {
  for (int s : canonical_.at(v)) u = right(u, s);
  return u;
}

int CoxeterGroup::element(const Word& letters) const {
  int u = 0;
  for (int s : letters) {
    if (s < 0 || s >= rank()) throw InputError("generator index out of range");
    u = right(u, s);
  }
  return u;
}

bool CoxeterGroup::left_divides(int u, int v) const {
  return (divisors_.at(v)[u / 64] >> (u % 64)) & 1;
}

int CoxeterGroup::smallest_divisor(int u) const {
  if (u == 0) throw PreconditionError("the identity has no smallest divisor");
  for (int s = 0; s < rank(); ++s)
    if (length(left(s, u)) < length(u)) return s;
  throw PreconditionError("element without a left descent");
}

int CoxeterGroup::complement(int u, int v) const {
  if (!left_divides(u, v))
    throw PreconditionError("'" + name(u) + "' does not divide '" + name(v) + "'");
  return mul(inverse_[u], v);
}

int CoxeterGroup::gcd(int u, int v) const {
  int best = 0;
  const auto& a = divisors_.at(u);
  const auto& b = divisors_.at(v);
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t common = a[w] & b[w];
    while (common) {
      int bit = __builtin_ctzll(common);
      common &= common - 1;
      int x = static_cast<int>(w * 64 + bit);
      if (length(x) > length(best)) best = x;
    }
  }
  return best;
}

std::optional<int> CoxeterGroup::longest_element(const std::vector<int>& gens) const {
  std::vector<char> seen(size(), 0);
  std::deque<int> todo{0};
  seen[0] = 1;
  int best = 0;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    if (length(u) > length(best)) best = u;
    for (int s : gens) {
      if (s < 0 || s >= rank()) throw InputError("generator index out of range");
      int v = right(u, s);
      if (!seen[v]) {
        seen[v] = 1;
        todo.push_back(v);
      }
    }
  }
  return best;
}

std::pair<int, int> CoxeterGroup::left_weighted(int u, int v) const {
  int d = complement(u, longest_);
  int g = gcd(d, v);
  return {mul(u, g), complement(g, v)};
}

std::string CoxeterGroup::name(int u) const {
  if (u == 0) return "1";
  std::string out;
  for (int s : canonical_.at(u)) out += matrix_.names[s];
  return out;
}

}  // namespace polycox
