#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cycdes/descent_set.hpp"
#include "cycdes/numeric.hpp"

namespace cycdes {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based throughout.
class Permutation {
 public:
  Permutation() = default;
  // Validates that word is a bijection on {1..|word|}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  // Parses either a digit string ("314256", n <= 9) or a comma-separated
  // list ("3,1,4,2,5,6").
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(word_.size()); }
  // pi(i), 1-based.
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& word() const { return word_; }

  // The same permutation viewed in S_m (m >= n) fixing n+1..m.
  Permutation embedded(int m) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  // Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

 private:
  std::vector<int> word_;
};

Permutation inverse(const Permutation& pi);

// pi * c^k where c = (1,2,...,n), i.e. (pi c^k)(i) = pi(i+k mod n). k may be
// negative; it is reduced mod n.
Permutation rotate(const Permutation& pi, int k);

// {i in [n-1] : pi(i) > pi(i+1)}.
DescentSet descent_set(const Permutation& pi);

// Des(pi), plus n when pi(n) > pi(1). Requires n >= 2.
DescentSet cyclic_descent_set(const Permutation& pi);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// A multiset of permutations of a common size. Multiplicities are positive.
class PermMultiset {
 public:
  PermMultiset() = default;
  explicit PermMultiset(int n) : n_(n) {}

  int n() const { return n_; }
  void add(const Permutation& pi, const Int& mult = 1);

  bool empty() const { return entries_.empty(); }
  // Number of distinct members.
  int distinct_size() const { return static_cast<int>(entries_.size()); }
  // Total size counted with multiplicity.
  Int total_size() const;
  bool contains(const Permutation& pi) const;
  Int multiplicity(const Permutation& pi) const;

  const std::map<Permutation, Int>& entries() const { return entries_; }

  bool operator==(const PermMultiset&) const = default;

 private:
  int n_ = 0;
  std::map<Permutation, Int> entries_;
};

// A C_n where n = a.n() + 1: embed each member of A into S_n by appending n
// as last letter, then take all horizontal rotations. Multiplicities are
// inherited; for a set input every output element appears once.
PermMultiset horizontal_closure(const PermMultiset& a);

// C_n A, left multiplication by the cyclic group (adds constants to values).
PermMultiset left_closure(const PermMultiset& a);

// D_{n,J} = {pi : Des(pi) = J}, or its elementwise inverse when inverted.
// Materialized by filtered exhaustive generation.
PermMultiset descent_class(int n, const DescentSet& j, bool inverted = false);

// Des(sigma c^{-k}) computed from Des(sigma) alone, for sigma in S_{n-1}
// embedded in S_n fixing n: ((k + D) mod n) \ {n} union {k}. Requires
// D subset of [n-2] and 1 <= k <= n-1; the k = 0 case is the caller's.
DescentSet rotated_descent_set(const DescentSet& d, int k);

}  // namespace cycdes
