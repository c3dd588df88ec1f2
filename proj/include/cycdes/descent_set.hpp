#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cycdes {

// A subset of {1..n} together with its ambient size n. Linear descent sets
// use only [n-1]; cyclic descent sets may contain n. Values are 1-based and
// modular arithmetic identifies residue 0 with n.
class DescentSet {
 public:
  DescentSet() = default;
  explicit DescentSet(int n);
  DescentSet(int n, std::initializer_list<int> elems);
  DescentSet(int n, const std::vector<int>& elems);
  // Reconstructs from a raw bitmask (bit i <-> element i, 1 <= i <= n).
  DescentSet(int n, std::uint64_t bits);

  int n() const { return n_; }
  std::uint64_t mask() const { return bits_; }

  bool contains(int i) const;
  bool empty() const { return bits_ == 0; }
  bool full() const;
  int size() const;
  std::vector<int> elements() const;

  void insert(int i);
  void erase(int i);

  // {(k + d) mod n : d in this}, residue 0 identified with n. k may be
  // negative.
  DescentSet shifted(int k) const;
  // Intersection with [n-1].
  DescentSet linear_part() const;

  bool operator==(const DescentSet&) const = default;
  auto operator<=>(const DescentSet&) const = default;

  // "{1,3,6}"
  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;

  void check_element(int i) const;
};

}  // namespace cycdes
