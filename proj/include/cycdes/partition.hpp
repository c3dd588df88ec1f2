#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cycdes {

// An integer partition: weakly decreasing positive parts. The empty
// partition (of 0) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "3,2" or "(3,2)"

  int size() const;  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based row length; 0 beyond the last row.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(3,2)"

 private:
  std::vector<int> parts_;
};

// All partitions of n in lexicographically decreasing order (a linear
// extension of dominance).
std::vector<Partition> partitions_of(int n);

// Dominance order on partitions of equal size: prefix sums of a >= those
// of b.
bool dominates(const Partition& a, const Partition& b);

// Partitions obtained from lambda by adding one box at an addable corner,
// largest row first.
std::vector<Partition> add_one_box(const Partition& lambda);

}  // namespace cycdes
