#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycdes/permutation.hpp"
#include "cycdes/shape.hpp"

namespace cycdes {

// A filling of a shape of size n by {1..n}, each letter exactly once.
// Standardness (rows and columns strictly increasing in the natural order)
// is a property, not a class invariant: intermediate tableaux of the
// straightening engine pass through non-standard states.
class Tableau {
 public:
  Tableau() = default;
  // rows[r] holds the entries of shape row r+1 left to right.
  Tableau(Shape shape, std::vector<std::vector<int>> rows);

  int n() const { return n_; }
  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(int r, int c) const;  // 1-based cell, must be in shape
  std::pair<int, int> cell_of(int value) const;
  int row_of(int value) const { return cell_of(value).first; }

  bool is_standard() const;

  // Copy with the cells of the two values exchanged.
  Tableau with_swapped(int value_a, int value_b) const;

  // Shape-normalized comparison (the disconnected-box offset is ignored).
  bool operator==(const Tableau& other) const;
  bool operator<(const Tableau& other) const;

  std::string to_string() const;  // single-line, rows joined by '/'
  // English-notation layout; skipped inner cells render as indentation, so
  // the disconnected box sits on its own indented line.
  std::string ascii() const;

 private:
  Shape shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> cell_by_value_;  // [value-1] -> (r, c)
  int n_ = 0;
};

// All standard Young tableaux of the shape, sorted lexicographically by
// row-reading word so listings are byte-stable.
std::vector<Tableau> enumerate_syt(const Shape& shape);

// {i in [n-1] : i+1 in a lower row than i}. Requires a standard tableau.
DescentSet descent_set(const Tableau& t);

// Adds k modulo n to all entries (residue 0 is n). k may be negative.
Tableau add_mod(const Tableau& t, int k);

// Cyclic descents of a rotated tableau: {i in [n] : i+1 in a lower row than
// i}, indices mod n, so i = n compares the rows of n and 1. Defined for any
// filling by the same row rule.
DescentSet cdes_rot(const Tableau& r);

// Variant rule: i is a cyclic descent when i+1 is strictly south of i, or in
// the same row strictly west of i.
DescentSet cdes_rot_prime(const Tableau& r);

// Des(R) = cdes_rot(R) restricted to [n-1].
DescentSet descent_set_rot(const Tableau& r);

// Concatenation of rows, bottom row first, each left to right.
Permutation reading_word(const Tableau& t);

// inverse(reading_word(t)).
Permutation inverse_reading_word(const Tableau& t);

// The entry of the disconnected box. Rejects shapes that are not boxed-like.
int box_entry(const Tableau& t);

// All k in {1..n} such that add_mod(t, n-k) is standard, ascending; t is a
// rotated SYT iff this is nonempty. k = n means t itself is standard. The
// witness need not be unique on disconnected shapes.
std::vector<int> rotation_witnesses(const Tableau& t);

bool is_rotated_standard(const Tableau& t);

// The tableau of shape lambda^box whose reading word is inverse(tau);
// inverse of the correspondence k+T |-> pi c^{-k}. Throws std::domain_error
// when the filling is not a rotated SYT with the box entry playing k.
Tableau from_inverse_reading_word(const Permutation& tau,
                                  const Partition& lambda);

// The inverse reading words of all standard tableaux of shape lambda: a set
// of f^lambda permutations of size |lambda| whose descent sets biject with
// those of the tableaux.
PermMultiset inverse_reading_words(const Partition& lambda);

// Row-insertion Robinson-Schensted: insertion and recording tableaux.
struct RskPair {
  Tableau insertion;
  Tableau recording;
};
RskPair rsk(const Permutation& pi);

}  // namespace cycdes
