#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cycdes/partition.hpp"

namespace cycdes {

enum class ShapeKind { Straight, Skew, Boxed };

// A straight partition shape, a skew shape outer/inner, or a boxed shape
// lambda-plus-disconnected-box. English notation: row 1 on top, row indices
// grow downward, columns 1-based from the left.
//
// The boxed shape of lambda (a partition of n-1) is realized canonically as
// the skew shape (lambda_1 + 1, lambda_1, lambda_2, ...) / (lambda_1): the
// disconnected box is the single cell (1, lambda_1 + 1) and lambda occupies
// rows 2..rows+1. Any other offset of the disconnected box is normalized to
// this one for comparisons.
class Shape {
 public:
  Shape() = default;
  explicit Shape(Partition outer);          // straight
  Shape(Partition outer, Partition inner);  // skew; validates inner in outer

  // lambda^box; rejects the empty partition.
  static Shape boxed(const Partition& lambda);

  ShapeKind kind() const { return kind_; }
  // True for shapes equivalent to some lambda^box, whatever the declared
  // kind or box offset.
  bool boxed_like() const;

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  // For boxed-like shapes: the underlying lambda.
  Partition box_partition() const;

  int size() const;  // number of cells
  int rows() const { return outer_.rows(); }
  // Columns of row r (1-based) span row_begin(r)..row_end(r).
  int row_begin(int r) const { return inner_.part(r) + 1; }
  int row_end(int r) const { return outer_.part(r); }
  int row_length(int r) const { return row_end(r) - row_begin(r) + 1; }
  bool contains(int r, int c) const;

  // Row-major list of cells.
  std::vector<std::pair<int, int>> cells() const;

  // Canonical representative: empty inner collapses to straight, and a
  // disconnected box is moved to column lambda_1 + 1.
  Shape normalized() const;

  bool operator==(const Shape& other) const;

  std::string to_string() const;  // "(3,2)", "(4,3,2)/(3)", "(3,2)^#"

 private:
  Partition outer_;
  Partition inner_;
  ShapeKind kind_ = ShapeKind::Straight;
};

// lambda^box as a free function, matching the operation vocabulary.
Shape boxed_shape(const Partition& lambda);

}  // namespace cycdes
