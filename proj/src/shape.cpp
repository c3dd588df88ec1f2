#include "cycdes/shape.hpp"

#include <stdexcept>

namespace cycdes {

Shape::Shape(Partition outer)
    : outer_(std::move(outer)), kind_(ShapeKind::Straight) {}

Shape::Shape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)), kind_(ShapeKind::Skew) {
  if (inner_.rows() > outer_.rows()) {
    throw std::invalid_argument("Shape: inner partition exceeds outer");
  }
  for (int r = 1; r <= inner_.rows(); ++r) {
    if (inner_.part(r) > outer_.part(r)) {
      throw std::invalid_argument("Shape: inner partition exceeds outer");
    }
  }
  if (inner_.empty()) kind_ = ShapeKind::Straight;
}

Shape Shape::boxed(const Partition& lambda) {
  if (lambda.empty()) {
    throw std::invalid_argument("Shape: boxed shape needs a nonempty partition");
  }
  std::vector<int> outer;
  outer.push_back(lambda.part(1) + 1);
  for (int p : lambda.parts()) outer.push_back(p);
  Shape s(Partition(std::move(outer)), Partition({lambda.part(1)}));
  s.kind_ = ShapeKind::Boxed;
  return s;
}

bool Shape::boxed_like() const {
  if (kind_ == ShapeKind::Boxed) return true;
  if (kind_ != ShapeKind::Skew) return false;
  // One removed prefix in row 1 leaving a single disconnected cell strictly
  // north-east of the rows below.
  if (inner_.rows() != 1) return false;
  if (outer_.part(1) != inner_.part(1) + 1) return false;
  if (outer_.rows() < 2) return false;
  return outer_.part(2) <= inner_.part(1);
}

Partition Shape::box_partition() const {
  if (!boxed_like()) {
    throw std::domain_error("Shape: not a boxed shape");
  }
  std::vector<int> parts(outer_.parts().begin() + 1, outer_.parts().end());
  return Partition(std::move(parts));
}

int Shape::size() const { return outer_.size() - inner_.size(); }

bool Shape::contains(int r, int c) const {
  return r >= 1 && r <= rows() && c >= row_begin(r) && c <= row_end(r);
}

std::vector<std::pair<int, int>> Shape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= rows(); ++r) {
    for (int c = row_begin(r); c <= row_end(r); ++c) {
      out.emplace_back(r, c);
    }
  }
  return out;
}

Shape Shape::normalized() const {
  if (boxed_like()) return Shape::boxed(box_partition());
  if (kind_ == ShapeKind::Skew && inner_.empty()) return Shape(outer_);
  return *this;
}

bool Shape::operator==(const Shape& other) const {
  const Shape a = normalized();
  const Shape b = other.normalized();
  return a.kind_ == b.kind_ && a.outer_ == b.outer_ && a.inner_ == b.inner_;
}

std::string Shape::to_string() const {
  if (boxed_like()) return box_partition().to_string() + "^#";
  if (kind_ == ShapeKind::Skew && !inner_.empty()) {
    return outer_.to_string() + "/" + inner_.to_string();
  }
  return outer_.to_string();
}

Shape boxed_shape(const Partition& lambda) { return Shape::boxed(lambda); }

}  // namespace cycdes
