#include "cycdes/descent_set.hpp"

#include <bit>
#include <stdexcept>

namespace cycdes {

DescentSet::DescentSet(int n) : n_(n) {
  if (n < 0 || n > 62) {
    throw std::invalid_argument("DescentSet: ambient size out of range: " +
                                std::to_string(n));
  }
}

DescentSet::DescentSet(int n, std::initializer_list<int> elems)
    : DescentSet(n) {
  for (int e : elems) insert(e);
}

DescentSet::DescentSet(int n, const std::vector<int>& elems) : DescentSet(n) {
  for (int e : elems) insert(e);
}

DescentSet::DescentSet(int n, std::uint64_t bits) : DescentSet(n) {
  if (n < 62 && (bits >> (n + 1)) != 0) {
    throw std::invalid_argument("DescentSet: mask exceeds ambient size");
  }
  if ((bits & 1) != 0) {
    throw std::invalid_argument("DescentSet: elements are 1-based");
  }
  bits_ = bits;
}

void DescentSet::check_element(int i) const {
  if (i < 1 || i > n_) {
    throw std::invalid_argument("DescentSet: element " + std::to_string(i) +
                                " outside {1.." + std::to_string(n_) + "}");
  }
}

bool DescentSet::contains(int i) const {
  return i >= 1 && i <= n_ && ((bits_ >> i) & 1) != 0;
}

bool DescentSet::full() const {
  return n_ > 0 && size() == n_;
}

int DescentSet::size() const { return std::popcount(bits_); }

std::vector<int> DescentSet::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

void DescentSet::insert(int i) {
  check_element(i);
  bits_ |= (std::uint64_t{1} << i);
}

void DescentSet::erase(int i) {
  check_element(i);
  bits_ &= ~(std::uint64_t{1} << i);
}

DescentSet DescentSet::shifted(int k) const {
  DescentSet out(n_);
  if (n_ == 0) return out;
  for (int d : elements()) {
    int shifted = (d + k) % n_;
    if (shifted <= 0) shifted += n_;  // residue 0 is n
    out.insert(shifted);
  }
  return out;
}

DescentSet DescentSet::linear_part() const {
  DescentSet out(n_);
  out.bits_ = bits_ & ~(std::uint64_t{1} << n_);
  return out;
}

std::string DescentSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace cycdes
