#include "cycdes/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycdes {

namespace {

int wrap(int value, int n) {
  int r = value % n;
  return r <= 0 ? r + n : r;
}

}  // namespace

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  n_ = shape_.size();
  if (static_cast<int>(rows_.size()) != shape_.rows()) {
    throw std::invalid_argument("Tableau: row count does not match shape");
  }
  cell_by_value_.assign(static_cast<size_t>(n_), {0, 0});
  std::vector<bool> seen(static_cast<size_t>(n_) + 1, false);
  for (int r = 1; r <= shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<size_t>(r) - 1];
    if (static_cast<int>(row.size()) != shape_.row_length(r)) {
      throw std::invalid_argument("Tableau: row " + std::to_string(r) +
                                  " has wrong length");
    }
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      const int v = row[static_cast<size_t>(j)];
      if (v < 1 || v > n_ || seen[static_cast<size_t>(v)]) {
        throw std::invalid_argument("Tableau: entries must biject onto {1.." +
                                    std::to_string(n_) + "}");
      }
      seen[static_cast<size_t>(v)] = true;
      cell_by_value_[static_cast<size_t>(v) - 1] = {r, shape_.row_begin(r) + j};
    }
  }
}

int Tableau::at(int r, int c) const {
  if (!shape_.contains(r, c)) {
    throw std::invalid_argument("Tableau: cell outside shape");
  }
  return rows_[static_cast<size_t>(r) - 1]
              [static_cast<size_t>(c - shape_.row_begin(r))];
}

std::pair<int, int> Tableau::cell_of(int value) const {
  if (value < 1 || value > n_) {
    throw std::invalid_argument("Tableau: value outside {1..n}");
  }
  return cell_by_value_[static_cast<size_t>(value) - 1];
}

bool Tableau::is_standard() const {
  for (int r = 1; r <= shape_.rows(); ++r) {
    for (int c = shape_.row_begin(r); c <= shape_.row_end(r); ++c) {
      const int v = at(r, c);
      if (shape_.contains(r, c + 1) && at(r, c + 1) < v) return false;
      if (shape_.contains(r + 1, c) && at(r + 1, c) < v) return false;
    }
  }
  return true;
}

Tableau Tableau::with_swapped(int value_a, int value_b) const {
  Tableau out = *this;
  const auto [ra, ca] = cell_of(value_a);
  const auto [rb, cb] = cell_of(value_b);
  out.rows_[static_cast<size_t>(ra) - 1]
           [static_cast<size_t>(ca - shape_.row_begin(ra))] = value_b;
  out.rows_[static_cast<size_t>(rb) - 1]
           [static_cast<size_t>(cb - shape_.row_begin(rb))] = value_a;
  out.cell_by_value_[static_cast<size_t>(value_a) - 1] = {rb, cb};
  out.cell_by_value_[static_cast<size_t>(value_b) - 1] = {ra, ca};
  return out;
}

bool Tableau::operator==(const Tableau& other) const {
  return shape_ == other.shape_ && rows_ == other.rows_;
}

bool Tableau::operator<(const Tableau& other) const {
  const Shape a = shape_.normalized();
  const Shape b = other.shape_.normalized();
  if (a.outer() != b.outer()) return a.outer() < b.outer();
  if (a.inner() != b.inner()) return a.inner() < b.inner();
  return rows_ < other.rows_;
}

std::string Tableau::to_string() const {
  std::string out;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "/";
    for (size_t j = 0; j < rows_[r].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(rows_[r][j]);
    }
  }
  return out;
}

std::string Tableau::ascii() const {
  int width = 1;
  for (int v = n_; v >= 10; v /= 10) ++width;
  std::string out;
  for (int r = 1; r <= shape_.rows(); ++r) {
    std::string line;
    for (int c = 1; c <= shape_.row_end(r); ++c) {
      std::string cell;
      if (c >= shape_.row_begin(r)) {
        cell = std::to_string(at(r, c));
      }
      while (static_cast<int>(cell.size()) < width) cell.insert(0, " ");
      if (c > 1) line += " ";
      line += cell;
    }
    out += line;
    out += "\n";
  }
  return out;
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
  const int n = shape.size();
  const auto cells = shape.cells();
  std::vector<int> filling(cells.size(), 0);  // parallel to cells
  std::vector<Tableau> out;

  auto cell_index = [&](int r, int c) -> int {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].first == r && cells[i].second == c) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };

  auto addable = [&](size_t i) {
    const auto [r, c] = cells[i];
    if (filling[i] != 0) return false;
    const int left = cell_index(r, c - 1);
    if (left >= 0 && filling[static_cast<size_t>(left)] == 0) return false;
    const int above = cell_index(r - 1, c);
    if (above >= 0 && filling[static_cast<size_t>(above)] == 0) return false;
    return true;
  };

  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
  auto emit = [&] {
    for (size_t i = 0; i < cells.size(); ++i) {
      rows[static_cast<size_t>(cells[i].first) - 1].push_back(filling[i]);
    }
    out.push_back(Tableau(shape, rows));
    for (auto& row : rows) row.clear();
  };

  auto place = [&](auto&& self, int value) -> void {
    if (value > n) {
      emit();
      return;
    }
    for (size_t i = 0; i < cells.size(); ++i) {
      if (addable(i)) {
        filling[i] = value;
        self(self, value + 1);
        filling[i] = 0;
      }
    }
  };
  place(place, 1);

  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.rows() < b.rows();
  });
  return out;
}

DescentSet descent_set(const Tableau& t) {
  if (!t.is_standard()) {
    throw std::domain_error("descent_set: tableau is not standard");
  }
  DescentSet d(t.n());
  for (int i = 1; i < t.n(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) d.insert(i);
  }
  return d;
}

Tableau add_mod(const Tableau& t, int k) {
  const int n = t.n();
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows) {
    for (int& v : row) v = wrap(v + k, n);
  }
  return Tableau(t.shape(), std::move(rows));
}

DescentSet cdes_rot(const Tableau& r) {
  const int n = r.n();
  DescentSet d(n);
  for (int i = 1; i <= n; ++i) {
    const int next = wrap(i + 1, n);
    if (r.row_of(next) > r.row_of(i)) d.insert(i);
  }
  return d;
}

DescentSet cdes_rot_prime(const Tableau& r) {
  const int n = r.n();
  DescentSet d(n);
  for (int i = 1; i <= n; ++i) {
    const int next = wrap(i + 1, n);
    const auto [ri, ci] = r.cell_of(i);
    const auto [rj, cj] = r.cell_of(next);
    if (rj > ri || (rj == ri && cj < ci)) d.insert(i);
  }
  return d;
}

DescentSet descent_set_rot(const Tableau& r) {
  return cdes_rot(r).linear_part();
}

Permutation reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(static_cast<size_t>(t.n()));
  for (int r = t.shape().rows(); r >= 1; --r) {
    const auto& row = t.rows()[static_cast<size_t>(r) - 1];
    word.insert(word.end(), row.begin(), row.end());
  }
  return Permutation(std::move(word));
}

Permutation inverse_reading_word(const Tableau& t) {
  return inverse(reading_word(t));
}

int box_entry(const Tableau& t) {
  if (!t.shape().boxed_like()) {
    throw std::domain_error("box_entry: shape has no disconnected box");
  }
  return t.at(1, t.shape().row_end(1));
}

std::vector<int> rotation_witnesses(const Tableau& t) {
  const int n = t.n();
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) {
    if (add_mod(t, n - k).is_standard()) out.push_back(k);
  }
  return out;
}

bool is_rotated_standard(const Tableau& t) {
  const int n = t.n();
  for (int k = 1; k <= n; ++k) {
    if (add_mod(t, n - k).is_standard()) return true;
  }
  return false;
}

Tableau from_inverse_reading_word(const Permutation& tau,
                                  const Partition& lambda) {
  if (tau.n() != lambda.size() + 1) {
    throw std::invalid_argument(
        "from_inverse_reading_word: size mismatch between tau and lambda");
  }
  const Shape shape = boxed_shape(lambda);
  const std::vector<int> word = inverse(tau).word();
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
  size_t pos = 0;
  for (int r = shape.rows(); r >= 1; --r) {
    const int len = shape.row_length(r);
    auto& row = rows[static_cast<size_t>(r) - 1];
    row.assign(word.begin() + static_cast<long>(pos),
               word.begin() + static_cast<long>(pos) + len);
    pos += static_cast<size_t>(len);
  }
  Tableau t(shape, std::move(rows));
  const int k = box_entry(t) % t.n();
  if (!add_mod(t, -k).is_standard()) {
    throw std::domain_error(
        "from_inverse_reading_word: permutation is not a horizontal rotation "
        "of an inverse reading word of shape " +
        lambda.to_string());
  }
  return t;
}

PermMultiset inverse_reading_words(const Partition& lambda) {
  PermMultiset out(lambda.size());
  for (const Tableau& q : enumerate_syt(Shape(lambda))) {
    out.add(inverse_reading_word(q));
  }
  return out;
}

RskPair rsk(const Permutation& pi) {
  std::vector<std::vector<int>> p_rows;
  std::vector<std::vector<int>> q_rows;
  for (int i = 1; i <= pi.n(); ++i) {
    int value = pi(i);
    size_t r = 0;
    for (;; ++r) {
      if (r == p_rows.size()) {
        p_rows.push_back({value});
        q_rows.push_back({i});
        break;
      }
      auto& row = p_rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), value);
      if (it == row.end()) {
        row.push_back(value);
        q_rows[r].push_back(i);
        break;
      }
      std::swap(*it, value);  // bump
    }
  }
  std::vector<int> parts;
  for (const auto& row : p_rows) parts.push_back(static_cast<int>(row.size()));
  const Shape shape{Partition(parts)};
  return RskPair{Tableau(shape, std::move(p_rows)),
                 Tableau(shape, std::move(q_rows))};
}

}  // namespace cycdes
