#include "cycdes/qsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycdes {

Composition composition_of_subset(const DescentSet& d) {
  const int n = d.n();
  Composition out;
  int prev = 0;
  for (int e : d.elements()) {
    out.push_back(e - prev);
    prev = e;
  }
  out.push_back(n - prev);
  return out;
}

DescentSet subset_of_composition(const Composition& c) {
  int n = 0;
  for (int p : c) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive");
    }
    n += p;
  }
  DescentSet d(n);
  int prefix = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    prefix += c[i];
    d.insert(prefix);
  }
  return d;
}

void QSymF::add(const DescentSet& d, const Int& coeff) {
  if (d.n() != n_) {
    throw std::invalid_argument("QSymF: descent set of wrong degree");
  }
  if (d.contains(n_)) {
    throw std::invalid_argument("QSymF: index must be a subset of [n-1]");
  }
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(d.mask(), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int QSymF::coeff(const DescentSet& d) const {
  auto it = coeffs_.find(d.mask());
  return it == coeffs_.end() ? Int(0) : it->second;
}

QSymF& QSymF::operator+=(const QSymF& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = other.n_;
  if (other.n_ != n_) {
    throw std::invalid_argument("QSymF: mixed degrees");
  }
  for (const auto& [mask, c] : other.coeffs_) {
    add(DescentSet(n_, mask), c);
  }
  return *this;
}

QSymF& QSymF::operator-=(const QSymF& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && n_ == 0) n_ = other.n_;
  if (other.n_ != n_) {
    throw std::invalid_argument("QSymF: mixed degrees");
  }
  for (const auto& [mask, c] : other.coeffs_) {
    add(DescentSet(n_, mask), -c);
  }
  return *this;
}

namespace {

std::string coeff_prefix(const Int& c) {
  if (c == 1) return "";
  return c.str() + "*";
}

std::string index_list(const std::vector<int>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

}  // namespace

std::string QSymF::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(c) + "F" + index_list(DescentSet(n_, mask).elements());
  }
  return out;
}

void MExpansion::add(const Composition& alpha, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int MExpansion::coeff(const Composition& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Int(0) : it->second;
}

MExpansion& MExpansion::operator-=(const MExpansion& other) {
  if (other.n_ != n_ && !other.is_zero()) {
    throw std::invalid_argument("MExpansion: mixed degrees");
  }
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, -c);
  return *this;
}

std::string MExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(c) + "M" + index_list(alpha);
  }
  return out;
}

void SchurExpansion::add(const Partition& lambda, const Int& coeff) {
  if (lambda.size() != n_) {
    throw std::invalid_argument("SchurExpansion: partition of wrong degree");
  }
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int SchurExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Int(0) : it->second;
}

bool SchurExpansion::nonnegative() const {
  for (const auto& [lambda, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

std::string SchurExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  // Largest partition first (lexicographically decreasing), matching the
  // greedy expansion order.
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(it->second) + "s" + index_list(it->first.parts());
  }
  return out;
}

void Polynomial::add(const std::vector<int>& exponents, const Int& coeff) {
  if (static_cast<int>(exponents.size()) != vars_) {
    throw std::invalid_argument("Polynomial: exponent vector of wrong length");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) {
    throw std::invalid_argument("Polynomial: variable counts differ");
  }
  Polynomial out(a.vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

QSymF qsym_of(const PermMultiset& b) {
  QSymF out(b.n());
  for (const auto& [pi, mult] : b.entries()) {
    out.add(descent_set(pi), mult);
  }
  return out;
}

Polynomial expand_polynomial(const QSymF& q, int vars) {
  if (vars < 1) {
    throw std::invalid_argument("expand_polynomial: need at least one variable");
  }
  const int n = q.n();
  Polynomial out(vars);
  std::vector<int> exponents(static_cast<size_t>(vars), 0);
  for (const auto& [mask, coeff] : q.terms()) {
    const DescentSet d(n, mask);
    // Weakly increasing sequences i_1 <= ... <= i_n over {1..vars} with
    // strict rises exactly where d demands one.
    auto recurse = [&](auto&& self, int position, int current_var) -> void {
      if (position > n) {
        out.add(exponents, coeff);
        return;
      }
      const int lowest =
          position == 1 ? 1
                        : (d.contains(position - 1) ? current_var + 1
                                                    : current_var);
      for (int v = lowest; v <= vars; ++v) {
        exponents[static_cast<size_t>(v) - 1] += 1;
        self(self, position + 1, v);
        exponents[static_cast<size_t>(v) - 1] -= 1;
      }
    };
    recurse(recurse, 1, 1);
  }
  return out;
}

MExpansion to_monomial_basis(const QSymF& q) {
  const int n = q.n();
  MExpansion out(n);
  const std::uint64_t universe =
      n >= 2 ? ((std::uint64_t{1} << n) - 2) : 0;  // bits 1..n-1
  for (const auto& [mask, coeff] : q.terms()) {
    // Supersets of mask within [n-1]: mask | (submask of the complement).
    const std::uint64_t free = universe & ~mask;
    std::uint64_t sub = free;
    for (;;) {
      out.add(composition_of_subset(DescentSet(n, mask | sub)), coeff);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return out;
}

namespace {

Partition sorted_partition(const Composition& alpha) {
  std::vector<int> parts(alpha);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace

bool is_symmetric(const QSymF& q) {
  const MExpansion m = to_monomial_basis(q);
  std::map<Partition, Int> reference;
  for (const auto& [alpha, c] : m.terms()) {
    reference.emplace(sorted_partition(alpha), c);
  }
  for (const auto& [lambda, c] : reference) {
    // Every rearrangement of lambda must carry the same coefficient.
    std::vector<int> alpha = lambda.parts();
    std::sort(alpha.begin(), alpha.end());
    do {
      if (m.coeff(alpha) != c) return false;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
  return true;
}

QSymF schur_fundamental(const Shape& shape) {
  QSymF out(shape.size());
  for (const Tableau& t : enumerate_syt(shape)) {
    out.add(descent_set(t), 1);
  }
  return out;
}

namespace {

// Semistandard fillings of shape lambda with content alpha, counted by
// backtracking cell by cell in row-major order.
void count_ssyt(const Shape& shape,
                const std::vector<std::pair<int, int>>& cells, size_t index,
                std::vector<std::vector<int>>& rows, std::vector<int>& left,
                Int& total) {
  if (index == cells.size()) {
    total += 1;
    return;
  }
  const auto [r, c] = cells[index];
  int lo = 1;
  if (shape.contains(r, c - 1)) {
    lo = std::max(lo, rows[static_cast<size_t>(r) - 1]
                          [static_cast<size_t>(c - 1 - shape.row_begin(r))]);
  }
  if (shape.contains(r - 1, c)) {
    lo = std::max(lo, rows[static_cast<size_t>(r) - 2]
                          [static_cast<size_t>(c - shape.row_begin(r - 1))] +
                          1);
  }
  for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
    if (left[static_cast<size_t>(v) - 1] == 0) continue;
    left[static_cast<size_t>(v) - 1] -= 1;
    rows[static_cast<size_t>(r) - 1].push_back(v);
    count_ssyt(shape, cells, index + 1, rows, left, total);
    rows[static_cast<size_t>(r) - 1].pop_back();
    left[static_cast<size_t>(v) - 1] += 1;
  }
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  // Compositions of n correspond to subsets of [n-1].
  const std::uint64_t limit = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 0;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Composition alpha;
    int run = 1;
    for (int i = 1; i < n; ++i) {
      if ((bits >> (i - 1)) & 1) {
        alpha.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    alpha.push_back(run);
    out.push_back(std::move(alpha));
  }
  return out;
}

}  // namespace

Int kostka_number(const Partition& lambda, const Composition& content) {
  int sum = 0;
  for (int part : content) {
    if (part < 0) {
      throw std::invalid_argument("kostka_number: negative content part");
    }
    sum += part;
  }
  if (sum != lambda.size()) return 0;
  const Shape shape{lambda};
  const auto cells = shape.cells();
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.rows()));
  std::vector<int> left(content);
  Int total = 0;
  count_ssyt(shape, cells, 0, rows, left, total);
  return total;
}

MExpansion schur_monomial(const Partition& lambda) {
  const int n = lambda.size();
  MExpansion out(n);
  for (const Composition& alpha : compositions_of(n)) {
    const Int k = kostka_number(lambda, alpha);
    if (k != 0) out.add(alpha, k);
  }
  return out;
}

SchurExpansion schur_expand(const QSymF& q) {
  if (!is_symmetric(q)) {
    throw NotSymmetricError("schur_expand: function is not symmetric");
  }
  const int n = q.n();
  SchurExpansion out(n);
  MExpansion remainder = to_monomial_basis(q);
  const size_t bound = partitions_of(n).size() + 1;
  for (size_t iter = 0; !remainder.is_zero(); ++iter) {
    if (iter > bound) {
      throw std::logic_error("schur_expand: nonzero remainder persists");
    }
    // Maximal partition appearing, in the lexicographic extension of
    // dominance; its coefficient survives untouched in every later step.
    Partition best;
    bool have = false;
    for (const auto& [alpha, c] : remainder.terms()) {
      Partition p = sorted_partition(alpha);
      if (!have || best < p) {
        best = p;
        have = true;
      }
    }
    const Int c = remainder.coeff(best.parts());
    if (c == 0) {
      throw std::logic_error(
          "schur_expand: symmetric function lost a leading coefficient");
    }
    out.add(best, c);
    MExpansion subtract = schur_monomial(best);
    for (const auto& [alpha, k] : subtract.terms()) {
      remainder.add(alpha, -c * k);
    }
  }
  return out;
}

bool is_schur_positive(const QSymF& q) {
  if (!is_symmetric(q)) return false;
  return schur_expand(q).nonnegative();
}

SchurExpansion pieri_s1(const SchurExpansion& e) {
  SchurExpansion out(e.n() + 1);
  for (const auto& [lambda, c] : e.terms()) {
    for (const Partition& mu : add_one_box(lambda)) {
      out.add(mu, c);
    }
  }
  return out;
}

QSymF to_fundamental(const SchurExpansion& e) {
  QSymF out(e.n());
  for (const auto& [lambda, c] : e.terms()) {
    QSymF base = schur_fundamental(Shape(lambda));
    for (const auto& [mask, b] : base.terms()) {
      out.add(DescentSet(e.n(), mask), c * b);
    }
  }
  return out;
}

}  // namespace cycdes
