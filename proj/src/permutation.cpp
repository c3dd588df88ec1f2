#include "cycdes/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycdes {

namespace {

int positive_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("Permutation: word is not a bijection on {1.." +
                                  std::to_string(n) + "}");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative size");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("Permutation: empty input");
  }
  std::vector<int> word;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        throw std::invalid_argument(
            std::string("Permutation: bad character '") + ch + "' in \"" +
            text + "\"");
      }
      word.push_back(ch - '0');
    }
    try {
      return Permutation(std::move(word));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Permutation: \"" + text +
                                  "\" is not a one-line word on {1..n}");
    }
  } else {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string tok = text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        word.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("Permutation: bad token \"" + tok +
                                    "\" in \"" + text + "\"");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::embedded(int m) const {
  if (m < n()) {
    throw std::invalid_argument("Permutation: cannot embed into smaller size");
  }
  std::vector<int> word = word_;
  for (int v = n() + 1; v <= m; ++v) word.push_back(v);
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  std::string out;
  if (n() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

Permutation inverse(const Permutation& pi) {
  const int n = pi.n();
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    word[static_cast<size_t>(pi(i)) - 1] = i;
  }
  return Permutation(std::move(word));
}

Permutation rotate(const Permutation& pi, int k) {
  const int n = pi.n();
  if (n == 0) return pi;
  const int shift = positive_mod(k, n);
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int j = (i - 1 + shift) % n + 1;  // i + k mod n with positions in {1..n}
    word[static_cast<size_t>(i) - 1] = pi(j);
  }
  return Permutation(std::move(word));
}

DescentSet descent_set(const Permutation& pi) {
  DescentSet d(pi.n());
  for (int i = 1; i < pi.n(); ++i) {
    if (pi(i) > pi(i + 1)) d.insert(i);
  }
  return d;
}

DescentSet cyclic_descent_set(const Permutation& pi) {
  const int n = pi.n();
  if (n < 2) {
    throw std::domain_error(
        "cyclic_descent_set: undefined on a single letter");
  }
  DescentSet d = descent_set(pi);
  if (pi(n) > pi(1)) d.insert(n);
  return d;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

void PermMultiset::add(const Permutation& pi, const Int& mult) {
  if (mult <= 0) {
    throw std::invalid_argument("PermMultiset: multiplicity must be positive");
  }
  if (entries_.empty() && n_ == 0) {
    n_ = pi.n();
  }
  if (pi.n() != n_) {
    throw std::invalid_argument("PermMultiset: member of size " +
                                std::to_string(pi.n()) + " in a multiset of size " +
                                std::to_string(n_));
  }
  entries_[pi] += mult;
}

Int PermMultiset::total_size() const {
  Int total = 0;
  for (const auto& [pi, m] : entries_) total += m;
  return total;
}

bool PermMultiset::contains(const Permutation& pi) const {
  return entries_.count(pi) != 0;
}

Int PermMultiset::multiplicity(const Permutation& pi) const {
  auto it = entries_.find(pi);
  return it == entries_.end() ? Int(0) : it->second;
}

PermMultiset horizontal_closure(const PermMultiset& a) {
  const int n = a.n() + 1;
  PermMultiset out(n);
  for (const auto& [pi, mult] : a.entries()) {
    const Permutation embedded = pi.embedded(n);
    for (int k = 0; k < n; ++k) {
      out.add(rotate(embedded, -k), mult);
    }
  }
  return out;
}

PermMultiset left_closure(const PermMultiset& a) {
  const int n = a.n() + 1;
  PermMultiset out(n);
  for (const auto& [pi, mult] : a.entries()) {
    const Permutation embedded = pi.embedded(n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> word(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i) {
        word[static_cast<size_t>(i) - 1] = (embedded(i) + j - 1) % n + 1;
      }
      out.add(Permutation(std::move(word)), mult);
    }
  }
  return out;
}

PermMultiset descent_class(int n, const DescentSet& j, bool inverted) {
  if (j.n() != n) {
    throw std::invalid_argument("descent_class: descent set has wrong ambient size");
  }
  if (j.contains(n)) {
    throw std::invalid_argument("descent_class: J must be a subset of [n-1]");
  }
  PermMultiset out(n);
  for (const Permutation& pi : all_permutations(n)) {
    if (descent_set(pi) == j) {
      out.add(inverted ? inverse(pi) : pi);
    }
  }
  return out;
}

DescentSet rotated_descent_set(const DescentSet& d, int k) {
  const int n = d.n() + 1;
  if (d.contains(d.n())) {
    throw std::invalid_argument(
        "rotated_descent_set: D must be a subset of [n-2]");
  }
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("rotated_descent_set: k outside [1, n-1]");
  }
  DescentSet out(n);
  for (int e : d.elements()) {
    int shifted = (e + k) % n;
    if (shifted == 0) shifted = n;
    if (shifted != n) out.insert(shifted);
  }
  out.insert(k);
  return out;
}

}  // namespace cycdes
