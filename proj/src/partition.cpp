#include "cycdes/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace cycdes {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') {
      throw std::invalid_argument("Partition: unbalanced parentheses in \"" +
                                  text + "\"");
    }
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (!body.empty()) {
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      std::string tok = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        parts.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("Partition: bad token \"" + tok +
                                    "\" in \"" + text + "\"");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition: rows are 1-based");
  return i <= rows() ? parts_[static_cast<size_t>(i) - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= (parts_.empty() ? 0 : parts_[0]); ++c) {
    int count = 0;
    for (int p : parts_) {
      if (p >= c) ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, n == 0 ? 1 : n, current, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int prefix_a = 0;
  int prefix_b = 0;
  const int rows = std::max(a.rows(), b.rows());
  for (int i = 1; i <= rows; ++i) {
    prefix_a += a.part(i);
    prefix_b += b.part(i);
    if (prefix_a < prefix_b) return false;
  }
  return true;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
  std::vector<Partition> out;
  for (int r = 1; r <= lambda.rows() + 1; ++r) {
    if (r == 1 || lambda.part(r) < lambda.part(r - 1)) {
      std::vector<int> parts = lambda.parts();
      if (r <= lambda.rows()) {
        parts[static_cast<size_t>(r) - 1] += 1;
      } else {
        parts.push_back(1);
      }
      out.push_back(Partition(std::move(parts)));
    }
  }
  return out;
}

}  // namespace cycdes
