#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdes/numeric.hpp"
#include "cycdes/permutation.hpp"
#include "cycdes/shape.hpp"
#include "cycdes/tableau.hpp"

namespace cycdes {

// A composition of n: positive parts in order.
using Composition = std::vector<int>;

Composition composition_of_subset(const DescentSet& d);  // D subset [n-1]
DescentSet subset_of_composition(const Composition& c);

struct NotSymmetricError : std::domain_error {
  using std::domain_error::domain_error;
};

// A homogeneous degree-n quasisymmetric function in the fundamental basis:
// integer coefficients indexed by subsets D of [n-1] (stored as bitmasks).
class QSymF {
 public:
  QSymF() = default;
  explicit QSymF(int n) : n_(n) {}

  int n() const { return n_; }
  void add(const DescentSet& d, const Int& coeff);
  Int coeff(const DescentSet& d) const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::uint64_t, Int>& terms() const { return coeffs_; }

  QSymF& operator+=(const QSymF& other);
  QSymF& operator-=(const QSymF& other);
  bool operator==(const QSymF&) const = default;

  std::string to_string() const;  // "F[] + 2*F[1,3]"

 private:
  int n_ = 0;
  std::map<std::uint64_t, Int> coeffs_;  // nonzero only
};

// Expansion in the monomial quasisymmetric basis M_alpha.
class MExpansion {
 public:
  MExpansion() = default;
  explicit MExpansion(int n) : n_(n) {}

  int n() const { return n_; }
  void add(const Composition& alpha, const Int& coeff);
  Int coeff(const Composition& alpha) const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Composition, Int>& terms() const { return coeffs_; }

  MExpansion& operator-=(const MExpansion& other);
  bool operator==(const MExpansion&) const = default;

  std::string to_string() const;  // "M[2,1] + M[1,2]"

 private:
  int n_ = 0;
  std::map<Composition, Int> coeffs_;
};

// Integer combination of Schur functions of degree n.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  explicit SchurExpansion(int n) : n_(n) {}

  int n() const { return n_; }
  void add(const Partition& lambda, const Int& coeff);
  Int coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Partition, Int>& terms() const { return coeffs_; }
  bool nonnegative() const;

  bool operator==(const SchurExpansion&) const = default;

  std::string to_string() const;  // "s[4] + 2*s[3,1]"

 private:
  int n_ = 0;
  std::map<Partition, Int> coeffs_;
};

// Dense exponent table of a polynomial in a fixed number of variables; the
// brute-force oracle realizing the defining monomial sums.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  int vars() const { return vars_; }
  void add(const std::vector<int>& exponents, const Int& coeff);
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool operator==(const Polynomial&) const = default;

 private:
  int vars_ = 0;
  std::map<std::vector<int>, Int> terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Q(B) = sum of F_{n,Des(pi)} over B, counted with multiplicity.
QSymF qsym_of(const PermMultiset& b);

// Expands into vars variables by enumerating the defining index sequences.
// Faithful for equality of degree-n functions once vars >= n; vars >= 1.
Polynomial expand_polynomial(const QSymF& q, int vars);

// F_{n,D} = sum over supersets E of D within [n-1] of M_{comp(E)}.
MExpansion to_monomial_basis(const QSymF& q);

// True iff all compositions rearranging to one partition share a
// coefficient in the M expansion.
bool is_symmetric(const QSymF& q);

// Sum of F_{n,Des(T)} over the standard tableaux of the shape (straight,
// skew, or boxed): the fundamental expansion of the corresponding Schur
// function.
QSymF schur_fundamental(const Shape& shape);

// Monomial expansion of s_lambda: coefficient of M_alpha is the Kostka
// number K_{lambda,alpha}, counted by exhaustive semistandard enumeration.
MExpansion schur_monomial(const Partition& lambda);

// Kostka number by direct count of SSYT of the given shape and content.
Int kostka_number(const Partition& lambda, const Composition& content);

// Unique integer Schur expansion of a symmetric q, by greedy
// back-substitution along a linear extension of dominance (lexicographic
// tie-break). Throws NotSymmetricError when q is not symmetric and
// std::logic_error on a nonzero remainder (internal inconsistency).
SchurExpansion schur_expand(const QSymF& q);

// Symmetric with all Schur coefficients >= 0. Non-symmetric input returns
// false.
bool is_schur_positive(const QSymF& q);

// Pieri multiplication by s_1: linear extension of adding one box at each
// addable corner; degree n-1 in, degree n out.
SchurExpansion pieri_s1(const SchurExpansion& e);

// The F-expansion of an integer Schur combination (linear extension of
// schur_fundamental); schur_expand is its left inverse.
QSymF to_fundamental(const SchurExpansion& e);

}  // namespace cycdes
