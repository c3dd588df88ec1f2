#include <doctest.h>

#include <set>

#include "cycdes/tableau.hpp"
#include "support/oracles.hpp"

using namespace cycdes;
using cycdes::testing::hook_length_count;

namespace {

// The running 6-cell example: boxed (3,2), box entry 6, rows 135 / 24.
Tableau running_example() {
  return Tableau(boxed_shape(Partition({3, 2})), {{6}, {1, 3, 5}, {2, 4}});
}

Tableau straight(const std::vector<int>& lambda,
                 std::vector<std::vector<int>> rows) {
  return Tableau(Shape(Partition(lambda)), std::move(rows));
}

}  // namespace

TEST_CASE("boxed shapes put the disconnected box north-east") {
  const Shape s = boxed_shape(Partition({3, 2}));
  CHECK(s.size() == 6);
  CHECK(s.cells() == std::vector<std::pair<int, int>>{
                         {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
  const Shape tiny = boxed_shape(Partition({1}));
  CHECK(tiny.cells() == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK_THROWS_AS(boxed_shape(Partition()), std::invalid_argument);

  // equivalent offsets normalize to the canonical embedding
  const Shape shifted(Partition({5, 3, 2}), Partition({4}));
  CHECK(shifted == s);
  CHECK(shifted.box_partition() == Partition({3, 2}));
}

TEST_CASE("tableau construction validates the filling") {
  CHECK_THROWS_AS(straight({2, 1}, {{1, 2}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(straight({2, 1}, {{1, 2, 3}}), std::invalid_argument);
  CHECK(running_example().is_standard());
  CHECK_FALSE(add_mod(running_example(), 2).is_standard());
}

TEST_CASE("standard tableaux enumerate in a stable order") {
  CHECK(enumerate_syt(Shape(Partition({2, 1}))).size() == 2);
  CHECK(enumerate_syt(Shape(Partition({3, 2}))).size() == 5);
  CHECK(enumerate_syt(boxed_shape(Partition({3, 2}))).size() == 30);

  const auto listing = enumerate_syt(Shape(Partition({2, 1})));
  CHECK(listing[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(listing[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("skew shapes enumerate and fill") {
  const Shape skew(Partition({2, 2}), Partition({1}));
  CHECK(skew.size() == 3);
  const auto listing = enumerate_syt(skew);
  CHECK(listing.size() == 2);
  for (const Tableau& t : listing) {
    CHECK(t.is_standard());
  }
  CHECK(listing[0].rows() == std::vector<std::vector<int>>{{1}, {2, 3}});
  CHECK(listing[1].rows() == std::vector<std::vector<int>>{{2}, {1, 3}});
  CHECK(descent_set(listing[0]) == DescentSet(3, {1}));
}

TEST_CASE("enumeration counts match the hook length oracle") {
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      CHECK(Int(enumerate_syt(Shape(lambda)).size()) ==
            hook_length_count(lambda));
    }
  }
  // a boxed shape carries n times the straight count
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n - 1)) {
      CHECK(Int(enumerate_syt(boxed_shape(lambda)).size()) ==
            Int(n) * hook_length_count(lambda));
    }
  }
}

TEST_CASE("descent sets of standard tableaux") {
  CHECK(descent_set(straight({4}, {{1, 2, 3, 4}})) == DescentSet(4));
  CHECK(descent_set(straight({1, 1, 1}, {{1}, {2}, {3}})) ==
        DescentSet(3, {1, 2}));
  CHECK(descent_set(running_example()) == DescentSet(6, {1, 3}));
  CHECK_THROWS_AS(descent_set(add_mod(running_example(), 2)),
                  std::domain_error);
}

TEST_CASE("entrywise addition modulo n") {
  const Tableau t = running_example();
  CHECK(add_mod(t, 0) == t);
  CHECK(add_mod(t, 2).rows() ==
        std::vector<std::vector<int>>{{2}, {3, 5, 1}, {4, 6}});
  CHECK(add_mod(t, 3).rows() ==
        std::vector<std::vector<int>>{{3}, {4, 6, 2}, {5, 1}});
  for (int k = 0; k < 6; ++k) {
    CHECK(add_mod(add_mod(t, k), 6 - k) == t);
  }
}

TEST_CASE("cyclic descents of rotated tableaux") {
  const Tableau t = running_example();
  CHECK(cdes_rot(t) == DescentSet(6, {1, 3, 6}));
  CHECK(cdes_rot(add_mod(t, 2)) == DescentSet(6, {2, 3, 5}));
  CHECK(cdes_rot(add_mod(t, 3)) == DescentSet(6, {3, 4, 6}));
}

TEST_CASE("adding k rotates the cyclic descent set") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Shape> shapes;
    for (const Partition& lambda : partitions_of(n)) {
      shapes.push_back(Shape(lambda));
    }
    for (const Partition& lambda : partitions_of(n - 1)) {
      shapes.push_back(boxed_shape(lambda));
    }
    for (const Shape& shape : shapes) {
      for (const Tableau& t : enumerate_syt(shape)) {
        const DescentSet base = cdes_rot(t);
        for (int k = 0; k < n; ++k) {
          CHECK(cdes_rot(add_mod(t, k)) == base.shifted(k));
        }
      }
    }
  }
}

TEST_CASE("the linear part of cdes_rot is the descent set") {
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Tableau& t : enumerate_syt(Shape(lambda))) {
        CHECK(descent_set_rot(t) == descent_set(t));
        CHECK(cdes_rot_prime(t).linear_part() == descent_set(t));
      }
    }
  }
}

TEST_CASE("the two cyclic descent rules agree on shifted boxed tableaux") {
  const Tableau t = running_example();
  CHECK(cdes_rot_prime(t) == DescentSet(6, {1, 3, 6}));
  for (int m = 1; m <= 5; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const int n = m + 1;
      for (const Tableau& t0 : enumerate_syt(boxed_shape(lambda))) {
        if (box_entry(t0) != n) continue;
        for (int k = 0; k < n; ++k) {
          const Tableau r = add_mod(t0, k);
          CHECK(cdes_rot_prime(r) == cdes_rot(r));
        }
      }
    }
  }
  // ... but not on arbitrary rotated tableaux
  const Tableau row(Shape(Partition({2})), {{2, 1}});
  CHECK(is_rotated_standard(row));
  CHECK(cdes_rot(row) == DescentSet(2));
  CHECK(cdes_rot_prime(row) == DescentSet(2, {1}));
}

TEST_CASE("the variant rule is the cyclic descent set of the inverse reading word") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Shape> shapes;
    for (const Partition& lambda : partitions_of(n)) {
      shapes.push_back(Shape(lambda));
    }
    for (const Partition& lambda : partitions_of(n - 1)) {
      shapes.push_back(boxed_shape(lambda));
    }
    for (const Shape& shape : shapes) {
      for (const Tableau& t : enumerate_syt(shape)) {
        for (int k = 0; k < n; ++k) {
          const Tableau r = add_mod(t, k);
          CHECK(cdes_rot_prime(r) ==
                cyclic_descent_set(inverse_reading_word(r)));
        }
      }
    }
  }
}

TEST_CASE("reading words") {
  const Tableau t = running_example();
  CHECK(reading_word(t) == Permutation::parse("241356"));
  CHECK(reading_word(add_mod(t, 3)) == Permutation::parse("514623"));
  CHECK(inverse_reading_word(t) == Permutation::parse("314256"));
  CHECK(inverse_reading_word(add_mod(t, 3)) == Permutation::parse("256314"));
  const Tableau row = straight({4}, {{1, 2, 3, 4}});
  CHECK(reading_word(row) == Permutation::identity(4));
  CHECK(inverse_reading_word(row) == Permutation::identity(4));
}

TEST_CASE("box entries") {
  const Tableau t = running_example();
  CHECK(box_entry(t) == 6);
  CHECK(box_entry(add_mod(t, 3)) == 3);
  CHECK_THROWS_AS(box_entry(straight({2}, {{1, 2}})), std::domain_error);
}

TEST_CASE("rotation witnesses") {
  // straight shapes determine the witness uniquely
  for (int n = 2; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Tableau& t : enumerate_syt(Shape(lambda))) {
        for (int k = 0; k < n; ++k) {
          const auto witnesses = rotation_witnesses(add_mod(t, k));
          CHECK(witnesses == std::vector<int>{k == 0 ? n : k});
        }
      }
    }
  }
  // the disconnected box allows several
  const auto w = rotation_witnesses(add_mod(running_example(), 2));
  CHECK(w == std::vector<int>{1, 2});
  // non-rotated fillings have none
  const Tableau bad(Shape(Partition({2, 2})), {{3, 1}, {2, 4}});
  CHECK_FALSE(is_rotated_standard(bad));
  CHECK(rotation_witnesses(bad).empty());
}

TEST_CASE("filling a boxed shape from a rotation word") {
  const Tableau expected = add_mod(running_example(), 3);
  const Tableau got = from_inverse_reading_word(Permutation::parse("256314"),
                                                Partition({3, 2}));
  CHECK(got == expected);
  CHECK(got.rows() == std::vector<std::vector<int>>{{3}, {4, 6, 2}, {5, 1}});
  CHECK_THROWS_AS(from_inverse_reading_word(Permutation::parse("654321"),
                                            Partition({3, 2})),
                  std::domain_error);
  CHECK_THROWS_AS(from_inverse_reading_word(Permutation::parse("1234"),
                                            Partition({3, 2})),
                  std::invalid_argument);
}

TEST_CASE("the rotation word correspondence is a descent-preserving bijection") {
  for (int m = 1; m <= 5; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const int n = m + 1;
      for (const Tableau& t : enumerate_syt(boxed_shape(lambda))) {
        if (box_entry(t) != n) continue;
        const Permutation pi = inverse_reading_word(t);
        CHECK(from_inverse_reading_word(pi, lambda) == t);
        for (int k = 0; k < n; ++k) {
          const Permutation rotated = rotate(pi, -k);
          const Tableau image = from_inverse_reading_word(rotated, lambda);
          CHECK(image == add_mod(t, k));
          CHECK(descent_set_rot(image) == descent_set(rotated));
        }
      }
    }
  }
}

TEST_CASE("inverse reading words of straight shapes") {
  {
    const PermMultiset a = inverse_reading_words(Partition({4}));
    CHECK(a.distinct_size() == 1);
    CHECK(a.contains(Permutation::identity(4)));
  }
  {
    const PermMultiset a = inverse_reading_words(Partition({3, 2}));
    CHECK(a.distinct_size() == 5);
    CHECK(a.contains(Permutation::parse("31425")));
  }
  // descent preservation and inverse insertion
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Tableau& q : enumerate_syt(Shape(lambda))) {
        const Permutation sigma = inverse_reading_word(q);
        CHECK(descent_set(sigma) == descent_set(q));
        CHECK(rsk(sigma).recording == q);
        CHECK(rsk(reading_word(q)).insertion == q);
      }
    }
  }
}

TEST_CASE("ascii rendering indents the disconnected box") {
  CHECK(running_example().ascii() == "      6\n1 3 5\n2 4\n");
  CHECK(running_example().to_string() == "6/1,3,5/2,4");
}
