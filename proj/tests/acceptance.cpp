// Acceptance suite: every release-gating property, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cycdes/qsym.hpp"
#include "cycdes/straighten.hpp"
#include "support/oracles.hpp"

using namespace cycdes;
using cycdes::testing::hook_length_count;
using cycdes::testing::random_qsym;

namespace {

PermMultiset cyclic_group(int n) {
  PermMultiset out(n);
  for (int k = 0; k < n; ++k) out.add(rotate(Permutation::identity(n), k));
  return out;
}

SchurExpansion single_schur(const Partition& lambda, int coeff = 1) {
  SchurExpansion e(lambda.size());
  e.add(lambda, coeff);
  return e;
}

Tableau running_example() {
  return Tableau(boxed_shape(Partition({3, 2})), {{6}, {1, 3, 5}, {2, 4}});
}

Tableau boxed32(std::vector<std::vector<int>> rows) {
  return Tableau(boxed_shape(Partition({3, 2})), std::move(rows));
}

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> run;
};

bool closure_expands_by_one_box(int nmax, std::string& detail) {
  for (int n = 2; n <= nmax; ++n) {
    for (const Partition& lambda : partitions_of(n - 1)) {
      const SchurExpansion got =
          schur_expand(qsym_of(horizontal_closure(inverse_reading_words(lambda))));
      const SchurExpansion expected = pieri_s1(single_schur(lambda));
      if (got != expected) {
        detail = "lambda=" + lambda.to_string() + ": got " + got.to_string();
        return false;
      }
    }
  }
  return true;
}

bool rotated_inverse_descent_classes_positive(int nmax, std::string& detail) {
  for (int n = 3; n <= nmax; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 2)); ++bits) {
      DescentSet j(n - 1);
      for (int i = 1; i <= n - 2; ++i) {
        if ((bits >> (i - 1)) & 1) j.insert(i);
      }
      const PermMultiset d = descent_class(n - 1, j, /*inverted=*/true);
      const QSymF closed = qsym_of(horizontal_closure(d));
      if (!is_schur_positive(closed)) {
        detail = "n=" + std::to_string(n) + ", J=" + j.to_string() +
                 " is not Schur-positive";
        return false;
      }
      if (schur_expand(closed) != pieri_s1(schur_expand(qsym_of(d)))) {
        detail = "n=" + std::to_string(n) + ", J=" + j.to_string() +
                 " does not factor as Q(D^{-1}) s_1";
        return false;
      }
    }
  }
  return true;
}

bool small_closure_counterexample(std::string& detail) {
  PermMultiset a(3);
  a.add(Permutation::parse("132"));
  const SchurExpansion got = schur_expand(qsym_of(horizontal_closure(a)));
  if (got != single_schur(Partition({2, 2}), 2)) {
    detail = "Q({132} C_4) = " + got.to_string();
    return false;
  }
  if (is_symmetric(qsym_of(a))) {
    detail = "Q({132}) unexpectedly symmetric";
    return false;
  }
  return true;
}

bool vertical_rotation_counterexample(std::string& detail) {
  PermMultiset a(4);
  a.add(Permutation::parse("3142"));
  a.add(Permutation::parse("1423"));
  if (!is_schur_positive(qsym_of(a))) {
    detail = "Q(A) not Schur-positive";
    return false;
  }
  if (!is_schur_positive(qsym_of(horizontal_closure(a)))) {
    detail = "Q(A C_5) not Schur-positive";
    return false;
  }
  if (is_symmetric(qsym_of(left_closure(a)))) {
    detail = "Q(C_5 A) unexpectedly symmetric";
    return false;
  }
  return true;
}

bool cyclic_group_expansion(std::string& detail) {
  for (int n = 2; n <= 8; ++n) {
    SchurExpansion expected(n);
    expected.add(Partition({n}), 1);
    expected.add(Partition({n - 1, 1}), 1);
    const SchurExpansion got = schur_expand(qsym_of(cyclic_group(n)));
    if (got != expected) {
      detail = "n=" + std::to_string(n) + ": " + got.to_string();
      return false;
    }
  }
  return true;
}

// Shared sweep for the straightening criteria; each closure inspects one
// aspect of the same exhaustive run.
bool straightening_sweep(int mmax, bool check_traces,
                         const std::function<bool(const Tableau& rotated,
                                                  const JdtResult& result,
                                                  std::string&)>& inspect,
                         std::string& detail) {
  for (int m = 1; m <= mmax; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const int n = m + 1;
      for (const Tableau& t : enumerate_syt(boxed_shape(lambda))) {
        if (box_entry(t) != n) continue;
        for (int k = 0; k < n; ++k) {
          const Tableau rotated = add_mod(t, k);
          JdtResult result;
          try {
            result = jdt(rotated, check_traces);
          } catch (const std::exception& e) {
            detail = "jdt failed on " + rotated.to_string() + ": " + e.what();
            return false;
          }
          if (!inspect(rotated, result, detail)) return false;
        }
      }
    }
  }
  return true;
}

bool straightening_bijective(std::string& detail) {
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const int n = m + 1;
      const auto all = enumerate_syt(boxed_shape(lambda));
      std::map<int, std::set<Tableau>> fibers;
      std::vector<Tableau> top;
      for (const Tableau& t : all) {
        fibers[box_entry(t) % n].insert(t);
        if (box_entry(t) == n) top.push_back(t);
      }
      for (int k = 0; k < n; ++k) {
        std::set<Tableau> image;
        for (const Tableau& t : top) {
          const Tableau rotated = add_mod(t, k);
          const Tableau p = jdt(rotated).tableau;
          image.insert(p);
          if (jdt_inverse(p) != rotated) {
            detail = "jdt_inverse(jdt(" + rotated.to_string() + ")) differs";
            return false;
          }
        }
        if (image.size() != top.size() || image != fibers[k]) {
          detail = "lambda=" + lambda.to_string() + ", k=" + std::to_string(k) +
                   ": image is not the box-entry fiber";
          return false;
        }
      }
    }
  }
  return true;
}

bool straightening_preserves_descents(std::string& detail) {
  return straightening_sweep(
      6, false,
      [](const Tableau& rotated, const JdtResult& result, std::string& d) {
        if (descent_set(result.tableau) != descent_set_rot(rotated)) {
          d = "Des changed on " + rotated.to_string();
          return false;
        }
        return true;
      },
      detail);
}

bool straightening_traces_clean(std::string& detail) {
  return straightening_sweep(
      6, true,
      [](const Tableau&, const JdtResult&, std::string&) { return true; },
      detail);
}

bool worked_examples(std::string& detail) {
  const Tableau t = running_example();
  auto expect = [&detail](bool ok, const std::string& what) {
    if (!ok && detail.empty()) detail = what;
    return ok;
  };

  bool pass = true;
  pass &= expect(cdes_rot(t) == DescentSet(6, {1, 3, 6}), "cdes_rot(T)");
  pass &= expect(cdes_rot(add_mod(t, 2)) == DescentSet(6, {2, 3, 5}),
                 "cdes_rot(2+T)");
  pass &= expect(cdes_rot(add_mod(t, 3)) == DescentSet(6, {3, 4, 6}),
                 "cdes_rot(3+T)");
  pass &= expect(add_mod(t, 2) == boxed32({{2}, {3, 5, 1}, {4, 6}}),
                 "display of 2+T");

  // the three forward steps
  const Tableau s0 = add_mod(t, 3);
  const Tableau s1 = straighten_step(s0);
  const Tableau s2 = straighten_step(s1);
  const Tableau s3 = straighten_step(s2);
  pass &= expect(s0 == boxed32({{3}, {4, 6, 2}, {5, 1}}), "3+T display");
  pass &= expect(s1 == boxed32({{3}, {4, 1, 2}, {5, 6}}), "first step");
  pass &= expect(s2 == boxed32({{3}, {1, 4, 2}, {5, 6}}), "second step");
  pass &= expect(s3 == boxed32({{3}, {1, 2, 4}, {5, 6}}), "third step");
  pass &= expect(jdt(s0).tableau == s3, "jdt(3+T)");

  // the three backward steps
  const Tableau u0 = add_mod(s3, -3);
  const Tableau u1 = unstraighten_step(u0);
  const Tableau u2 = unstraighten_step(u1);
  const Tableau u3 = unstraighten_step(u2);
  pass &= expect(u0 == boxed32({{6}, {4, 5, 1}, {2, 3}}), "-3+P display");
  pass &= expect(u1 == boxed32({{6}, {4, 1, 5}, {2, 3}}), "first reverse step");
  pass &= expect(u2 == boxed32({{6}, {1, 4, 5}, {2, 3}}), "second reverse step");
  pass &= expect(u3 == t, "ijdt(-3+P)");
  pass &= expect(ijdt(u0) == t, "ijdt output");

  pass &= expect(from_inverse_reading_word(Permutation::parse("256314"),
                                           Partition({3, 2})) ==
                     boxed32({{3}, {4, 6, 2}, {5, 1}}),
                 "tableau of the rotation word 256314");
  pass &= expect(cyclic_descent_set(s3) == DescentSet(6, {3, 4, 6}),
                 "cDes of jdt(3+T)");
  pass &= expect(jdt_inverse(s3) == s0, "jdt_inverse display");

  // the rotation table around the example
  pass &= expect(jdt(add_mod(t, 2)).tableau == boxed32({{2}, {1, 3, 5}, {4, 6}}),
                 "jdt(2+T)");
  pass &= expect(jdt(add_mod(t, 4)).tableau == boxed32({{4}, {1, 3, 5}, {2, 6}}),
                 "jdt(4+T)");
  pass &= expect(descent_set(jdt(add_mod(t, 2)).tableau) ==
                     DescentSet(6, {2, 3, 5}),
                 "Des(jdt(2+T))");
  pass &= expect(descent_set(jdt(add_mod(t, 3)).tableau) ==
                     DescentSet(6, {3, 4}),
                 "Des(jdt(3+T))");
  pass &= expect(descent_set(jdt(add_mod(t, 4)).tableau) ==
                     DescentSet(6, {1, 4, 5}),
                 "Des(jdt(4+T))");
  return pass;
}

bool action_rotates_cdes(std::string& detail) {
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const int n = m + 1;
      for (const Tableau& p : enumerate_syt(boxed_shape(lambda))) {
        if (cyclic_rotate(p, n) != p) {
          detail = "psi^n is not the identity on " + p.to_string();
          return false;
        }
        if (cyclic_descent_set(cyclic_rotate(p, 1)) !=
            cyclic_descent_set(p).shifted(1)) {
          detail = "cDes not rotated on " + p.to_string();
          return false;
        }
        if (cyclic_descent_set(p).linear_part() != descent_set(p)) {
          detail = "cDes does not restrict to Des on " + p.to_string();
          return false;
        }
      }
    }
  }
  return true;
}

bool extension_axioms(std::string& detail) {
  // permutations with horizontal rotation
  for (int n = 2; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    std::map<Permutation, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
      index[perms[static_cast<size_t>(i)]] = i;
    }
    CyclicExtensionWitness w;
    w.n = n;
    w.count = static_cast<int>(perms.size());
    w.des = [&perms](int i) {
      return descent_set(perms[static_cast<size_t>(i)]);
    };
    w.cdes = [&perms](int i) {
      return cyclic_descent_set(perms[static_cast<size_t>(i)]);
    };
    w.act = [&perms, &index](int k, int i) {
      return index.at(rotate(perms[static_cast<size_t>(i)], -k));
    };
    if (!verify_extension(w).valid) {
      detail = "permutation witness fails at n=" + std::to_string(n);
      return false;
    }
  }
  // rotated standard tableaux of a fixed shape
  for (int n = 2; n <= 7; ++n) {
    std::vector<Shape> shapes;
    for (const Partition& lambda : partitions_of(n)) shapes.push_back(Shape(lambda));
    for (const Partition& lambda : partitions_of(n - 1)) {
      shapes.push_back(boxed_shape(lambda));
    }
    for (const Shape& shape : shapes) {
      std::set<Tableau> rotated;
      for (const Tableau& t : enumerate_syt(shape)) {
        for (int k = 0; k < n; ++k) rotated.insert(add_mod(t, k));
      }
      const std::vector<Tableau> objects(rotated.begin(), rotated.end());
      std::map<Tableau, int> index;
      for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
        index.emplace(objects[static_cast<size_t>(i)], i);
      }
      CyclicExtensionWitness w;
      w.n = n;
      w.count = static_cast<int>(objects.size());
      w.des = [&objects](int i) {
        return descent_set_rot(objects[static_cast<size_t>(i)]);
      };
      w.cdes = [&objects](int i) {
        return cdes_rot(objects[static_cast<size_t>(i)]);
      };
      w.act = [&objects, &index](int k, int i) {
        return index.at(add_mod(objects[static_cast<size_t>(i)], k));
      };
      if (!verify_extension(w).valid) {
        detail = "rotated tableaux witness fails on " + shape.to_string();
        return false;
      }
    }
  }
  // standard boxed tableaux with the straightening action
  for (int m = 1; m <= 6; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      const auto objects = enumerate_syt(boxed_shape(lambda));
      std::map<Tableau, int> index;
      for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
        index.emplace(objects[static_cast<size_t>(i)], i);
      }
      CyclicExtensionWitness w;
      w.n = m + 1;
      w.count = static_cast<int>(objects.size());
      w.des = [&objects](int i) {
        return descent_set(objects[static_cast<size_t>(i)]);
      };
      w.cdes = [&objects](int i) {
        return cyclic_descent_set(objects[static_cast<size_t>(i)]);
      };
      w.act = [&objects, &index](int k, int i) {
        return index.at(cyclic_rotate(objects[static_cast<size_t>(i)], k));
      };
      if (!verify_extension(w).valid) {
        detail = "boxed tableaux witness fails on " + lambda.to_string() + "^#";
        return false;
      }
    }
  }
  return true;
}

bool oracle_coherence(std::string& detail) {
  // the two expansion routes decide equality identically
  std::mt19937_64 rng(424242);
  for (int pair = 0; pair < 1000; ++pair) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const QSymF a = random_qsym(n, rng);
    const QSymF b = (pair % 4 == 0) ? a : random_qsym(n, rng);
    const bool via_m = to_monomial_basis(a) == to_monomial_basis(b);
    const bool via_poly = expand_polynomial(a, n) == expand_polynomial(b, n);
    if (via_m != via_poly) {
      detail = "equality disagreement at pair " + std::to_string(pair);
      return false;
    }
  }
  // Schur round trip
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      SchurExpansion expected(n);
      expected.add(lambda, 1);
      if (schur_expand(schur_fundamental(Shape(lambda))) != expected) {
        detail = "round trip fails at " + lambda.to_string();
        return false;
      }
    }
  }
  // enumeration counts against the hook length formula
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      if (Int(enumerate_syt(Shape(lambda)).size()) !=
          hook_length_count(lambda)) {
        detail = "count mismatch at " + lambda.to_string();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Q(A_lambda C_n) = s_lambda s_1 for all lambda of n-1, 2 <= n <= 7",
       [](std::string& d) { return closure_expands_by_one_box(7, d); }},
      {"rotated inverse descent classes are Schur-positive and factor "
       "through s_1, 3 <= n <= 6",
       [](std::string& d) {
         return rotated_inverse_descent_classes_positive(6, d);
       }},
      {"Q({132} C_4) = 2 s_(2,2) while Q({132}) is not symmetric",
       small_closure_counterexample},
      {"Q({3142,1423}) and its right closure are Schur-positive, the left "
       "closure is not symmetric",
       vertical_rotation_counterexample},
      {"Q(C_n) = s_(n) + s_(n-1,1) for 2 <= n <= 8", cyclic_group_expansion},
      {"straightening bijects {k+T : box=n} onto {P : box=k} and is inverted "
       "exactly, lambda up to 6 cells",
       straightening_bijective},
      {"straightening preserves linear descent sets over the same sweep",
       straightening_preserves_descents},
      {"every straightening step pairs a moving entry with a non-moving one "
       "and keeps both restrictions standard",
       straightening_traces_clean},
      {"the worked 6-cell example reproduces bit for bit", worked_examples},
      {"the straightening action is a Z_n-action rotating cyclic descent "
       "sets, lambda up to 6 cells",
       action_rotates_cdes},
      {"cyclic descent extension axioms hold for all three families",
       extension_axioms},
      {"expansion oracles cohere: 1000 random pairs, Schur round trips, hook "
       "length counts",
       oracle_coherence},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1)
              << ": " << criteria[i].label;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
