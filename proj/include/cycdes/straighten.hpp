#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cycdes/tableau.hpp"

namespace cycdes {

enum class SlideDirection { North, West, South, East };

struct TraceStep {
  int moved = 0;  // the short (resp. tall) entry that moved
  SlideDirection direction = SlideDirection::North;
  std::pair<int, int> from;  // its cell before the switch
  std::pair<int, int> to;    // its cell after the switch
  int displaced = 0;         // the entry it switched places with
};

struct StraighteningTrace {
  Tableau initial;
  Tableau final;
  std::vector<TraceStep> steps;
};

// One forward straightening exchange: the minimal entry with a larger
// neighbor immediately above or to the left switches with the larger of
// those neighbors. Throws std::domain_error on standard input.
Tableau straighten_step(const Tableau& t, TraceStep* step = nullptr);

// One reverse exchange: the maximal entry with a smaller neighbor
// immediately below or to the right switches with the smaller of those.
Tableau unstraighten_step(const Tableau& t, TraceStep* step = nullptr);

struct JdtResult {
  Tableau tableau;
  StraighteningTrace trace;
};

// Straightens a rotated tableau k+T (T standard of boxed shape with the box
// holding n) by iterating straighten_step; the result is standard with box
// entry k. When check_invariants is set every intermediate state is checked:
// each step must switch one moving entry (1..k-1) with one non-moving one,
// both restrictions must stay standard, moving entries must be processed in
// increasing order, and the settled prefix 1..i-1 must form a left-justified
// standard subtableau when i starts moving. Violations throw
// std::logic_error; malformed input throws std::domain_error. A step ceiling
// of n^2 guards against runaway loops.
JdtResult jdt(const Tableau& r, bool check_invariants = false);

// Inverse straightening of -k+P (P standard of boxed shape, box entry k, so
// the input box holds n) by iterating unstraighten_step until standard.
Tableau ijdt(const Tableau& r);

// k + ijdt(-k + P) with k = box_entry(P): the two-sided inverse of jdt on
// standard boxed tableaux.
Tableau jdt_inverse(const Tableau& p);

// Cyclic descent set of a standard tableau of boxed shape:
// cdes_rot(jdt_inverse(P)). Restricting to [n-1] recovers descent_set(P).
DescentSet cyclic_descent_set(const Tableau& p);

// The Z_n-action on standard boxed tableaux generated by
// P |-> jdt(1 + jdt_inverse(P)); k is reduced mod n and k = 0 is the
// identity.
Tableau cyclic_rotate(const Tableau& p, int k);

// A finite family of objects (addressed by index) carrying descent data and
// a candidate Z_n-action, to be checked against the cyclic-extension axioms.
struct CyclicExtensionWitness {
  std::string name;
  int n = 0;
  int count = 0;
  std::function<DescentSet(int)> des;   // subset of [n-1]
  std::function<DescentSet(int)> cdes;  // subset of [n]
  std::function<int(int k, int obj)> act;
};

struct ExtensionViolation {
  std::string axiom;  // "action", "restriction", "equivariance"
  int object = 0;
  int k = 0;
  std::string detail;
};

struct ExtensionReport {
  bool valid = true;
  std::vector<ExtensionViolation> violations;
};

// Checks that act is a Z_n-action and that (act, cdes) is a cyclic descent
// extension of des: cdes restricted to [n-1] equals des, and acting by k
// shifts cdes by k. An action leaving the object list throws
// std::invalid_argument.
ExtensionReport verify_extension(const CyclicExtensionWitness& w);

}  // namespace cycdes
