#include "cycdes/straighten.hpp"

#include <stdexcept>

namespace cycdes {

namespace {

// No two entries of the restricted class where the smaller sits weakly
// south and weakly east of the larger.
bool restriction_standard(const Tableau& t, int lo, int hi) {
  for (int a = lo; a <= hi; ++a) {
    for (int b = a + 1; b <= hi; ++b) {
      const auto [ra, ca] = t.cell_of(a);
      const auto [rb, cb] = t.cell_of(b);
      if (ra >= rb && ca >= cb) return false;
    }
  }
  return true;
}

// The cells of values 1..upto-1 must form row prefixes of the lambda block
// (rows 2..) with weakly decreasing lengths, filled standardly.
bool settled_prefix_left_justified(const Tableau& t, int upto) {
  const Shape& shape = t.shape();
  std::vector<int> row_count(static_cast<size_t>(shape.rows()) + 1, 0);
  for (int v = 1; v < upto; ++v) {
    const auto [r, c] = t.cell_of(v);
    if (r == 1) return false;  // the box row never hosts settled movers
    row_count[static_cast<size_t>(r)] += 1;
  }
  for (int v = 1; v < upto; ++v) {
    const auto [r, c] = t.cell_of(v);
    if (c - shape.row_begin(r) + 1 > row_count[static_cast<size_t>(r)]) {
      return false;  // not a prefix of its row
    }
  }
  for (int r = 2; r < shape.rows(); ++r) {
    if (row_count[static_cast<size_t>(r)] < row_count[static_cast<size_t>(r) + 1]) {
      return false;
    }
  }
  return restriction_standard(t, 1, upto - 1);
}

}  // namespace

Tableau straighten_step(const Tableau& t, TraceStep* step) {
  const Shape& shape = t.shape();
  for (int v = 1; v <= t.n(); ++v) {
    const auto [r, c] = t.cell_of(v);
    int best = 0;
    bool from_above = false;
    if (shape.contains(r - 1, c)) {
      best = t.at(r - 1, c);
      from_above = true;
    }
    if (shape.contains(r, c - 1) && t.at(r, c - 1) > best) {
      best = t.at(r, c - 1);
      from_above = false;
    }
    if (best > v) {
      if (step != nullptr) {
        step->moved = v;
        step->direction =
            from_above ? SlideDirection::North : SlideDirection::West;
        step->from = {r, c};
        step->to = from_above ? std::make_pair(r - 1, c)
                              : std::make_pair(r, c - 1);
        step->displaced = best;
      }
      return t.with_swapped(v, best);
    }
  }
  throw std::domain_error("straighten_step: tableau is already standard");
}

Tableau unstraighten_step(const Tableau& t, TraceStep* step) {
  const Shape& shape = t.shape();
  for (int v = t.n(); v >= 1; --v) {
    const auto [r, c] = t.cell_of(v);
    int best = 0;
    bool from_below = false;
    if (shape.contains(r + 1, c)) {
      best = t.at(r + 1, c);
      from_below = true;
    }
    if (shape.contains(r, c + 1) && (best == 0 || t.at(r, c + 1) < best)) {
      best = t.at(r, c + 1);
      from_below = false;
    }
    if (best != 0 && best < v) {
      if (step != nullptr) {
        step->moved = v;
        step->direction =
            from_below ? SlideDirection::South : SlideDirection::East;
        step->from = {r, c};
        step->to = from_below ? std::make_pair(r + 1, c)
                              : std::make_pair(r, c + 1);
        step->displaced = best;
      }
      return t.with_swapped(v, best);
    }
  }
  throw std::domain_error("unstraighten_step: tableau is already standard");
}

namespace {

void require_rotated_boxed(const Tableau& r, const char* who) {
  if (!r.shape().boxed_like()) {
    throw std::domain_error(std::string(who) +
                            ": shape has no disconnected box");
  }
  const int k = box_entry(r) % r.n();
  if (!add_mod(r, -k).is_standard()) {
    throw std::domain_error(
        std::string(who) +
        ": input is not a rotation of a standard tableau with box entry n");
  }
}

}  // namespace

JdtResult jdt(const Tableau& r, bool check_invariants) {
  require_rotated_boxed(r, "jdt");
  const int n = r.n();
  const int k = box_entry(r) % n;
  auto is_moving = [&](int v) { return v < k; };  // entries 1..k-1

  JdtResult result;
  result.trace.initial = r;
  Tableau current = r;
  int last_moved = 0;
  const int ceiling = n * n;
  while (!current.is_standard()) {
    if (static_cast<int>(result.trace.steps.size()) >= ceiling) {
      throw std::logic_error("jdt: step ceiling exceeded");
    }
    TraceStep step;
    Tableau next = straighten_step(current, &step);
    if (check_invariants) {
      if (!is_moving(step.moved) || is_moving(step.displaced)) {
        throw std::logic_error(
            "jdt: a step must switch one moving and one non-moving entry");
      }
      if (step.moved < last_moved) {
        throw std::logic_error(
            "jdt: moving entries must be processed in increasing order");
      }
      if (step.moved != last_moved &&
          !settled_prefix_left_justified(current, step.moved)) {
        throw std::logic_error(
            "jdt: settled moving entries are not a left-justified standard "
            "subtableau");
      }
      if (!restriction_standard(next, 1, k - 1) ||
          !restriction_standard(next, k + 1, n)) {
        throw std::logic_error(
            "jdt: a restricted subtableau left the standard regime");
      }
    }
    last_moved = step.moved;
    result.trace.steps.push_back(step);
    current = std::move(next);
  }
  if (box_entry(current) != (k == 0 ? n : k)) {
    throw std::logic_error("jdt: box entry moved");
  }
  result.trace.final = current;
  result.tableau = std::move(current);
  return result;
}

Tableau ijdt(const Tableau& r) {
  if (!r.shape().boxed_like()) {
    throw std::domain_error("ijdt: shape has no disconnected box");
  }
  const int n = r.n();
  if (box_entry(r) != n) {
    throw std::domain_error("ijdt: box entry must be n");
  }
  if (!is_rotated_standard(r)) {
    throw std::domain_error("ijdt: input is not a rotated standard tableau");
  }
  Tableau current = r;
  int steps = 0;
  const int ceiling = n * n;
  while (!current.is_standard()) {
    if (steps++ >= ceiling) {
      throw std::logic_error("ijdt: step ceiling exceeded");
    }
    current = unstraighten_step(current);
  }
  return current;
}

Tableau jdt_inverse(const Tableau& p) {
  if (!p.shape().boxed_like()) {
    throw std::domain_error("jdt_inverse: shape has no disconnected box");
  }
  if (!p.is_standard()) {
    throw std::domain_error("jdt_inverse: input must be standard");
  }
  const int d = box_entry(p);
  return add_mod(ijdt(add_mod(p, -d)), d);
}

DescentSet cyclic_descent_set(const Tableau& p) {
  return cdes_rot(jdt_inverse(p));
}

Tableau cyclic_rotate(const Tableau& p, int k) {
  if (!p.shape().boxed_like() || !p.is_standard()) {
    throw std::domain_error("cyclic_rotate: needs a standard boxed tableau");
  }
  const int n = p.n();
  int times = k % n;
  if (times < 0) times += n;
  Tableau current = p;
  for (int i = 0; i < times; ++i) {
    current = jdt(add_mod(jdt_inverse(current), 1)).tableau;
  }
  return current;
}

ExtensionReport verify_extension(const CyclicExtensionWitness& w) {
  ExtensionReport report;
  auto act = [&](int k, int obj) {
    const int image = w.act(k, obj);
    if (image < 0 || image >= w.count) {
      throw std::invalid_argument(
          "verify_extension: action leaves the object list (object " +
          std::to_string(obj) + ", k=" + std::to_string(k) + ")");
    }
    return image;
  };
  auto flag = [&](const char* axiom, int obj, int k, std::string detail) {
    report.valid = false;
    report.violations.push_back(
        ExtensionViolation{axiom, obj, k, std::move(detail)});
  };

  for (int obj = 0; obj < w.count; ++obj) {
    if (act(0, obj) != obj) {
      flag("action", obj, 0, "psi(0) is not the identity");
    }
    for (int a = 0; a < w.n; ++a) {
      for (int b = 0; b < w.n; ++b) {
        if (act(a, act(b, obj)) != act((a + b) % w.n, obj)) {
          flag("action", obj, a,
               "psi(" + std::to_string(a) + ") after psi(" + std::to_string(b) +
                   ") differs from psi(" + std::to_string((a + b) % w.n) + ")");
        }
      }
    }
    const DescentSet des = w.des(obj);
    const DescentSet cdes = w.cdes(obj);
    if (cdes.linear_part() != des) {
      flag("restriction", obj, 0,
           "cDes " + cdes.to_string() + " does not restrict to Des " +
               des.to_string());
    }
    for (int k = 0; k < w.n; ++k) {
      const DescentSet expected = cdes.shifted(k);
      const DescentSet actual = w.cdes(act(k, obj));
      if (actual != expected) {
        flag("equivariance", obj, k,
             "cDes after psi(" + std::to_string(k) + ") is " +
                 actual.to_string() + ", expected " + expected.to_string());
      }
    }
  }
  return report;
}

}  // namespace cycdes
