#include "cycdes/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cycdes {

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json shape_to_json(const Shape& s) {
  const Shape norm = s.normalized();
  json out;
  if (norm.kind() == ShapeKind::Boxed) {
    out["lambda"] = norm.box_partition().parts();
    out["boxed"] = true;
  } else {
    out["lambda"] = norm.outer().parts();
    out["boxed"] = false;
    if (norm.kind() == ShapeKind::Skew) {
      out["mu"] = norm.inner().parts();
    }
  }
  return out;
}

Shape shape_from_json(const json& j) {
  const Partition lambda(j.at("lambda").get<std::vector<int>>());
  if (j.value("boxed", false)) {
    return Shape::boxed(lambda);
  }
  if (j.contains("mu")) {
    return Shape(lambda, Partition(j.at("mu").get<std::vector<int>>()));
  }
  return Shape(lambda);
}

json tableau_to_json(const Tableau& t) {
  json out;
  out["shape"] = shape_to_json(t.shape());
  out["rows"] = t.rows();
  return out;
}

Tableau tableau_from_json(const json& j) {
  return Tableau(shape_from_json(j.at("shape")),
                 j.at("rows").get<std::vector<std::vector<int>>>());
}

json multiset_to_json(const PermMultiset& b) {
  json out = json::array();
  for (const auto& [pi, mult] : b.entries()) {
    out.push_back({{"perm", pi.to_string()}, {"mult", int_to_json(mult)}});
  }
  return out;
}

PermMultiset multiset_from_json(const json& j) {
  PermMultiset out;
  for (const auto& rec : j) {
    if (rec.is_string()) {
      out.add(Permutation::parse(rec.get<std::string>()));
    } else {
      out.add(Permutation::parse(rec.at("perm").get<std::string>()),
              rec.contains("mult") ? int_from_json(rec.at("mult")) : Int(1));
    }
  }
  return out;
}

json qsymf_to_json(const QSymF& q) {
  json terms = json::array();
  for (const auto& [mask, c] : q.terms()) {
    terms.push_back({{"index", DescentSet(q.n(), mask).elements()},
                     {"coeff", int_to_json(c)}});
  }
  return {{"basis", "F"}, {"n", q.n()}, {"terms", terms}};
}

json mexpansion_to_json(const MExpansion& m) {
  json terms = json::array();
  for (const auto& [alpha, c] : m.terms()) {
    terms.push_back({{"index", alpha}, {"coeff", int_to_json(c)}});
  }
  return {{"basis", "M"}, {"n", m.n()}, {"terms", terms}};
}

json schur_to_json(const SchurExpansion& e) {
  json terms = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    terms.push_back(
        {{"index", it->first.parts()}, {"coeff", int_to_json(it->second)}});
  }
  return {{"basis", "s"}, {"n", e.n()}, {"terms", terms}};
}

namespace {

const char* direction_name(SlideDirection d) {
  switch (d) {
    case SlideDirection::North: return "north";
    case SlideDirection::West: return "west";
    case SlideDirection::South: return "south";
    case SlideDirection::East: return "east";
  }
  return "?";
}

}  // namespace

json trace_to_json(const StraighteningTrace& tr) {
  json steps = json::array();
  for (const TraceStep& s : tr.steps) {
    steps.push_back({{"entry", s.moved},
                     {"direction", direction_name(s.direction)},
                     {"from", {s.from.first, s.from.second}},
                     {"to", {s.to.first, s.to.second}},
                     {"displaced", s.displaced}});
  }
  return {{"initial", tableau_to_json(tr.initial)},
          {"final", tableau_to_json(tr.final)},
          {"steps", steps}};
}

json report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json entry = {{"name", c.name}, {"scope", c.scope}, {"pass", c.pass}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    checks.push_back(entry);
  }
  return {{"suite", r.suite},
          {"statement", r.statement},
          {"pass", r.all_pass()},
          {"checks", checks}};
}

json extension_report_to_json(const ExtensionReport& r) {
  json violations = json::array();
  for (const ExtensionViolation& v : r.violations) {
    violations.push_back({{"axiom", v.axiom},
                          {"object", v.object},
                          {"k", v.k},
                          {"detail", v.detail}});
  }
  return {{"valid", r.valid}, {"violations", violations}};
}

}  // namespace cycdes
