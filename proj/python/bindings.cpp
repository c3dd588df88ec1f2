#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycdes/json_io.hpp"
#include "cycdes/qsym.hpp"
#include "cycdes/straighten.hpp"
#include "cycdes/verify.hpp"

namespace py = pybind11;
using namespace cycdes;

namespace {

py::object big_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

py::dict qsym_terms(const QSymF& q) {
  py::dict out;
  for (const auto& [mask, c] : q.terms()) {
    out[py::tuple(py::cast(DescentSet(q.n(), mask).elements()))] = big_int(c);
  }
  return out;
}

py::dict m_terms(const MExpansion& m) {
  py::dict out;
  for (const auto& [alpha, c] : m.terms()) {
    out[py::tuple(py::cast(alpha))] = big_int(c);
  }
  return out;
}

py::dict schur_terms(const SchurExpansion& e) {
  py::dict out;
  for (const auto& [lambda, c] : e.terms()) {
    out[py::tuple(py::cast(lambda.parts()))] = big_int(c);
  }
  return out;
}

py::dict poly_terms(const Polynomial& p) {
  py::dict out;
  for (const auto& [exps, c] : p.terms()) {
    out[py::tuple(py::cast(exps))] = big_int(c);
  }
  return out;
}

py::object json_to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Permutation perm_from_object(const py::object& obj) {
  if (py::isinstance<Permutation>(obj)) return obj.cast<Permutation>();
  if (py::isinstance<py::str>(obj)) {
    return Permutation::parse(obj.cast<std::string>());
  }
  return Permutation(obj.cast<std::vector<int>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact descent combinatorics: quasisymmetric generating functions, "
      "Schur positivity of horizontal rotation closures, and the cyclic "
      "straightening action on boxed standard Young tableaux";

  py::class_<DescentSet>(m, "DescentSet")
      .def(py::init<int, const std::vector<int>&>(), py::arg("n"),
           py::arg("elements"))
      .def_property_readonly("n", &DescentSet::n)
      .def("elements", &DescentSet::elements)
      .def("contains", &DescentSet::contains)
      .def("shifted", &DescentSet::shifted)
      .def("linear_part", &DescentSet::linear_part)
      .def(py::self == py::self)
      .def("__repr__", &DescentSet::to_string)
      .def("__len__", &DescentSet::size);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init(&perm_from_object), py::arg("word"))
      .def_property_readonly("n", &Permutation::n)
      .def("word", &Permutation::word)
      .def("__call__", &Permutation::operator())
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", &Permutation::to_string)
      .def("__hash__",
           [](const Permutation& p) { return py::hash(py::cast(p.word())); });

  py::class_<PermMultiset>(m, "PermMultiset")
      .def(py::init<>())
      .def(py::init([](const py::iterable& members) {
             PermMultiset out;
             for (py::handle h : members) {
               out.add(perm_from_object(py::reinterpret_borrow<py::object>(h)));
             }
             return out;
           }),
           py::arg("members"))
      .def_property_readonly("n", &PermMultiset::n)
      .def("add",
           [](PermMultiset& self, const py::object& pi, long long mult) {
             self.add(perm_from_object(pi), Int(mult));
           },
           py::arg("perm"), py::arg("mult") = 1)
      .def("entries",
           [](const PermMultiset& self) {
             py::list out;
             for (const auto& [pi, mult] : self.entries()) {
               out.append(py::make_tuple(pi, big_int(mult)));
             }
             return out;
           })
      .def("distinct_size", &PermMultiset::distinct_size)
      .def("total_size",
           [](const PermMultiset& self) { return big_int(self.total_size()); })
      .def(py::self == py::self)
      .def("__len__", &PermMultiset::distinct_size);

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_property_readonly("size", &Partition::size)
      .def("parts", &Partition::parts)
      .def("conjugate", &Partition::conjugate)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", &Partition::to_string);

  py::class_<Shape>(m, "Shape")
      .def(py::init<Partition>(), py::arg("outer"))
      .def(py::init<Partition, Partition>(), py::arg("outer"), py::arg("inner"))
      .def_static("boxed", &Shape::boxed)
      .def_property_readonly("size", &Shape::size)
      .def("cells", &Shape::cells)
      .def("boxed_like", &Shape::boxed_like)
      .def("box_partition", &Shape::box_partition)
      .def(py::self == py::self)
      .def("__repr__", &Shape::to_string);

  py::class_<Tableau>(m, "Tableau")
      .def(py::init<Shape, std::vector<std::vector<int>>>(), py::arg("shape"),
           py::arg("rows"))
      .def_property_readonly("n", &Tableau::n)
      .def_property_readonly("shape", &Tableau::shape)
      .def("rows", &Tableau::rows)
      .def("at", &Tableau::at)
      .def("cell_of", &Tableau::cell_of)
      .def("is_standard", &Tableau::is_standard)
      .def("ascii", &Tableau::ascii)
      .def(py::self == py::self)
      .def("__repr__", &Tableau::to_string);

  py::class_<QSymF>(m, "QSymF")
      .def_property_readonly("n", &QSymF::n)
      .def("terms", &qsym_terms)
      .def("coeff", [](const QSymF& q,
                       const DescentSet& d) { return big_int(q.coeff(d)); })
      .def("is_zero", &QSymF::is_zero)
      .def(py::self == py::self)
      .def("__repr__", &QSymF::to_string);

  py::class_<MExpansion>(m, "MExpansion")
      .def_property_readonly("n", &MExpansion::n)
      .def("terms", &m_terms)
      .def(py::self == py::self)
      .def("__repr__", &MExpansion::to_string);

  py::class_<SchurExpansion>(m, "SchurExpansion")
      .def(py::init([](int n, const py::dict& terms) {
             SchurExpansion out(n);
             for (auto item : terms) {
               out.add(Partition(item.first.cast<std::vector<int>>()),
                       Int(py::str(item.second).cast<std::string>()));
             }
             return out;
           }),
           py::arg("n"), py::arg("terms") = py::dict())
      .def_property_readonly("n", &SchurExpansion::n)
      .def("terms", &schur_terms)
      .def("nonnegative", &SchurExpansion::nonnegative)
      .def(py::self == py::self)
      .def("__repr__", &SchurExpansion::to_string);

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("vars", &Polynomial::vars)
      .def("terms", &poly_terms)
      .def(py::self == py::self);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("moved", &TraceStep::moved)
      .def_readonly("displaced", &TraceStep::displaced)
      .def_readonly("from_cell", &TraceStep::from)
      .def_readonly("to_cell", &TraceStep::to);

  py::class_<JdtResult>(m, "JdtResult")
      .def_readonly("tableau", &JdtResult::tableau)
      .def_property_readonly("steps", [](const JdtResult& r) {
        return r.trace.steps;
      });

  m.def("descent_set",
        py::overload_cast<const Permutation&>(&descent_set));
  m.def("descent_set", py::overload_cast<const Tableau&>(&descent_set));
  m.def("cyclic_descent_set",
        py::overload_cast<const Permutation&>(&cyclic_descent_set));
  m.def("cyclic_descent_set",
        py::overload_cast<const Tableau&>(&cyclic_descent_set));
  m.def("inverse", &inverse);
  m.def("rotate", &rotate, py::arg("pi"), py::arg("k"));
  m.def("all_permutations", &all_permutations);
  m.def("horizontal_closure", &horizontal_closure);
  m.def("left_closure", &left_closure);
  m.def("descent_class", &descent_class, py::arg("n"), py::arg("j"),
        py::arg("inverted") = false);
  m.def("rotated_descent_set", &rotated_descent_set, py::arg("d"),
        py::arg("k"));
  m.def("rsk", [](const py::object& pi) {
    const RskPair pair = rsk(perm_from_object(pi));
    return py::make_tuple(pair.insertion, pair.recording);
  });

  m.def("partitions_of", &partitions_of);
  m.def("dominates", &dominates);
  m.def("add_one_box", &add_one_box);
  m.def("boxed_shape", &boxed_shape);
  m.def("enumerate_syt", &enumerate_syt);
  m.def("add_mod", &add_mod, py::arg("t"), py::arg("k"));
  m.def("cdes_rot", &cdes_rot);
  m.def("cdes_rot_prime", &cdes_rot_prime);
  m.def("descent_set_rot", &descent_set_rot);
  m.def("reading_word", &reading_word);
  m.def("inverse_reading_word", &inverse_reading_word);
  m.def("box_entry", &box_entry);
  m.def("rotation_witnesses", &rotation_witnesses);
  m.def("is_rotated_standard", &is_rotated_standard);
  m.def("from_inverse_reading_word", [](const py::object& tau,
                                        const Partition& lambda) {
    return from_inverse_reading_word(perm_from_object(tau), lambda);
  });
  m.def("inverse_reading_words", &inverse_reading_words);

  m.def("qsym_of", &qsym_of);
  m.def("expand_polynomial", &expand_polynomial, py::arg("q"),
        py::arg("vars"));
  m.def("to_monomial_basis", &to_monomial_basis);
  m.def("is_symmetric", &is_symmetric);
  m.def("schur_fundamental", &schur_fundamental);
  m.def("schur_monomial", &schur_monomial);
  m.def("kostka_number", [](const Partition& lambda,
                            const std::vector<int>& content) {
    return big_int(kostka_number(lambda, content));
  });
  m.def("schur_expand", &schur_expand);
  m.def("is_schur_positive", &is_schur_positive);
  m.def("pieri_s1", &pieri_s1);
  m.def("to_fundamental", &to_fundamental);

  m.def("straighten_step",
        [](const Tableau& t) { return straighten_step(t); });
  m.def("unstraighten_step",
        [](const Tableau& t) { return unstraighten_step(t); });
  m.def("jdt", &jdt, py::arg("r"), py::arg("check_invariants") = false);
  m.def("ijdt", &ijdt);
  m.def("jdt_inverse", &jdt_inverse);
  m.def("cyclic_rotate", &cyclic_rotate, py::arg("p"), py::arg("k"));

  py::class_<CyclicExtensionWitness>(m, "CyclicExtensionWitness")
      .def(py::init([](std::string name, int n, int count,
                       std::function<std::vector<int>(int)> des,
                       std::function<std::vector<int>(int)> cdes,
                       std::function<int(int, int)> act) {
             CyclicExtensionWitness w;
             w.name = std::move(name);
             w.n = n;
             w.count = count;
             w.des = [n, des = std::move(des)](int i) {
               return DescentSet(n, des(i));
             };
             w.cdes = [n, cdes = std::move(cdes)](int i) {
               return DescentSet(n, cdes(i));
             };
             w.act = std::move(act);
             return w;
           }),
           py::arg("name"), py::arg("n"), py::arg("count"), py::arg("des"),
           py::arg("cdes"), py::arg("act"));

  m.def("verify_extension", [](const CyclicExtensionWitness& w) {
    return json_to_py(extension_report_to_json(verify_extension(w)));
  });

  m.def("run_suite",
        [](const std::string& name, int nmax, std::uint64_t seed) {
          return json_to_py(report_to_json(run_suite(name, nmax, seed)));
        },
        py::arg("name"), py::arg("nmax") = 6, py::arg("seed") = 1);
  m.def("suite_names", &suite_names);

  py::register_exception<NotSymmetricError>(m, "NotSymmetricError",
                                            PyExc_ValueError);
}
