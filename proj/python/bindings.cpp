#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uqosp/braid.hpp"
#include "uqosp/error.hpp"
#include "uqosp/golden.hpp"
#include "uqosp/qnum.hpp"
#include "uqosp/repn.hpp"
#include "uqosp/rmat.hpp"
#include "uqosp/tensor.hpp"

namespace py = pybind11;
using namespace uqosp;

namespace {

RepGroup group_from(const AdmissibleRoot& root, Complex p, const std::string& group) {
  if (group.empty()) return default_group(root, p);
  const auto parsed = parse_group(group);
  if (!parsed) throw Error(ErrorCode::invalid_argument, "unknown group '" + group + "'");
  return *parsed;
}

LegPair leg_pair_from(const std::string& name) {
  if (name == "12") return LegPair::r12;
  if (name == "13") return LegPair::r13;
  if (name == "23") return LegPair::r23;
  throw Error(ErrorCode::invalid_argument, "leg pair must be '12', '13' or '23'");
}

}  // namespace

PYBIND11_MODULE(_uqosp, m) {
  m.doc() = "Root-of-unity Fock modules of U_q[osp(1/2)], R-matrices and Yang-Baxter checks";

  static py::exception<Error> error_type(m, "UqospError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), e.what());
    }
  });

  py::enum_<RootClass>(m, "RootClass")
      .value("ClassI", RootClass::ClassI)
      .value("ClassII", RootClass::ClassII);

  py::class_<AdmissibleRoot>(m, "AdmissibleRoot")
      .def_property_readonly("k", &AdmissibleRoot::k)
      .def_property_readonly("m", &AdmissibleRoot::m)
      .def_property_readonly("q", &AdmissibleRoot::value)
      .def_property_readonly("root_class", &AdmissibleRoot::root_class)
      .def_property_readonly("universal_r_known_absent", &AdmissibleRoot::universal_r_known_absent)
      .def("__repr__", [](const AdmissibleRoot& r) {
        return "AdmissibleRoot(k=" + std::to_string(r.k()) + ", m=" + std::to_string(r.m()) + ")";
      });

  m.def("make_root", &make_root, py::arg("k"), py::arg("m"));
  m.def("brace", [](int n, Complex x, int k, int mm) { return brace(n, x, make_root(k, mm).q()); },
        py::arg("n"), py::arg("x"), py::arg("k"), py::arg("m"));
  m.def("qint", [](int n, int k, int mm) { return qint(n, make_root(k, mm).q()); }, py::arg("n"), py::arg("k"),
        py::arg("m"));
  m.def("qbinom", [](int N, int n, int k, int mm) { return qbinom(N, n, make_root(k, mm).q()); }, py::arg("N"),
        py::arg("n"), py::arg("k"), py::arg("m"));

  py::class_<ModuleSpec>(m, "ModuleSpec")
      .def_property_readonly("root", [](const ModuleSpec& s) { return s.root; })
      .def_readonly("p", &ModuleSpec::p)
      .def_property_readonly("group", [](const ModuleSpec& s) { return std::string(to_string(s.group)); })
      .def_readonly("L", &ModuleSpec::L)
      .def_readonly("indecomposable", &ModuleSpec::indecomposable)
      .def_property_readonly("dim", &ModuleSpec::dim);

  m.def(
      "classify",
      [](int k, int mm, Complex p, const std::string& group) {
        const auto root = make_root(k, mm);
        return classify(root, p, group_from(root, p, group));
      },
      py::arg("k"), py::arg("m"), py::arg("p"), py::arg("group") = "");

  py::class_<FockModule>(m, "FockModule")
      .def_property_readonly("dim", &FockModule::dim)
      .def_property_readonly("p", &FockModule::p)
      .def_property_readonly("spec", &FockModule::spec)
      .def_property_readonly("H", [](const FockModule& f) { return f.H().matrix; })
      .def_property_readonly("K", [](const FockModule& f) { return f.K().matrix; })
      .def_property_readonly("a_plus", [](const FockModule& f) { return f.a_plus().matrix; })
      .def_property_readonly("a_minus", [](const FockModule& f) { return f.a_minus().matrix; });

  m.def(
      "module",
      [](int k, int mm, Complex p, const std::string& group) {
        const auto root = make_root(k, mm);
        return build_module(classify(root, p, group_from(root, p, group)));
      },
      py::arg("k"), py::arg("m"), py::arg("p"), py::arg("group") = "");
  m.def("truncated_generic_module", &build_truncated_generic, py::arg("q"), py::arg("p"), py::arg("size"));

  m.def("defining_relation_residual", &defining_relation_residual);
  m.def("parabose_limit_residual", &parabose_limit_residual);
  m.def("central_values", [](const FockModule& mod) {
    const auto c = central_values(mod);
    return py::dict(py::arg("x_plus") = c.x_plus, py::arg("x_minus") = c.x_minus, py::arg("z") = c.z,
                    py::arg("scalarness_residual") = c.scalarness_residual);
  });

  m.def("r_explicit", [](const FockModule& a, const FockModule& b) { return r_explicit(a, b).matrix; });
  m.def("r_universal", [](const FockModule& a, const FockModule& b) { return r_universal(a, b).matrix; });
  m.def("r_check", [](const FockModule& mod) { return r_check(mod).matrix; });
  m.def(
      "r_legs",
      [](const FockModule& a, const FockModule& b, const FockModule& c, const std::string& pair, bool via_perm) {
        const auto legs = leg_pair_from(pair);
        return via_perm ? r_legs_via_perm(a, b, c, legs).matrix : r_legs(a, b, c, legs).matrix;
      },
      py::arg("mod1"), py::arg("mod2"), py::arg("mod3"), py::arg("pair"), py::arg("via_perm") = false);
  m.def("qybe_residual", &qybe_residual);
  m.def("intertwine_residual", [](const FockModule& a, const FockModule& b) {
    const auto r = intertwine_residual(a, b);
    return py::dict(py::arg("H") = r.h, py::arg("a_plus") = r.a_plus, py::arg("a_minus") = r.a_minus);
  });

  m.def(
      "braid_generators",
      [](const FockModule& mod, int strands, long size_cap) {
        std::vector<Matrix> out;
        for (const auto& g : braid_generators(mod, strands, size_cap).generators) out.push_back(g.matrix);
        return out;
      },
      py::arg("module"), py::arg("N"), py::arg("size_cap") = kDefaultSizeCap);
  m.def(
      "braid_relation_residual",
      [](const FockModule& mod, int strands, long size_cap) {
        const auto r = braid_relation_residual(braid_generators(mod, strands, size_cap));
        return py::dict(py::arg("far_commutation") = r.far_commutation, py::arg("yang_baxter") = r.yang_baxter);
      },
      py::arg("module"), py::arg("N"), py::arg("size_cap") = kDefaultSizeCap);

  m.def("reproduce", [](const std::string& label) {
    const auto r = golden::reproduce(label);
    return py::dict(py::arg("example") = r.label, py::arg("max_deviation") = r.max_deviation,
                    py::arg("points") = r.points, py::arg("passed") = r.pass());
  });
}
