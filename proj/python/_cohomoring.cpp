#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohomoring/cocycles.hpp"
#include "cohomoring/cohomology2.hpp"
#include "cohomoring/endo_rings.hpp"
#include "cohomoring/examples.hpp"
#include "cohomoring/serialize.hpp"
#include "cohomoring/verify.hpp"

namespace py = pybind11;
using namespace cohomoring;

namespace {

// Values cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

ActionPtr pick_action(const AbelianExtension& ext, const std::string& over) {
  if (over == "G") return ext.g_action;
  if (over == "Q") return ext.action;
  throw Error("over must be 'G' or 'Q'");
}

}  // namespace

PYBIND11_MODULE(_cohomoring, m) {
  m.doc() = "Finite group extensions, their endomorphism rings and low-degree cohomology";

  py::register_exception<Error>(m, "CohomoringError", PyExc_ValueError);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def_property_readonly("table", &FiniteGroup::table)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("label", &FiniteGroup::label)
      .def("to_json", [](const FiniteGroup& g) { return dump(group_to_json(g)); });

  auto as_mutable = [](const GroupPtr& g) { return std::const_pointer_cast<FiniteGroup>(g); };
  m.def("cyclic", [=](int n) { return as_mutable(make_cyclic(n)); });
  m.def("dihedral", [=](int n) { return as_mutable(make_dihedral(n)); }, "Dihedral group of order 2n");
  m.def("direct_product", [=](const std::shared_ptr<FiniteGroup>& a, const std::shared_ptr<FiniteGroup>& b) {
    return as_mutable(make_direct_product(a, b));
  });
  m.def("group_from_json", [=](const std::string& text) { return as_mutable(group_from_json(Json::parse(text))); });

  py::class_<AbelianExtension>(m, "Extension")
      .def_property_readonly("N", [=](const AbelianExtension& e) { return as_mutable(e.N); })
      .def_property_readonly("G", [=](const AbelianExtension& e) { return as_mutable(e.G); })
      .def_property_readonly("Q", [=](const AbelianExtension& e) { return as_mutable(e.Q); })
      .def_property_readonly("i", [](const AbelianExtension& e) { return e.i.map; })
      .def_property_readonly("p", [](const AbelianExtension& e) { return e.p.map; })
      .def_property_readonly("section", [](const AbelianExtension& e) { return e.section; })
      .def_property_readonly("action", [](const AbelianExtension& e) { return e.action->act; })
      .def("cocycle", [](const AbelianExtension& e) { return extension_cocycle(e).values; })
      .def("to_json", [](const AbelianExtension& e) { return dump(extension_to_json(e)); });

  m.def("dihedral_extension", &dihedral_extension, py::arg("n"));
  m.def("extension_from_json", [](const std::string& text) { return extension_from_json(Json::parse(text)); });
  m.def(
      "extension_from_quadruple",
      [](const std::string& text) {
        Json entry = Json::parse(text);
        entry["name"] = "quadruple";
        return catalog_from_json(Json::array({entry})).front().ext;
      },
      "Extension from a JSON object {Q, N, action, cocycle}");

  m.def(
      "z1",
      [](const AbelianExtension& ext, const std::string& over) {
        std::vector<std::vector<Elem>> out;
        for (const auto& phi : enumerate_z1(pick_action(ext, over))) out.push_back(phi.values);
        return out;
      },
      py::arg("extension"), py::arg("over") = "G");

  m.def(
      "h2",
      [](const AbelianExtension& ext, const std::string& method) {
        if (method != "linear" && method != "brute") throw Error("method must be 'linear' or 'brute'");
        const auto h = method == "linear" ? h2_linear(ext.action) : h2_bruteforce(ext.action);
        Json j = h2_group_to_json(h);
        j["extension_class"] = h2_class_to_json(h.reduce(extension_cocycle(ext)));
        return dump(j);
      },
      py::arg("extension"), py::arg("method") = "linear");

  m.def(
      "endo_ring", [](const AbelianExtension& ext) { return dump(endo_to_json(enumerate_endo_qn(ext))); },
      py::arg("extension"));

  py::class_<FiniteRing, std::shared_ptr<FiniteRing>>(m, "Ring")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("one", &FiniteRing::one)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("neg", &FiniteRing::neg)
      .def("star", [](const FiniteRing& r, Elem a, Elem b) { return star(r, a, b); })
      .def("quasi_regular", [](const FiniteRing& r) { return quasi_regular_group(r).members; })
      .def("units", [](const FiniteRing& r) { return units(r).members; })
      .def("qr_to_units_is_isomorphism", [](const FiniteRing& r) { return qr_to_units_is_isomorphism(r); })
      .def("is_square_zero_ideal",
           [](const FiniteRing& r, const std::vector<Elem>& members) { return is_square_zero_ideal(r, members); })
      .def("to_json", [](const FiniteRing& r) { return dump(ring_to_json(r)); });

  auto ring_mut = [](const RingPtr& r) { return std::const_pointer_cast<FiniteRing>(r); };
  m.def("zn_ring", [=](int n) { return ring_mut(make_zn_ring(n)); });
  m.def("ring_from_json", [=](const std::string& text) { return ring_mut(ring_from_json(Json::parse(text))); });
  m.def("dihedral_ring", [=](int n) { return ring_mut(example1_ring(n)); },
        "Z/n x Z/n with (k1,l1)(k2,l2) = (l1 k2, l1 l2); (k,l) has index k + n l");
  m.def(
      "ring_s_r",
      [=]() {
        const auto ex = example2_ring();
        std::vector<Elem> s_ideal;
        for (const auto& [a, b] : ex.s_elements) s_ideal.push_back(ex.index(a, b, 0));
        return py::make_tuple(ring_mut(ex.ring), ex.s_elements, ex.r_elements, s_ideal);
      },
      "The 432-element ring S x| R, the (m, n) pairs of S, the t values of R, and the indices of S x {0}");
  m.def(
      "prop_qr",
      [](const std::shared_ptr<FiniteRing>& source, const std::shared_ptr<FiniteRing>& target,
         const std::vector<Elem>& map, const std::vector<Elem>& ideal) {
        const RingHom p{source, target, map};
        p.validate();
        return verify_prop_qr(p, ideal).ok();
      },
      "Exactness of 0 -> I -> QR(R) -> QR(S) -> 0 for a surjection R -> S with square-zero kernel I");

  m.def(
      "verify_extension",
      [](const AbelianExtension& ext, bool check_h2g) {
        VerifyOptions options;
        options.check_h2g = check_h2g;
        return dump(instance_to_json(verify_instance({"extension", ext, ""}, options)));
      },
      py::arg("extension"), py::arg("check_h2g") = true);
  m.def(
      "verify_catalog",
      [](const std::string& text, bool check_h2g) {
        VerifyOptions options;
        options.check_h2g = check_h2g;
        const auto catalog = text.empty() ? default_catalog() : catalog_from_json(Json::parse(text));
        return dump(summary_to_json(sweep(catalog, options)));
      },
      py::arg("catalog") = "", py::arg("check_h2g") = true);
}
