#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ortholat/builders.hpp"
#include "ortholat/cli.hpp"
#include "ortholat/dimension.hpp"
#include "ortholat/equivalence.hpp"
#include "ortholat/modularity.hpp"
#include "ortholat/subspace.hpp"
#include "ortholat/textio.hpp"

namespace py = pybind11;
using namespace ortholat;

namespace {

py::tuple cmd_tuple(const CmdResult& r) {
  return py::make_tuple(r.exit_code, r.json.dump(2));
}

}  // namespace

PYBIND11_MODULE(_ortholat, m) {
  m.doc() = "finite orthocomplemented lattices and the rational subspace model";

  py::class_<Lattice>(m, "Lattice")
      .def_static("from_covers", &Lattice::from_covers, py::arg("names"),
                  py::arg("covers"))
      .def("size", &Lattice::size)
      .def("bottom", &Lattice::bottom)
      .def("top", &Lattice::top)
      .def("leq", &Lattice::leq)
      .def("meet", &Lattice::meet)
      .def("join", &Lattice::join)
      .def("name", &Lattice::name)
      .def("id_of", &Lattice::id_of)
      .def("atoms", &Lattice::atoms);

  py::class_<OrthoLattice>(m, "OrthoLattice")
      .def_static("attach", &OrthoLattice::attach, py::arg("base"),
                  py::arg("pairs"))
      .def("base", &OrthoLattice::base, py::return_value_policy::reference_internal)
      .def("size", &OrthoLattice::size)
      .def("perp", &OrthoLattice::perp)
      .def("name", &OrthoLattice::name);

  m.def("gen_pentagon", &gen_pentagon);
  m.def("gen_hexagon", &gen_hexagon);
  m.def("gen_boolean", &gen_boolean, py::arg("atoms"));
  m.def("gen_horizontal_sum", &gen_horizontal_sum, py::arg("m"));
  m.def("gen_section3_ortho", &gen_section3_ortho);
  m.def(
      "gen_product",
      [](const OrthoLattice& a, const OrthoLattice& b) {
        return gen_product(a, b);
      },
      py::arg("a"), py::arg("b"));

  m.def("commutes", &commutes, py::arg("ol"), py::arg("a"), py::arg("b"));
  m.def("center", &center);
  m.def("is_factorial", &is_factorial);
  m.def("is_abelian", &is_abelian);
  m.def("check_modular",
        [](const Lattice& L) { return check_modular(L).holds; });
  m.def("find_pentagon", [](const Lattice& L) {
    auto p = find_pentagon(L);
    return p.found ? py::cast(IdVec{p.bot, p.x, p.y, p.z, p.top})
                   : py::cast(nullptr);
  });
  m.def("classify_tag", [](const OrthoLattice& ol) {
    TypeReport tr = classify_type(ol);
    return py::make_tuple(tr.tag, tr.failed_stage);
  });
  m.def("dimension_values", [](const OrthoLattice& ol) {
    auto persp = perspectivity(ol.base());
    DimensionFunction d = dimension_function(ol, persp.rel);
    std::map<std::string, std::string> out;
    for (Id a = 0; a < ol.size(); ++a)
      out[ol.name(a)] = rat_str(d.value[a]);
    return out;
  });
  m.def("serialize", [](const std::string& name, const OrthoLattice& ol) {
    return serialize_lattice(name, ol.base(), &ol);
  });

  m.def("check_text", [](const std::string& t) { return cmd_tuple(cmd_check_text(t)); });
  m.def("decompose_text",
        [](const std::string& t) { return cmd_tuple(cmd_decompose_text(t)); });
  m.def(
      "regular_text",
      [](const std::string& t, bool enumerate) {
        return cmd_tuple(cmd_regular_text(t, enumerate));
      },
      py::arg("text"), py::arg("enumerate") = false);
  m.def(
      "subspace_suite",
      [](unsigned dim, std::uint64_t trials, std::uint64_t seed,
         const std::string& suite) {
        return cmd_tuple(cmd_subspace(dim, trials, seed, suite));
      },
      py::arg("dim") = 3, py::arg("trials") = 200, py::arg("seed") = 0,
      py::arg("suite") = "all");
  m.def("gen_text", [](const std::string& kind, unsigned m_, unsigned atoms) {
    return cmd_tuple(cmd_gen(kind, m_, atoms));
  }, py::arg("kind"), py::arg("m") = 2, py::arg("atoms") = 2);
}
