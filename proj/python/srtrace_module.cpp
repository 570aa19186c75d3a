#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srtrace/builtins.hpp"
#include "srtrace/error.hpp"
#include "srtrace/report.hpp"
#include "srtrace/sweep.hpp"

namespace py = pybind11;
using namespace srtrace;

namespace {

SimplicialComplex from_label_facets(const std::vector<std::vector<std::string>>& facets) {
  nlohmann::json doc = {{"facets", facets}};
  return parse_complex(doc.dump()).complex;
}

std::vector<std::vector<std::string>> label_facets(const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : c.facets())
    if (!f.empty()) out.push_back(c.face_labels(f));
  return out;
}

std::string dump(const Report& r) { return nlohmann::json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical trace ideals of Stanley-Reisner rings";

  static py::exception<Error> error_type(m, "SrtraceError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init(&from_label_facets), py::arg("facets"))
      .def_static("parse", [](const std::string& text) { return parse_complex(text).complex; })
      .def_static("builtin", [](const std::string& name) { return builtin(name); })
      .def_static("irrelevant", &SimplicialComplex::irrelevant)
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def_property_readonly("labels", &SimplicialComplex::labels)
      .def_property_readonly("facets", &label_facets)
      .def_property_readonly("f_vector", [](const SimplicialComplex& c) { return f_vector(c); })
      .def("is_connected", [](const SimplicialComplex& c) { return is_connected(c); })
      .def("is_normal", [](const SimplicialComplex& c) { return is_normal(c); })
      .def("is_pure", [](const SimplicialComplex& c) { return is_pure(c); })
      .def("is_pseudomanifold", [](const SimplicialComplex& c) { return is_pseudomanifold(c); })
      .def("cone_points",
           [](const SimplicialComplex& c) { return c.face_labels(cone_points(c)); })
      .def("components", [](const SimplicialComplex& c) { return connected_components(c); })
      .def("link",
           [](const SimplicialComplex& c, const std::vector<std::string>& face) {
             return link(c, face_from_labels(c, face));
           })
      .def("disjoint_union",
           [](const SimplicialComplex& a, const SimplicialComplex& b) {
             return disjoint_union(a, b);
           })
      .def("to_facet_list", [](const SimplicialComplex& c) { return to_facet_list(c); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& c) {
        return "<SimplicialComplex vertices=" + std::to_string(c.vertex_count()) +
               " facets=" + std::to_string(c.facets().size()) + " dim=" +
               std::to_string(c.dim()) + ">";
      });

  m.def("builtin_names", &builtin_names);
  m.def(
      "reduced_betti",
      [](const SimplicialComplex& c, const std::string& field) {
        return reduced_betti(c, FieldSpec::parse(field)).values();
      },
      py::arg("complex"), py::arg("field") = "q",
      "Reduced Betti numbers for i = -1 .. dim.");
  m.def(
      "analyze_json",
      [](const SimplicialComplex& c, const std::string& field, bool all_faces) {
        return dump(analyze_report(c, FieldSpec::parse(field), {all_faces}));
      },
      py::arg("complex"), py::arg("field") = "q", py::arg("all_faces") = false);
  m.def(
      "homology_json",
      [](const SimplicialComplex& c, const std::string& field) {
        return dump(homology_report(c, FieldSpec::parse(field)));
      },
      py::arg("complex"), py::arg("field") = "q");
  m.def(
      "classify_json",
      [](const SimplicialComplex& c, const std::string& field, bool all_faces) {
        py::gil_scoped_release release;
        return dump(classify_report(c, FieldSpec::parse(field), {all_faces}));
      },
      py::arg("complex"), py::arg("field") = "q", py::arg("all_faces") = false);
  m.def(
      "combine_json",
      [](const std::string& descriptors) {
        nlohmann::json doc;
        try {
          doc = nlohmann::json::parse(descriptors);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::InvalidDescriptor, e.what());
        }
        std::vector<RingDescriptor> ds;
        for (const auto& d : doc) ds.push_back(d.get<RingDescriptor>());
        return dump(combine_report(ds));
      },
      py::arg("descriptors"), "Combine a JSON array of ring descriptors.");
  m.def(
      "sweep",
      [](std::size_t max_vertices, std::size_t disconnected_max_vertices) {
        SweepOptions options;
        options.max_vertices = max_vertices;
        options.disconnected_max_vertices = disconnected_max_vertices;
        SweepSummary s;
        {
          py::gil_scoped_release release;
          s = run_sweep(options);
        }
        py::dict d;
        d["complexes"] = s.complexes;
        d["connected_normal"] = s.connected_normal;
        d["violations"] = s.violations();
        d["unknown_verdicts"] = s.unknown_verdicts;
        d["unknown_verdicts_cm"] = s.unknown_verdicts_cm;
        d["disconnected_checked"] = s.disconnected_checked;
        d["failures"] = s.failures;
        d["ok"] = s.ok();
        return d;
      },
      py::arg("max_vertices") = 5, py::arg("disconnected_max_vertices") = 6);
}
