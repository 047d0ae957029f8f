#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <qnormal/errors.hpp>
#include <qnormal/json_io.hpp>
#include <qnormal/unknot.hpp>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace qnormal;

namespace {

// Arbitrary precision crosses the boundary as Python ints via their decimal text.
py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(std::span<const Integer> v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

std::vector<Integer> from_py(const py::sequence& seq) {
  std::vector<Integer> out;
  out.reserve(seq.size());
  for (const auto& item : seq) out.push_back(parse_integer(py::str(item).cast<std::string>()));
  return out;
}

MatchingSystem system_for(const Triangulation& tri, const std::string& coords) {
  return parse_coord_kind(coords) == CoordKind::quad ? q_matching_system(tri) : standard_matching_system(tri);
}

PipelineConfig config(const std::string& coords, bool filter, bool oracle, std::size_t max_rays, unsigned threads) {
  PipelineConfig cfg;
  cfg.coords = parse_coord_kind(coords);
  cfg.filter = filter;
  cfg.oracle = oracle;
  cfg.max_rays = max_rays;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normal surface enumeration and unknot recognition";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<InvalidGluingError>(m, "InvalidGluingError", error);
  py::register_exception<IndexOutOfRangeError>(m, "IndexOutOfRangeError", error);
  py::register_exception<NonOrientableError>(m, "NonOrientableError", error);
  py::register_exception<IncompatibleSumError>(m, "IncompatibleSumError", error);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", error);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", error);
  py::register_exception<UnsupportedBoundaryError>(m, "UnsupportedBoundaryError", error);
  py::register_exception<InternalError>(m, "InternalError", error);

  py::class_<Triangulation>(m, "Triangulation")
      .def_static("parse", [](const std::string& text) { return parse_triangulation(text); }, "text"_a)
      .def_static("load", &load_triangulation, "path"_a)
      .def_property_readonly("size", &Triangulation::size)
      .def_property_readonly("orientable", &Triangulation::is_orientable)
      .def_property_readonly("closed", &Triangulation::is_closed)
      .def_property_readonly("euler_characteristic", &Triangulation::euler_characteristic)
      .def_property_readonly("edge_count", [](const Triangulation& t) { return t.edge_classes().size(); })
      .def_property_readonly("vertex_count", [](const Triangulation& t) { return t.vertex_classes().size(); })
      .def_property_readonly("interior_edge_count", &Triangulation::interior_edge_count)
      .def("boundary_json", [](const Triangulation& t) { return to_json(t.boundary()).dump(); })
      .def("with_flipped_edge", &Triangulation::with_flipped_edge, "edge_class"_a)
      .def("permuted", &permute_tetrahedra, "new_index"_a)
      .def("to_text", &Triangulation::to_text)
      .def("__len__", &Triangulation::size)
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation tets=" + std::to_string(t.size()) + ">";
      });

  m.def(
      "matching_rows",
      [](const Triangulation& tri, const std::string& coords) {
        const auto sys = system_for(tri, coords);
        py::list rows;
        for (const auto& r : sys.rows()) rows.append(to_py(r));
        return rows;
      },
      "tri"_a, "coords"_a = "quad");

  m.def(
      "enumerate",
      [](const Triangulation& tri, const std::string& coords, bool filter, std::size_t max_rays) {
        EnumerationOptions opts;
        opts.filter = filter;
        opts.max_rays = max_rays;
        const auto sys = system_for(tri, coords);
        EnumerationResult result;
        {
          py::gil_scoped_release release;
          result = enumerate_dd(sys, opts);
        }
        py::list out;
        for (const auto& v : result.vertices) out.append(to_py(v.vector));
        return out;
      },
      "tri"_a, "coords"_a = "quad", "filter"_a = true, "max_rays"_a = 200000);

  m.def(
      "enumerate_bruteforce",
      [](const Triangulation& tri, const std::string& coords, std::size_t max_columns) {
        const auto sys = system_for(tri, coords);
        EnumerationResult result;
        {
          py::gil_scoped_release release;
          result = enumerate_bruteforce(sys, max_columns);
        }
        py::list out;
        for (const auto& v : result.vertices) out.append(to_py(v.vector));
        return out;
      },
      "tri"_a, "coords"_a = "quad", "max_columns"_a = kDefaultOracleLimit);

  m.def(
      "is_admissible",
      [](const Triangulation& tri, const py::sequence& v, const std::string& coords) {
        return is_admissible(from_py(v), system_for(tri, coords)).admissible();
      },
      "tri"_a, "vector"_a, "coords"_a = "quad");

  m.def(
      "quad_to_standard",
      [](const Triangulation& tri, const py::sequence& q) {
        return to_py(quad_to_standard(QuadVector(from_py(q)), tri).entries());
      },
      "tri"_a, "quad"_a);

  m.def(
      "invariants_json",
      [](const Triangulation& tri, const py::sequence& v) {
        return to_json(invariants(realize(StandardVector(from_py(v)), tri))).dump();
      },
      "tri"_a, "standard"_a);

  m.def(
      "survey_json",
      [](const Triangulation& tri, const std::string& coords, bool filter, std::size_t max_rays, unsigned threads) {
        const auto cfg = config(coords, filter, false, max_rays, threads);
        py::gil_scoped_release release;
        return survey_json(survey(tri, cfg), cfg.coords).dump();
      },
      "tri"_a, "coords"_a = "quad", "filter"_a = true, "max_rays"_a = 200000, "threads"_a = 0);

  m.def(
      "recognize_json",
      [](const Triangulation& tri, const std::string& coords, bool filter, bool oracle, std::size_t max_rays,
         unsigned threads) {
        const auto cfg = config(coords, filter, oracle, max_rays, threads);
        py::gil_scoped_release release;
        return to_json(recognize(tri, cfg)).dump();
      },
      "tri"_a, "coords"_a = "quad", "filter"_a = true, "oracle"_a = false, "max_rays"_a = 200000,
      "threads"_a = 0);

  m.def(
      "cross_check_json",
      [](const Triangulation& tri) {
        py::gil_scoped_release release;
        return to_json(cross_check(tri)).dump();
      },
      "tri"_a);
}
