#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rectihull/io.hpp"
#include "rectihull/measure.hpp"
#include "rectihull/polar.hpp"
#include "rectihull/rectify.hpp"
#include "rectihull/serialize.hpp"

namespace py = pybind11;
using namespace rectihull;

namespace {

// nlohmann::json -> plain python objects, so every report type comes through
// as the same dict the CLI prints with --json
py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

template <typename T>
py::object as_dict(const T& value) {
  return json_to_py(nlohmann::json(value));
}

py::tuple fvector_tuple(const FVector& fv) {
  return py::make_tuple(fv.v, fv.e, fv.f);
}

}  // namespace

PYBIND11_MODULE(_rectihull, m) {
  m.doc() = "rectification of convex polygons and polyhedra";

  py::register_exception<InvalidParameter>(m, "InvalidParameter",
                                           PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInputError",
                                          PyExc_ValueError);
  py::register_exception<ValidationError>(m, "GeometryValidationError",
                                          PyExc_ValueError);
  py::register_exception<OffParseError>(m, "OffParseError", PyExc_ValueError);

  py::class_<Polygon>(m, "Polygon")
      .def(py::init([](const std::vector<std::pair<double, double>>& pts) {
             Polygon p;
             for (auto [x, y] : pts) p.vertices.push_back({x, y});
             p.validate();
             return p;
           }),
           py::arg("vertices"))
      .def_property_readonly("vertices",
                             [](const Polygon& p) {
                               std::vector<std::pair<double, double>> out;
                               for (const Vec2& v : p.vertices)
                                 out.emplace_back(v.x, v.y);
                               return out;
                             })
      .def_property_readonly("n", &Polygon::n)
      .def("area", &Polygon::area)
      .def("perimeter", &Polygon::perimeter)
      .def("__repr__", [](const Polygon& p) {
        return "Polygon(n=" + std::to_string(p.n()) + ")";
      });

  py::class_<Polyhedron>(m, "Polyhedron")
      .def(py::init([](const std::vector<std::tuple<double, double, double>>& vs,
                       const std::vector<std::vector<int>>& faces) {
             Polyhedron p;
             for (auto [x, y, z] : vs) p.vertices.push_back({x, y, z});
             p.faces = faces;
             require_valid(p);
             return p;
           }),
           py::arg("vertices"), py::arg("faces"))
      .def_property_readonly("vertices",
                             [](const Polyhedron& p) {
                               std::vector<std::tuple<double, double, double>> out;
                               for (const Vec3& v : p.vertices)
                                 out.emplace_back(v.x, v.y, v.z);
                               return out;
                             })
      .def_property_readonly("faces",
                             [](const Polyhedron& p) { return p.faces; })
      .def("fvector",
           [](const Polyhedron& p) { return fvector_tuple(p.fvector()); })
      .def("scaled", &Polyhedron::scaled, py::arg("c"))
      .def("translated",
           [](const Polyhedron& p, std::tuple<double, double, double> t) {
             auto [x, y, z] = t;
             return p.translated({x, y, z});
           },
           py::arg("t"))
      .def("__repr__", [](const Polyhedron& p) {
        return "Polyhedron" + p.fvector().str();
      });

  // seeds
  m.def("seed_polygon", &seed_polygon, py::arg("n"), py::arg("area") = 1.0);
  m.def(
      "seed_polyhedron",
      [](const std::string& name, int param) {
        return seed_polyhedron(name, param);
      },
      py::arg("name"), py::arg("param") = 0);
  m.def("seed_names", &seed_names);

  // rectification
  m.def("rectify_polygon",
        [](const Polygon& p) { return rectify_polygon(p); });
  m.def("rectify",
        [](const Polyhedron& p) { return rectify_polyhedron(p); });
  m.def("fvector_map", [](long long v, long long e, long long f) {
    return fvector_tuple(fvector_map({v, e, f}));
  });
  m.def("is_semiregular", [](const Polyhedron& p) {
    SemiregularCheck c = is_semiregular(p);
    py::dict d;
    d["semiregular"] = c.semiregular;
    d["vertex_config"] = c.vertex_config;
    d["diagnosis"] = c.diagnosis;
    return d;
  });
  m.def("iterate",
        [](const Polyhedron& p, int k) { return as_dict(iterate(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("check_disjointness", [](int max_power) {
    return as_dict(check_disjointness(max_power));
  });

  // measures
  m.def("polygon_area_closed", &polygon_area_closed);
  m.def("polygon_area_total", &polygon_area_total);
  m.def("polygon_side_closed", &polygon_side_closed);
  m.def("polygon_perimeter_total", &polygon_perimeter_total);
  m.def("polygon_series",
        [](int n, int k) { return as_dict(polygon_series(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("volume", [](const Polyhedron& p) { return volume(p); });
  m.def("surface_area", [](const Polyhedron& p) { return surface_area(p); });
  m.def("measure", [](const Polyhedron& p) { return as_dict(measure(p)); });
  m.def("volume_by_cap_decomposition",
        [](const Polyhedron& p) { return volume_by_cap_decomposition(p); });
  m.def("prism_rect_volume_report",
        [](int n) { return as_dict(prism_rect_volume_report(n)); });

  // polarity
  m.def("polar_dual", [](const Polyhedron& p) { return polar_dual(p); });
  m.def("mahler_volume", [](const Polyhedron& p) { return mahler_volume(p); });
  m.def("fit_lambda_similarity", [](const Polyhedron& a, const Polyhedron& b) {
    return as_dict(fit_lambda_similarity(a, b));
  });
  m.def("probe_conjecture3",
        [](const Polyhedron& p) { return as_dict(probe_conjecture3(p)); });
  m.def("check_lemma1",
        [](const Polyhedron& p) { return as_dict(check_lemma1(p)); });

  // io
  m.def("read_off", &read_off_file, py::arg("path"));
  m.def("write_off",
        [](const std::string& path, const Polyhedron& p) {
          write_off_file(path, canonicalize(p));
        },
        py::arg("path"), py::arg("p"));
  m.def("write_obj",
        [](const std::string& path, const Polyhedron& p) {
          write_obj_file(path, canonicalize(p));
        },
        py::arg("path"), py::arg("p"));
  m.def("canonicalize",
        [](const Polyhedron& p) { return canonicalize(p); });
  m.def("off_string", [](const Polyhedron& p) {
    std::ostringstream ss;
    write_off(ss, canonicalize(p));
    return ss.str();
  });
}
