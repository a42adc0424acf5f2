// Python bindings for the poskit core. Exact values cross the boundary as
// Python ints and fractions.Fraction; floats are rejected.

#include "poskit/blowup.hpp"
#include "poskit/bundle.hpp"
#include "poskit/cone.hpp"
#include "poskit/errors.hpp"
#include "poskit/flag.hpp"
#include "poskit/json_io.hpp"
#include "poskit/model.hpp"
#include "poskit/toric.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace poskit;

namespace {

Int int_from_py(py::handle obj) {
  if (!py::isinstance<py::int_>(obj))
    throw InputError("expected an integer, got " +
                     std::string(py::str(obj.get_type().attr("__name__"))));
  return Int(std::string(py::str(obj)));
}

py::object int_to_py(const Int& x) {
  PyObject* value = PyLong_FromString(x.str().c_str(), nullptr, 10);
  if (value == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(value);
}

Rat rat_from_py(py::handle obj) {
  if (py::isinstance<py::float_>(obj))
    throw InputError("floats are not exact; pass an int, a fractions.Fraction, or 'p/q'");
  return parse_rational(std::string(py::str(obj)));
}

py::object rat_to_py(const Rat& x) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rat_to_string(x));
}

IVec ivec_from_py(const py::sequence& seq) {
  IVec out;
  out.reserve(py::len(seq));
  for (py::handle item : seq) out.push_back(int_from_py(item));
  return out;
}

py::list ivec_to_py(const IVec& v) {
  py::list out;
  for (const Int& x : v) out.append(int_to_py(x));
  return out;
}

QVec qvec_from_py(const py::sequence& seq) {
  QVec out;
  out.reserve(py::len(seq));
  for (py::handle item : seq) out.push_back(rat_from_py(item));
  return out;
}

py::list qvec_to_py(const QVec& v) {
  py::list out;
  for (const Rat& x : v) out.append(rat_to_py(x));
  return out;
}

DivisorClass divisor_from_py(const py::sequence& seq) { return {ivec_from_py(seq)}; }

SplittingData splitting_from_py(int rank, const py::sequence& c1, const py::dict& per_curve) {
  SplittingData s;
  s.rank = rank;
  s.c1 = ivec_from_py(c1);
  for (const auto& item : per_curve)
    s.per_curve[py::cast<std::string>(item.first)] =
        ivec_from_py(py::cast<py::sequence>(item.second));
  return normalized(std::move(s));
}

py::dict report_to_py_checks(const ValidationReport& r) {
  py::dict checks;
  for (const auto& [name, ok] : r.checks) checks[py::str(name)] = ok;
  return checks;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact positivity toolkit: nef/ample tests, Seshadri constants, and\n"
            "nef/Mori cones for simple G-variety models and complete smooth fans.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<VarietyModel>(m, "VarietyModel")
      .def_readonly("name", &VarietyModel::name)
      .def_readonly("rank", &VarietyModel::rank)
      .def_readonly("divisor_labels", &VarietyModel::divisor_labels)
      .def_property_readonly("curve_names",
                             [](const VarietyModel& model) {
                               std::vector<std::string> names;
                               for (const CurveRecord& c : model.curves) names.push_back(c.name);
                               return names;
                             })
      .def("curve_class",
           [](const VarietyModel& model, const std::string& name) {
             return ivec_to_py(find_curve(model, name).class_vector);
           })
      .def("to_json", [](const VarietyModel& model) { return model_to_json(model).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) { return model_from_json(parse_json_text(text)); })
      .def("__repr__", [](const VarietyModel& model) {
        return "<VarietyModel '" + model.name + "' rank " + std::to_string(model.rank) + ">";
      });

  py::class_<Fan>(m, "Fan")
      .def(py::init([](int dim, const py::sequence& rays, const py::sequence& max_cones) {
             Fan fan;
             fan.dim = dim;
             for (py::handle ray : rays) fan.rays.push_back(ivec_from_py(py::cast<py::sequence>(ray)));
             for (py::handle cone : max_cones)
               fan.max_cones.push_back(py::cast<std::vector<int>>(cone));
             return fan;
           }),
           py::arg("dim"), py::arg("rays"), py::arg("max_cones"))
      .def_readonly("dim", &Fan::dim)
      .def_property_readonly("rays",
                             [](const Fan& fan) {
                               py::list out;
                               for (const IVec& ray : fan.rays) out.append(ivec_to_py(ray));
                               return out;
                             })
      .def_readonly("max_cones", &Fan::max_cones)
      .def("to_json", [](const Fan& fan) { return fan_to_json(fan).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) { return fan_from_json(parse_json_text(text)); })
      .def("__repr__", [](const Fan& fan) {
        return "<Fan dim " + std::to_string(fan.dim) + ", " + std::to_string(fan.rays.size()) +
               " rays, " + std::to_string(fan.max_cones.size()) + " maximal cones>";
      });

  py::class_<Wall>(m, "Wall")
      .def_readonly("ray_indices", &Wall::ray_indices)
      .def_readonly("cone_pair", &Wall::cone_pair)
      .def_readonly("opposite_rays", &Wall::opposite_rays)
      .def_property_readonly("relation",
                             [](const Wall& w) { return ivec_to_py(w.relation_coeffs); })
      .def_property_readonly("id", [](const Wall& w) { return wall_id(w); })
      .def("__repr__", [](const Wall& w) { return "<Wall " + wall_id(w) + ">"; });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_property_readonly("ok", [](const ValidationReport& r) { return r.pass; })
      .def_property_readonly("checks", &report_to_py_checks)
      .def_property_readonly("issues",
                             [](const ValidationReport& r) {
                               py::list out;
                               for (const ValidationIssue& issue : r.issues)
                                 out.append(py::make_tuple(issue.check, issue.detail));
                               return out;
                             })
      .def("__bool__", [](const ValidationReport& r) { return r.pass; })
      .def("__repr__", [](const ValidationReport& r) {
        return std::string("<ValidationReport ") + (r.pass ? "pass" : "fail") + ", " +
               std::to_string(r.issues.size()) + " issues>";
      });

  py::class_<RationalCone>(m, "RationalCone")
      .def(py::init([](int dim, const py::sequence& generators) {
             RationalCone c;
             c.ambient_dim = dim;
             for (py::handle g : generators)
               c.generators.push_back(qvec_from_py(py::cast<py::sequence>(g)));
             validate_cone(c);
             return c;
           }),
           py::arg("dim"), py::arg("generators"))
      .def_property_readonly("dim", [](const RationalCone& c) { return c.ambient_dim; })
      .def_property_readonly("generators",
                             [](const RationalCone& c) {
                               py::list out;
                               for (const QVec& g : c.generators) out.append(qvec_to_py(g));
                               return out;
                             })
      .def("dual", [](const RationalCone& c, int bound) { return dual_cone(c, bound); },
           py::arg("dim_bound") = kDefaultConeDimBound)
      .def("contains",
           [](const RationalCone& c, const py::sequence& v, int bound) {
             return contains(c, qvec_from_py(v), bound);
           },
           py::arg("v"), py::arg("dim_bound") = kDefaultConeDimBound)
      .def("equal",
           [](const RationalCone& a, const RationalCone& b, int bound) {
             return cones_equal(a, b, bound);
           },
           py::arg("other"), py::arg("dim_bound") = kDefaultConeDimBound)
      .def("to_json", [](const RationalCone& c) { return cone_to_json(c).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) { return cone_from_json(parse_json_text(text)); })
      .def("__repr__", [](const RationalCone& c) {
        return "<RationalCone dim " + std::to_string(c.ambient_dim) + ", " +
               std::to_string(c.generators.size()) + " generators>";
      });

  py::class_<BlowupModel>(m, "BlowupModel")
      .def_readonly("base", &BlowupModel::base)
      .def_property_readonly("pairing",
                             [](const BlowupModel& bm) {
                               py::list rows;
                               for (const IVec& row : bm.pairing) rows.append(ivec_to_py(row));
                               return rows;
                             })
      .def("__repr__", [](const BlowupModel& bm) {
        return "<BlowupModel of '" + bm.base.name + "'>";
      });

  py::class_<SplittingData>(m, "SplittingData")
      .def(py::init(&splitting_from_py), py::arg("rank"), py::arg("c1"), py::arg("per_curve"))
      .def_readonly("rank", &SplittingData::rank)
      .def_property_readonly("c1", [](const SplittingData& s) { return ivec_to_py(s.c1); })
      .def_property_readonly("per_curve",
                             [](const SplittingData& s) {
                               py::dict out;
                               for (const auto& [name, degrees] : s.per_curve)
                                 out[py::str(name)] = ivec_to_py(degrees);
                               return out;
                             })
      .def("to_json", [](const SplittingData& s) { return splitting_to_json(s).dump(2); })
      .def_static("from_json", [](const std::string& text) {
        return splitting_from_json(parse_json_text(text));
      });

  // model builders and line-bundle operations
  m.def("build_flag_model",
        [](const std::string& type) { return build_flag_model(parse_cartan_type(type)); },
        py::arg("cartan_type"), "Model of the full flag variety G/B, e.g. build_flag_model('A3').");
  m.def("build_projective_space_model", &build_projective_space_model, py::arg("n"));
  m.def("cartan_matrix",
        [](const std::string& type) {
          py::list rows;
          for (const IVec& row : cartan_matrix(parse_cartan_type(type))) rows.append(ivec_to_py(row));
          return rows;
        },
        py::arg("cartan_type"));
  m.def("intersect",
        [](const VarietyModel& model, const py::sequence& l, const std::string& curve) {
          return int_to_py(intersect(model, divisor_from_py(l), find_curve(model, curve)));
        },
        py::arg("model"), py::arg("L"), py::arg("curve"));
  m.def("nef_check_linebundle",
        [](const VarietyModel& model, const py::sequence& l) {
          return nef_check_linebundle(model, divisor_from_py(l));
        },
        py::arg("model"), py::arg("L"));
  m.def("ample_check_linebundle",
        [](const VarietyModel& model, const py::sequence& l) {
          return ample_check_linebundle(model, divisor_from_py(l));
        },
        py::arg("model"), py::arg("L"));
  m.def("seshadri_line",
        [](const VarietyModel& model, const py::sequence& l) {
          return rat_to_py(seshadri_line(model, divisor_from_py(l)));
        },
        py::arg("model"), py::arg("L"));

  // toric operations
  m.def("validate_fan", &validate_fan, py::arg("fan"));
  m.def("enumerate_walls", &enumerate_walls, py::arg("fan"));
  m.def("divisor_degree_on_wall",
        [](const Fan& fan, const py::sequence& d, const Wall& w) {
          return int_to_py(divisor_degree_on_wall(fan, {ivec_from_py(d)}, w));
        },
        py::arg("fan"), py::arg("D"), py::arg("wall"));
  m.def("nef_check_toric",
        [](const Fan& fan, const py::sequence& d) {
          return nef_check_toric(fan, {ivec_from_py(d)});
        },
        py::arg("fan"), py::arg("D"));
  m.def("seshadri_toric_fixed_point",
        [](const Fan& fan, const py::sequence& d, int sigma) {
          return rat_to_py(seshadri_toric_fixed_point(fan, {ivec_from_py(d)}, sigma));
        },
        py::arg("fan"), py::arg("D"), py::arg("cone"));

  // cone calculus (also available as methods on RationalCone)
  m.def("dual_cone", [](const RationalCone& c, int bound) { return dual_cone(c, bound); },
        py::arg("cone"), py::arg("dim_bound") = kDefaultConeDimBound);
  m.def("cone_contains",
        [](const RationalCone& c, const py::sequence& v, int bound) {
          return contains(c, qvec_from_py(v), bound);
        },
        py::arg("cone"), py::arg("v"), py::arg("dim_bound") = kDefaultConeDimBound);
  m.def("cones_equal",
        [](const RationalCone& a, const RationalCone& b, int bound) {
          return cones_equal(a, b, bound);
        },
        py::arg("a"), py::arg("b"), py::arg("dim_bound") = kDefaultConeDimBound);

  // blow-up at the sink
  m.def("build_blowup", &build_blowup, py::arg("model"));
  m.def("blowup_nef_generators", &blowup_nef_generators, py::arg("blowup"));
  m.def("blowup_mori_generators", &blowup_mori_generators, py::arg("blowup"));
  m.def("pair_classes",
        [](const BlowupModel& bm, const py::sequence& d, const py::sequence& c) {
          return rat_to_py(pair_classes(bm, qvec_from_py(d), qvec_from_py(c)));
        },
        py::arg("blowup"), py::arg("divisor_coords"), py::arg("curve_coords"));
  m.def("is_nef_on_blowup",
        [](const BlowupModel& bm, const py::sequence& b, py::handle c) {
          return is_nef_on_blowup(bm, qvec_from_py(b), rat_from_py(c));
        },
        py::arg("blowup"), py::arg("b"), py::arg("c"));
  m.def("seshadri_via_blowup",
        [](const BlowupModel& bm, const py::sequence& l) {
          return rat_to_py(seshadri_via_blowup(bm, divisor_from_py(l)));
        },
        py::arg("blowup"), py::arg("L"));

  // bundles from splitting data
  m.def("validate_splitting",
        [](const VarietyModel& model, const SplittingData& s) {
          return validate_splitting(model, s);
        },
        py::arg("model"), py::arg("splitting"));
  m.def("validate_splitting",
        [](const Fan& fan, const SplittingData& s) { return validate_splitting(fan, s); },
        py::arg("fan"), py::arg("splitting"));
  m.def("nef_check_bundle",
        [](const VarietyModel& model, const SplittingData& s) {
          return nef_check_bundle(model, s);
        },
        py::arg("model"), py::arg("splitting"));
  m.def("nef_check_bundle",
        [](const Fan& fan, const SplittingData& s) { return nef_check_bundle(fan, s); },
        py::arg("fan"), py::arg("splitting"));
  m.def("ample_check_bundle",
        [](const VarietyModel& model, const SplittingData& s) {
          return ample_check_bundle(model, s);
        },
        py::arg("model"), py::arg("splitting"));
  m.def("ample_check_bundle",
        [](const Fan& fan, const SplittingData& s) { return ample_check_bundle(fan, s); },
        py::arg("fan"), py::arg("splitting"));
  m.def("seshadri_bundle",
        [](const VarietyModel& model, const SplittingData& s) {
          return rat_to_py(seshadri_bundle(model, s));
        },
        py::arg("model"), py::arg("splitting"));
  m.def("seshadri_bundle",
        [](const Fan& fan, const SplittingData& s, int sigma) {
          return rat_to_py(seshadri_bundle(fan, s, sigma));
        },
        py::arg("fan"), py::arg("splitting"), py::arg("cone"));

  m.attr("DEFAULT_CONE_DIM_BOUND") = kDefaultConeDimBound;
#ifdef POSKIT_VERSION
  m.attr("__version__") = POSKIT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
