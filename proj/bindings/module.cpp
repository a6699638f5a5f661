#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zstab/fibration.hpp"
#include "zstab/grr.hpp"
#include "zstab/io.hpp"
#include "zstab/pluecker.hpp"
#include "zstab/selftest.hpp"
#include "zstab/sl2.hpp"
#include "zstab/stability.hpp"
#include "zstab/surface.hpp"

namespace py = pybind11;
using namespace zstab;

namespace {

// Values cross the boundary as exact strings; Python callers can feed them
// to fractions.Fraction.
std::string rat_out(const Rat& r) { return to_string(r); }

// pybind11 cannot hold shared_ptr<const T>; a tiny handle keeps the core
// type immutable.
struct PyRing {
  RingPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact central charges, asymptotic Z-stability, wall-crossing, "
            "SL(2,C) calculus and related invariants";

  py::register_exception<Error>(m, "ZstabError");

  py::class_<PyRing>(m, "Ring")
      .def_static("from_json",
                  [](const std::string& text) {
                    return PyRing{io::parse_ring(io::Json::parse(text))};
                  })
      .def_static("cp2", [] { return PyRing{cp2_ring()}; })
      .def_property_readonly(
          "dimension", [](const PyRing& r) { return r.ptr->dimension(); });

  py::class_<GradedClass>(m, "GradedClass")
      .def("__eq__", [](const GradedClass& a, const GradedClass& b) { return a == b; })
      .def("__mul__", [](const GradedClass& a, const GradedClass& b) { return a * b; })
      .def("__add__", [](const GradedClass& a, const GradedClass& b) { return a + b; })
      .def("coefficients", [](const GradedClass& c) {
        std::map<std::string, std::string> out;
        for (const auto& [mon, v] : c.coefficients())
          out[c.ring()->monomial_name(mon)] = rat_out(v);
        return out;
      });

  m.def("parse_class", [](const PyRing& ring, const std::string& text) {
    return io::parse_class(ring.ptr, text);
  });
  m.def("integrate", [](const GradedClass& c) { return rat_out(integrate(c)); });
  m.def("series_sqrt", &series_sqrt);
  m.def("exp_class", &exp_class);
  m.def("todd_class", [](const std::vector<GradedClass>& chern) {
    return char_class(CharClassKind::Todd, Rat(1), chern);
  });
  m.def("chern_character", [](const std::string& rank,
                              const std::vector<GradedClass>& chern) {
    return char_class(CharClassKind::ChernCharacter, parse_rat(rank), chern);
  });

  py::class_<BundleData>(m, "Bundle")
      .def_static("from_chern",
                  [](const PyRing& ring, const std::string& rank,
                     const std::vector<GradedClass>& chern) {
                    return BundleData::from_chern(ring.ptr, parse_rat(rank), chern);
                  })
      .def_static("from_character", &BundleData::from_character)
      .def("dual", &BundleData::dual)
      .def_property_readonly("rank",
                             [](const BundleData& b) { return rat_out(b.rank()); })
      .def_property_readonly("character",
                             [](const BundleData& b) { return b.chern_character; });

  py::class_<ChargeSpec>(m, "ChargeSpec")
      .def_readonly("weak_validated", &ChargeSpec::weak_validated);
  m.def("preset_charge",
        [](const std::string& name, const GradedClass& omega,
           const GradedClass& b_field, const std::vector<GradedClass>& tangent) {
          return preset_charge(name, omega, b_field, tangent);
        },
        py::arg("name"), py::arg("omega"), py::arg("b_field"),
        py::arg("tangent") = std::vector<GradedClass>{});

  py::class_<ChargePolynomial>(m, "ChargePolynomial")
      .def("coefficients", [](const ChargePolynomial& z) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& c : z.coefficients())
          out.emplace_back(rat_out(c.re), rat_out(c.im));
        return out;
      })
      .def("__eq__", [](const ChargePolynomial& a, const ChargePolynomial& b) {
        return a == b;
      });
  m.def("central_charge",
        [](const ChargeSpec& spec, const BundleData& e,
           std::optional<GradedClass> over) {
          return central_charge(spec, e, over);
        },
        py::arg("spec"), py::arg("bundle"), py::arg("over") = std::nullopt);

  m.def("asym_compare", [](const ChargePolynomial& zf, const ChargePolynomial& ze) {
    auto v = asym_compare(zf, ze);
    py::dict out;
    out["ordering"] = to_string(v.ordering);
    out["witness"] = rat_out(v.witness_coefficient);
    if (v.discrepancy_order) out["discrepancy_order"] = *v.discrepancy_order;
    else out["discrepancy_order"] = py::none();
    return out;
  });

  m.def("surface_report",
        [](const ChargeSpec& spec, const BundleData& l) {
          auto rep = surface_report(spec, l, {}, {});
          py::dict out;
          out["a"] = rat_out(rep.reduction.a);
          out["beta"] = rat_out(rep.reduction.beta_coeff);
          out["gamma"] = rat_out(rep.reduction.gamma_coeff);
          out["discriminant"] = rat_out(rep.reduction.discriminant);
          out["verdict"] = to_string(rep.hypothesis);
          return out;
        });

  // SL(2,C) calculus over the string grammar.
  m.def("sl2_tensor", [](const std::string& a, const std::string& b) {
    return tensor(parse_rep(a), parse_rep(b)).str();
  });
  m.def("sl2_sym2", [](const std::string& a) { return sym2(parse_rep(a)).str(); });
  m.def("sl2_wedge2", [](const std::string& a) { return wedge2(parse_rep(a)).str(); });
  m.def("sl2_deformation", [](const std::string& model) {
    DeformationModel dm;
    if (model == "v22") dm = DeformationModel::V22;
    else if (model == "v5") dm = DeformationModel::V5;
    else if (model == "v14") dm = DeformationModel::V14;
    else throw Error("unknown deformation model '" + model + "'");
    auto rep = deformation_space(dm);
    return py::make_tuple(rep.moduli_tangent.str(), rep.dimension);
  });

  m.def("pluecker_verify", [](unsigned samples, std::uint64_t seed) {
    PlueckerModel model = build_model();
    auto sample = generic_rank(model, samples, seed);
    py::dict out;
    out["basis_rank"] = model.basis.joint_rank;
    out["generic_rank"] = sample.max_rank;
    out["samples"] = sample.valid_samples;
    out["seed"] = sample.seed;
    py::list fps;
    for (const auto& fp : fixed_point_weights(model)) {
      py::dict f;
      f["name"] = fp.name;
      f["weight"] = fp.cstar_weight;
      f["jacobian_rank"] = fp.jacobian_rank;
      fps.append(f);
    }
    out["fixed_points"] = fps;
    return out;
  }, py::arg("samples") = 50, py::arg("seed") = 0x5eed);

  m.def("b_constant", [](unsigned rE, unsigned rF) {
    return rat_out(b_constant(rE, rF));
  });
  m.def("a_identity_check", [](unsigned rE, unsigned rF) {
    auto r = a_identity_check({1, rE, rF});
    py::dict out;
    out["A"] = r.calculus.str();
    out["closed_form"] = r.closed_form.str();
    out["B"] = rat_out(r.b);
    out["match"] = r.match;
    out["proportional"] = r.proportional;
    if (r.proportional) out["ratio"] = rat_out(r.ratio);
    out["vanishes_on_equal_slopes"] = r.vanishes_on_equal_slopes;
    return out;
  });

  m.def("selftest", [](const std::string& data_dir) {
    auto results = run_selftest(data_dir);
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.id;
      d["description"] = r.description;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  });
}
