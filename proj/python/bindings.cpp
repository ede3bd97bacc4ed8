#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffdist/acceptance.hpp"
#include "ffdist/experiments.hpp"
#include "ffdist/pair_spectrum.hpp"
#include "ffdist/rotation_energy.hpp"
#include "ffdist/spectral.hpp"

namespace py = pybind11;
using namespace ffdist;

namespace {

SplitPointSet make_split_set(std::uint64_t q, int k, int l, const std::vector<Vector>& points) {
  return SplitPointSet(PointSet(PrimeField(q), k + l, points), k, l);
}

std::vector<std::vector<std::uint64_t>> spectrum_rows(const PairSpectrum& s) {
  std::vector<std::vector<std::uint64_t>> rows(s.q);
  for (Scalar a = 0; a < s.q; ++a) {
    rows[a].assign(s.s.begin() + std::size_t{a} * s.q, s.s.begin() + std::size_t{a + 1} * s.q);
  }
  return rows;
}

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-parameter distance sets over prime fields: spectra, bounds and certificates.";

  py::class_<PrimeField>(m, "PrimeField")
      .def(py::init<std::uint64_t>(), py::arg("q"))
      .def_property_readonly("q", &PrimeField::q)
      .def_property_readonly("q_mod_4", &PrimeField::q_mod_4)
      .def("chi", [](const PrimeField& f, Scalar t) { return f.chi(f.reduce(t)); })
      .def("__repr__", [](const PrimeField& f) { return "PrimeField(" + std::to_string(f.q()) + ")"; });

  py::class_<Rotation>(m, "Rotation")
      .def(py::init<Scalar, Scalar>(), py::arg("a"), py::arg("b"))
      .def_readonly("a", &Rotation::a)
      .def_readonly("b", &Rotation::b)
      .def(py::self == py::self)
      .def("__repr__", [](const Rotation& r) {
        return "Rotation(" + std::to_string(r.a) + ", " + std::to_string(r.b) + ")";
      });

  py::class_<SplitPointSet>(m, "SplitPointSet")
      .def(py::init(&make_split_set), py::arg("q"), py::arg("k"), py::arg("l"), py::arg("points"))
      .def_property_readonly("q", [](const SplitPointSet& s) { return s.field().q(); })
      .def_property_readonly("k", &SplitPointSet::k)
      .def_property_readonly("l", &SplitPointSet::l)
      .def("points", [](const SplitPointSet& s) { return s.points().points(); })
      .def("__len__", &SplitPointSet::size);

  m.def("quadratic_character", [](const PrimeField& f, std::int64_t t) { return quadratic_character(f, t); });
  m.def("enumerate_so2", &enumerate_so2);
  m.def("rotation_apply", [](const PrimeField& f, Rotation r, std::pair<Scalar, Scalar> v) {
    const Vec2 out = rotation_apply(f, r, {f.reduce(v.first), f.reduce(v.second)});
    return std::pair{out.x, out.y};
  });
  m.def("so2_orbit_check", [](const PrimeField& f) { return so2_orbit_check(f).pass; });

  m.def("norm", [](const PrimeField& f, const Vector& v) { return norm(f, v); });
  m.def("enumerate_sphere", [](const PrimeField& f, int d, Scalar t) { return enumerate_sphere(f, d, t).points; });
  m.def("norm_fiber_sizes", &norm_fiber_sizes);

  m.def("sphere_transform", [](const PrimeField& f, int d, Scalar t) { return sphere_transform(f, d, t).coeffs; });
  m.def("verify_kloosterman", [](const PrimeField& f, int d) {
    const auto r = verify_kloosterman(f, d);
    return py::dict(py::arg("pass_") = r.pass, py::arg("max_ratio") = r.max_ratio,
                    py::arg("t") = r.argmax_t, py::arg("m") = r.argmax_m);
  });

  m.def("distance_set", [](std::uint64_t q, int d, const std::vector<Vector>& pts) {
    return distance_set(PointSet(PrimeField(q), d, pts));
  });
  m.def("pair_spectrum", [](const SplitPointSet& e, const SplitPointSet& f, const std::string& method) {
    if (method == "naive") return spectrum_rows(pair_spectrum_naive(e, f));
    if (method == "fast") return spectrum_rows(pair_spectrum_fast(e, f));
    throw py::value_error("method must be 'fast' or 'naive'");
  }, py::arg("e"), py::arg("f"), py::arg("method") = "fast");
  m.def("b_set", [](const SplitPointSet& e, const SplitPointSet& f) { return b_set(pair_spectrum_fast(e, f)); });
  m.def("discrepancy_report", [](const SplitPointSet& e, const SplitPointSet& f) {
    return from_json(to_json(discrepancy_report(e, f)));
  });
  m.def("theorem1_check", [](const SplitPointSet& e, const SplitPointSet& f, std::uint64_t c) {
    const auto r = theorem1_check(e, f, c);
    return py::dict(py::arg("threshold_met") = r.threshold_met, py::arg("surjective") = r.surjective,
                    py::arg("holds") = r.holds);
  }, py::arg("e"), py::arg("f"), py::arg("constant") = kSurjectivityConstant);
  m.def("cs_lower_bound", [](const SplitPointSet& e, const SplitPointSet& f) {
    return to_string(cs_lower_bound(e, f));
  });
  m.def("mixed_zero_mass", [](const SplitPointSet& e) {
    const auto r = mixed_zero_mass(e);
    return py::dict(py::arg("exact") = to_string(r.exact), py::arg("bound") = to_string(r.bound),
                    py::arg("spectral") = r.spectral, py::arg("within_bound") = r.within_bound,
                    py::arg("saturated") = r.saturated);
  });

  m.def("energy_chain_check", [](const SplitPointSet& e, const SplitPointSet& f) {
    return from_json(to_json(energy_chain_check(e, f)));
  });
  m.def("circle_energy", [](const PrimeField& f, Scalar a) {
    const auto r = circle_energy(f, a);
    return py::dict(py::arg("size") = r.sphere_size, py::arg("energy") = r.energy, py::arg("bound") = r.bound);
  });
  m.def("theorem2_bound", [](const SplitPointSet& e, const SplitPointSet& f, double c) {
    return from_json(to_json(theorem2_bound(e, f, c)));
  });
  m.def("remark_sharpness_scan", [](std::uint64_t p, std::uint64_t len) {
    const auto r = remark_sharpness_scan(p, len);
    return py::dict(py::arg("size") = r.set_size, py::arg("b_size") = r.b_size,
                    py::arg("strip_distances") = r.strip_distances, py::arg("matches") = r.matches);
  });

  m.def("run_suite", [](const std::string& suite, std::uint64_t q, int k, int l, const std::string& generator,
                        double density, std::uint64_t seed, double constant_c) {
    ExperimentConfig cfg;
    cfg.q = q;
    cfg.k = k;
    cfg.l = l;
    cfg.generator = parse_generator(generator);
    cfg.density = density;
    cfg.seed = seed;
    cfg.constant_c = constant_c;
    return from_json(run_suite(suite, cfg).to_json());
  }, py::arg("suite"), py::arg("q") = 7, py::arg("k") = 2, py::arg("l") = 2, py::arg("generator") = "bernoulli",
     py::arg("density") = 0.5, py::arg("seed") = 1, py::arg("constant_c") = 10.0);

  py::register_exception<PrecisionError>(m, "PrecisionError");
}
