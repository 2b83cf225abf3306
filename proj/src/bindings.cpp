// bindings.cpp — Python module exposing the core operations: closure and
// classification, witness bounds, the numerical estimator, and the
// standalone oracles. Matrices cross the boundary as complex numpy arrays.

#include "gapforge/estimator.hpp"
#include "gapforge/liealg.hpp"
#include "gapforge/repkit.hpp"
#include "gapforge/report.hpp"
#include "gapforge/witness.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

gapforge::lie::LieAlgebraBasis closure_from(const std::vector<gapforge::Matrix>& generators,
                                            double tol) {
    return gapforge::lie::bracket_closure(generators, tol);
}

py::dict classify_py(const std::vector<gapforge::Matrix>& generators, int trials,
                     std::uint64_t seed) {
    const gapforge::lie::LieAlgebraBasis basis = closure_from(generators, 1e-9);
    const gapforge::lie::RepresentationProfile profile =
        gapforge::lie::classify(basis, trials, seed);
    py::dict out;
    out["algebra_dim"] = profile.algebra_dim;
    out["orbit_tangent_dim"] = profile.orbit_tangent_dim;
    out["transitive"] = profile.transitive;
    out["complex_irreducible"] = profile.complex_irreducible;
    out["bilinear_type"] = gapforge::lie::to_string(profile.bilinear_type);
    out["realification_reducible"] = profile.realification_reducible;
    return out;
}

py::dict estimate_py(const std::vector<gapforge::Matrix>& generators, std::uint64_t seed,
                     int starts, int max_iters) {
    gapforge::est::OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.starts = starts;
    cfg.max_iters = max_iters;
    const gapforge::lie::LieAlgebraBasis basis = closure_from(generators, 1e-9);
    const gapforge::est::DiameterEstimate out = gapforge::est::estimate_D(basis, cfg);
    py::dict d;
    d["D_est"] = out.D_est;
    d["M_est"] = out.M_est;
    d["R_est"] = out.R_est;
    d["X"] = out.X;
    d["Y"] = out.Y;
    d["converged"] = out.converged;
    d["evaluations"] = out.evaluations;
    return d;
}

py::dict sup_overlap_py(const std::vector<gapforge::Matrix>& generators, const gapforge::Vector& x,
                        const gapforge::Vector& y, std::uint64_t seed, int starts) {
    gapforge::est::OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.starts = starts;
    const gapforge::lie::LieAlgebraBasis basis = closure_from(generators, 1e-9);
    const gapforge::est::OverlapResult out = gapforge::est::sup_overlap(basis, x, y, cfg);
    py::dict d;
    d["abs_max"] = out.abs_max;
    d["re_max"] = out.re_max;
    d["converged"] = out.converged;
    d["evaluations"] = out.evaluations;
    return d;
}

std::string analyze_file_py(const std::string& path, std::uint64_t seed, int starts, bool normalize,
                            bool skip_estimate) {
    const gapforge::LoadedSystem loaded = gapforge::load_system(path, normalize);
    gapforge::est::OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.starts = starts;
    gapforge::AnalyzeOptions options;
    options.normalize = normalize;
    options.skip_estimate = skip_estimate;
    options.load_notes = loaded.notes;
    const gapforge::GapReport report = gapforge::analyze(loaded.system, cfg, options);
    return gapforge::report_to_json(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "certified and numerical gap analysis for bilinear control systems";

    m.def("closure_dim",
          [](const std::vector<gapforge::Matrix>& generators, double tol) {
              return closure_from(generators, tol).dim();
          },
          py::arg("generators"), py::arg("tol") = 1e-9,
          "dimension of the real Lie algebra generated by skew-Hermitian matrices");

    m.def("is_transitive",
          [](const std::vector<gapforge::Matrix>& generators, int trials, std::uint64_t seed) {
              return gapforge::lie::is_transitive(closure_from(generators, 1e-9), trials, seed);
          },
          py::arg("generators"), py::arg("trials") = 4, py::arg("seed") = 0,
          "whether the generated group acts transitively on the unit sphere");

    m.def("classify", &classify_py, py::arg("generators"), py::arg("trials") = 4,
          py::arg("seed") = 0, "closure dimension, irreducibility, and bilinear invariants");

    m.def("estimate_diameter", &estimate_py, py::arg("generators"), py::arg("seed") = 0,
          py::arg("starts") = 32, py::arg("max_iters") = 500,
          "numerical sup-inf estimate of the orbit-space diameter");

    m.def("sup_overlap", &sup_overlap_py, py::arg("generators"), py::arg("x"), py::arg("y"),
          py::arg("seed") = 0, py::arg("starts") = 32,
          "maximize |<g x, y>| and Re<g x, y> over the generated group");

    m.def("analyze_file", &analyze_file_py, py::arg("path"), py::arg("seed") = 0,
          py::arg("starts") = 32, py::arg("normalize") = false, py::arg("skip_estimate") = false,
          "full analysis of a system JSON file; returns the report as a JSON string");

    m.def("diameter_bound_from_overlap",
          [](double lam) {
              const std::optional<double> b = gapforge::witness::bound_from_M(lam);
              return b ? py::object(py::float_(*b)) : py::object(py::none());
          },
          py::arg("lam"), "certified diameter lower bound from an overlap cap, None when lam >= 1");

    m.def("time_bound_from_diameter", &gapforge::witness::time_bound_from_D, py::arg("delta"),
          "certified minimum-time lower bound from a diameter lower bound");

    m.def("det_sum_oracle",
          [](int k, long samples, int grid, std::uint64_t seed) {
              const gapforge::witness::DetSumStats s =
                  gapforge::witness::det_sum_oracle(k, samples, grid, seed);
              return py::make_tuple(s.sampled_max, s.grid_max);
          },
          py::arg("k"), py::arg("samples") = 100000, py::arg("grid") = 101, py::arg("seed") = 0,
          "(sampled_max, grid_max) of the two-minor determinant sum over unit-row matrices");

    m.def("tensor_overlap_oracle", &gapforge::witness::tensor_overlap_oracle, py::arg("p"),
          py::arg("q"), py::arg("samples") = 100000, py::arg("seed") = 0,
          "sampled maximum overlap between a balanced state and decomposable tensors");

    m.def("su_basis", &gapforge::rep::su_standard, py::arg("n"),
          "orthonormal skew-Hermitian traceless basis, n^2 - 1 elements");

    m.def("so_basis", &gapforge::rep::so_embedded, py::arg("n"),
          "real antisymmetric generators E_ij - E_ji embedded as complex matrices");

    m.def("wedge_basis",
          [](int n, int k) {
              std::vector<gapforge::Matrix> out;
              for (const gapforge::Matrix& l : gapforge::rep::su_standard(n))
                  out.push_back(gapforge::rep::wedge_lift_algebra(l, k));
              return out;
          },
          py::arg("n"), py::arg("k"), "su(n) lifted to the degree-k exterior power");

    m.def("product_basis", &gapforge::rep::product_lift, py::arg("left"), py::arg("right"),
          "generators acting on a tensor product, X (x) I and I (x) Y");

    m.def("spin_basis", &gapforge::rep::sym_power_su2, py::arg("m"),
          "su(2) in the spin-m/2 irreducible representation, dimension m + 1");
}
