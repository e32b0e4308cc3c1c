#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "nodal/direction_count.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/experiment.hpp"
#include "nodal/kac_rice.hpp"
#include "nodal/lattice.hpp"
#include "nodal/separable.hpp"
#include "nodal/svg.hpp"

namespace py = pybind11;
using namespace nodal;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Directional statistics of nodal lines of toral eigenfunctions";

  // --- lattice ---
  py::class_<LatticeCircle>(m, "LatticeCircle")
      .def_readonly("n", &LatticeCircle::n)
      .def_readonly("points", &LatticeCircle::points)
      .def_property_readonly("r2", &LatticeCircle::r2)
      .def("__repr__", [](const LatticeCircle& c) {
        std::ostringstream os;
        os << "LatticeCircle(n=" << c.n << ", r2=" << c.r2() << ")";
        return os.str();
      });
  m.def("is_sum_of_two_squares", &is_sum_of_two_squares, py::arg("n"));
  m.def("enumerate_circle", &enumerate_circle, py::arg("n"));
  m.def("mu_hat", &mu_hat, py::arg("circle"), py::arg("k"));
  m.def(
      "moment_sums",
      [](const LatticeCircle& c) {
        const MomentSums s = moment_sums(c);
        return py::make_tuple(s.sum_l1_4, s.sum_l1_2_l2_2);
      },
      py::arg("circle"));
  m.def(
      "classify",
      [](const LatticeCircle& c) { return to_string(classify(c)); },
      py::arg("circle"));

  // --- directions ---
  py::class_<Direction>(m, "Direction")
      .def_static("from_angle", &Direction::from_angle, py::arg("theta"))
      .def_static("from_integers", &Direction::from_integers, py::arg("k1"),
                  py::arg("k2"))
      .def_readonly("theta", &Direction::theta)
      .def_readonly("rational", &Direction::rational)
      .def("height", &Direction::height)
      .def("zeta_unit", &Direction::zeta_unit)
      .def("xi_unit", &Direction::xi_unit);

  // --- eigenfunctions ---
  py::class_<JetAtPoint>(m, "JetAtPoint")
      .def_readonly("f", &JetAtPoint::f)
      .def_readonly("grad", &JetAtPoint::grad)
      .def_readonly("f11", &JetAtPoint::f11)
      .def_readonly("f12", &JetAtPoint::f12)
      .def_readonly("f22", &JetAtPoint::f22);
  py::class_<ToralEigenfunction>(m, "ToralEigenfunction")
      .def(py::init([](const std::vector<std::pair<std::array<std::int64_t, 2>,
                                                   std::complex<double>>>& terms) {
             std::vector<ToralEigenfunction::Term> ts;
             ts.reserve(terms.size());
             for (const auto& [lambda, c] : terms) ts.push_back({lambda, c});
             return ToralEigenfunction(std::move(ts));
           }),
           py::arg("terms"))
      .def_property_readonly("n", &ToralEigenfunction::n)
      .def_property_readonly("monochromatic", &ToralEigenfunction::monochromatic)
      .def("eigenvalue", &ToralEigenfunction::eigenvalue)
      .def("terms",
           [](const ToralEigenfunction& f) {
             std::vector<std::pair<std::array<std::int64_t, 2>,
                                   std::complex<double>>> out;
             for (const auto& t : f.terms()) out.emplace_back(t.lambda, t.c);
             return out;
           })
      .def("value", [](const ToralEigenfunction& f, double x,
                       double y) { return f.value({x, y}); },
           py::arg("x"), py::arg("y"))
      .def("evaluate_jet",
           [](const ToralEigenfunction& f, double x, double y) {
             return f.evaluate_jet({x, y});
           },
           py::arg("x"), py::arg("y"))
      .def("dump_file", &ToralEigenfunction::dump_file, py::arg("path"))
      .def_static("load_file", &ToralEigenfunction::load_file, py::arg("path"));
  m.def("fixture", &fixture, py::arg("name"));
  m.def(
      "sample_wave",
      [](std::int64_t n, std::uint64_t seed, std::uint64_t index) {
        RngStream rng = RngStream::derive(seed, index);
        return sample_arithmetic_wave(enumerate_circle(n), rng);
      },
      py::arg("n"), py::arg("seed"), py::arg("index") = 0,
      "Arithmetic random wave from the (seed, index) stream");

  // --- directional counting ---
  py::class_<DirectionalPoint>(m, "DirectionalPoint")
      .def_readonly("x", &DirectionalPoint::x)
      .def_readonly("abs_f", &DirectionalPoint::abs_f)
      .def_readonly("abs_g", &DirectionalPoint::abs_g)
      .def_readonly("grad_norm", &DirectionalPoint::grad_norm);
  py::class_<GeodesicLine>(m, "GeodesicLine")
      .def_readonly("direction", &GeodesicLine::direction)
      .def_readonly("offset", &GeodesicLine::offset);
  py::class_<DirectionalCountReport>(m, "DirectionalCountReport")
      .def_readonly("points", &DirectionalCountReport::points)
      .def_readonly("geodesics", &DirectionalCountReport::geodesics)
      .def_readonly("singular_suspects",
                    &DirectionalCountReport::singular_suspects)
      .def_readonly("count", &DirectionalCountReport::count)
      .def_readonly("bezout_bound", &DirectionalCountReport::bezout_bound)
      .def_readonly("geodesic_bound", &DirectionalCountReport::geodesic_bound)
      .def_readonly("inconclusive", &DirectionalCountReport::inconclusive)
      .def_readonly("newton_divergences",
                    &DirectionalCountReport::newton_divergences)
      .def_readonly("seeds", &DirectionalCountReport::seeds)
      .def_readonly("grid_cells", &DirectionalCountReport::grid_cells);
  m.def("bezout_bound", &bezout_bound, py::arg("n"));
  m.def("geodesic_bound", &geodesic_bound, py::arg("n"), py::arg("zeta"));
  m.def("default_grid_cells", &default_grid_cells, py::arg("n"));
  m.def("detect_geodesics", &detect_geodesics, py::arg("f"), py::arg("zeta"),
        py::arg("tol_geodesic") = 1e-8);
  m.def("count_directional_points",
        [](const ToralEigenfunction& f, const Direction& zeta, int grid_cells) {
          return count_directional_points(f, zeta, grid_cells);
        },
        py::arg("f"), py::arg("zeta"), py::arg("grid_cells") = 0);

  // --- Kac-Rice ---
  py::class_<KacRiceBreakdown>(m, "KacRiceBreakdown")
      .def_readonly("n", &KacRiceBreakdown::n)
      .def_readonly("theta", &KacRiceBreakdown::theta)
      .def_readonly("mu4", &KacRiceBreakdown::mu4)
      .def_readonly("phi0", &KacRiceBreakdown::phi0)
      .def_readonly("jexp", &KacRiceBreakdown::jexp)
      .def_readonly("density", &KacRiceBreakdown::density)
      .def_readonly("expectation", &KacRiceBreakdown::expectation)
      .def_readonly("degenerate", &KacRiceBreakdown::degenerate);
  m.def("expected_count", &expected_count, py::arg("n"), py::arg("theta"));
  m.def("kac_rice_breakdown", &kac_rice_breakdown, py::arg("n"), py::arg("theta"));
  m.def("density_factor_phi0", &density_factor_phi0, py::arg("n"));
  m.def("conditional_jacobian_expectation", &conditional_jacobian_expectation,
        py::arg("n"), py::arg("theta"));
  m.def("derivative_covariance_matrix", &derivative_covariance_matrix,
        py::arg("n"));
  m.def(
      "monte_carlo_jexp_oracle",
      [](std::int64_t n, double theta, std::int64_t samples, std::uint64_t seed) {
        RngStream rng = RngStream::derive(seed, 0);
        const OracleEstimate est = monte_carlo_jexp_oracle(n, theta, samples, rng);
        return py::make_tuple(est.value, est.std_error);
      },
      py::arg("n"), py::arg("theta"), py::arg("samples"), py::arg("seed") = 0);

  // --- separable domains ---
  py::class_<DiskEigenfunction>(m, "DiskEigenfunction")
      .def_readonly("m", &DiskEigenfunction::m)
      .def_readonly("k", &DiskEigenfunction::k)
      .def_readonly("phase", &DiskEigenfunction::phase)
      .def_readonly("j_mk", &DiskEigenfunction::j_mk)
      .def("eigenvalue", &DiskEigenfunction::eigenvalue)
      .def("value", &DiskEigenfunction::value, py::arg("r"), py::arg("theta"));
  py::class_<SeparableCount>(m, "SeparableCount")
      .def_readonly("infinite", &SeparableCount::infinite)
      .def_readonly("count", &SeparableCount::count)
      .def_readonly("singular_coincidence",
                    &SeparableCount::singular_coincidence);
  m.def("bessel_j", &bessel_j, py::arg("m"), py::arg("x"));
  m.def("bessel_j_prime", &bessel_j_prime, py::arg("m"), py::arg("x"));
  m.def("bessel_zero", &bessel_zero, py::arg("m"), py::arg("k"));
  m.def("make_disk_eigenfunction", &make_disk_eigenfunction, py::arg("m"),
        py::arg("k"), py::arg("phase") = 0.0);
  m.def("disk_directional_count", &disk_directional_count, py::arg("e"),
        py::arg("zeta_angle"));
  m.def(
      "rectangle_directional_count",
      [](double alpha, int mm, int nn, double zeta_angle) {
        return rectangle_directional_count({alpha, mm, nn}, zeta_angle);
      },
      py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("zeta_angle"));
  m.def("disk_bound_check", &disk_bound_check, py::arg("m"), py::arg("k"));

  // --- experiments ---
  py::class_<ExperimentRecord>(m, "ExperimentRecord")
      .def_readonly("sample_index", &ExperimentRecord::sample_index)
      .def_readonly("derived_seed", &ExperimentRecord::derived_seed)
      .def_readonly("count", &ExperimentRecord::count)
      .def_readonly("num_geodesics", &ExperimentRecord::num_geodesics)
      .def_readonly("singular_flag", &ExperimentRecord::singular_flag)
      .def_readonly("wall_time_ms", &ExperimentRecord::wall_time_ms);
  py::class_<MonteCarloSummary>(m, "MonteCarloSummary")
      .def_readonly("records", &MonteCarloSummary::records)
      .def_readonly("used", &MonteCarloSummary::used)
      .def_readonly("excluded_singular", &MonteCarloSummary::excluded_singular)
      .def_readonly("mean", &MonteCarloSummary::mean)
      .def_readonly("std_error", &MonteCarloSummary::std_error)
      .def_readonly("prediction", &MonteCarloSummary::prediction)
      .def_readonly("z_score", &MonteCarloSummary::z_score);
  m.def(
      "run_monte_carlo",
      [](std::int64_t n, std::int64_t samples, std::uint64_t seed,
         std::optional<double> theta,
         std::optional<std::pair<std::int64_t, std::int64_t>> rational,
         int grid_cells, int threads, const std::string& out_csv) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.samples = samples;
        cfg.seed = seed;
        if (rational)
          cfg.direction = Direction::from_integers(rational->first, rational->second);
        else if (theta)
          cfg.direction = Direction::from_angle(*theta);
        else
          throw std::invalid_argument("run_monte_carlo: pass theta or rational");
        cfg.grid_cells = grid_cells;
        cfg.threads = threads;
        cfg.out_csv = out_csv;
        return run_monte_carlo(cfg);
      },
      py::arg("n"), py::arg("samples"), py::arg("seed") = 0,
      py::arg("theta") = std::nullopt, py::arg("rational") = std::nullopt,
      py::arg("grid_cells") = 0, py::arg("threads") = 1,
      py::arg("out_csv") = std::string());
  m.def(
      "read_csv",
      [](const std::string& path) {
        const CsvContent c = read_csv(path);
        return py::make_tuple(c.n, c.theta, c.records);
      },
      py::arg("path"));

  // --- plots ---
  m.def(
      "emit_nodal_svg",
      [](const ToralEigenfunction& f, const std::string& path,
         std::optional<Direction> zeta, int grid_cells) {
        emit_nodal_svg(f, zeta, path, grid_cells);
      },
      py::arg("f"), py::arg("path"), py::arg("zeta") = std::nullopt,
      py::arg("grid_cells") = 0);
  m.def("emit_disk_svg", &emit_disk_svg, py::arg("e"), py::arg("path"),
        py::arg("grid_cells") = 0);
}
