#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nodal/direction_count.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/experiment.hpp"
#include "nodal/kac_rice.hpp"
#include "nodal/lattice.hpp"
#include "nodal/separable.hpp"
#include "nodal/svg.hpp"

namespace {

using namespace nodal;

Direction parse_direction(const std::string& rational, double theta,
                          bool theta_set) {
  if (!rational.empty()) {
    long long k1 = 0, k2 = 0;
    if (std::sscanf(rational.c_str(), "%lld,%lld", &k1, &k2) != 2)
      throw std::invalid_argument("--rational expects K1,K2");
    return Direction::from_integers(k1, k2);
  }
  if (!theta_set)
    throw std::invalid_argument("a direction is required: --theta or --rational");
  return Direction::from_angle(theta);
}

struct SourceFlags {
  std::string fixture_name;
  std::string load_path;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

ToralEigenfunction make_source(const SourceFlags& src) {
  const int provided = (!src.fixture_name.empty() ? 1 : 0) +
                       (!src.load_path.empty() ? 1 : 0) + (src.n > 0 ? 1 : 0);
  if (provided != 1)
    throw std::invalid_argument(
        "choose exactly one of --fixture, --load, or --n (with --seed)");
  if (!src.fixture_name.empty()) return fixture(src.fixture_name);
  if (!src.load_path.empty()) return ToralEigenfunction::load_file(src.load_path);
  RngStream rng = RngStream::derive(src.seed, 0);
  return sample_arithmetic_wave(enumerate_circle(src.n), rng);
}

void print_direction(const Direction& d) {
  std::printf("theta %.17g\n", d.theta);
  if (d.rational)
    std::printf("rational %lld,%lld\nheight %lld\n",
                static_cast<long long>((*d.rational)[0]),
                static_cast<long long>((*d.rational)[1]),
                static_cast<long long>(d.height()));
}

void print_report(const DirectionalCountReport& report) {
  std::printf("grid_cells %d\n", report.grid_cells);
  std::printf("bezout_bound %lld\n",
              static_cast<long long>(report.bezout_bound));
  if (report.geodesic_bound)
    std::printf("geodesic_bound %.12g\n", *report.geodesic_bound);
  std::printf("geodesics %zu\n", report.geodesics.size());
  for (const auto& line : report.geodesics)
    std::printf("geodesic %lld,%lld offset %.12g\n",
                static_cast<long long>(line.direction[0]),
                static_cast<long long>(line.direction[1]), line.offset);
  std::printf("count %d\n", report.count);
  std::printf("inconclusive %d\n", report.inconclusive ? 1 : 0);
  std::printf("singular_suspects %zu\n", report.singular_suspects.size());
  std::printf("newton_divergences %d\n", report.newton_divergences);
  std::printf("seeds %d\n", report.seeds);
  if (!report.points.empty()) {
    std::printf("points:\n");
    for (const auto& p : report.points)
      std::printf("%.12g %.12g  |f| %.3g  |g| %.3g  |grad| %.6g\n", p.x[0],
                  p.x[1], p.abs_f, p.abs_g, p.grad_norm);
  }
  if (!report.singular_suspects.empty()) {
    std::printf("suspects:\n");
    for (const auto& p : report.singular_suspects)
      std::printf("%.12g %.12g  |f| %.3g  |g| %.3g  |grad| %.6g\n", p.x[0],
                  p.x[1], p.abs_f, p.abs_g, p.grad_norm);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional statistics of nodal lines of toral eigenfunctions"};
  app.require_subcommand(1);

  // lattice --n N
  auto* cmd_lattice = app.add_subcommand("lattice", "Lattice points on the circle of radius sqrt(n)");
  std::int64_t lattice_n = 0;
  cmd_lattice->add_option("--n", lattice_n, "norm-squared n")->required();

  // expect --n N --theta T
  auto* cmd_expect = app.add_subcommand("expect", "Kac-Rice expected directional count");
  std::int64_t expect_n = 0;
  double expect_theta = 0.0;
  cmd_expect->add_option("--n", expect_n, "norm-squared n")->required();
  cmd_expect->add_option("--theta", expect_theta, "direction angle")->required();

  // count: source + direction
  auto* cmd_count = app.add_subcommand("count", "Count nodal directional points");
  SourceFlags count_src;
  std::string count_rational;
  double count_theta = 0.0;
  int count_grid = 0;
  std::string count_dump;
  cmd_count->add_option("--fixture", count_src.fixture_name, "fixture name");
  cmd_count->add_option("--load", count_src.load_path, "eigenfunction file");
  cmd_count->add_option("--n", count_src.n, "sample a random wave with this n");
  cmd_count->add_option("--seed", count_src.seed, "random wave seed");
  auto* count_theta_opt =
      cmd_count->add_option("--theta", count_theta, "direction angle (generic)");
  cmd_count->add_option("--rational", count_rational, "rational direction K1,K2");
  cmd_count->add_option("--grid-cells", count_grid, "grid resolution override");
  cmd_count->add_option("--dump", count_dump, "write the eigenfunction to file");

  // mc: Monte Carlo campaign
  auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo counts vs the Kac-Rice prediction");
  ExperimentConfig mc_cfg;
  std::string mc_rational;
  double mc_theta = 0.0;
  auto* mc_theta_opt = cmd_mc->add_option("--theta", mc_theta, "direction angle");
  cmd_mc->add_option("--rational", mc_rational, "rational direction K1,K2");
  cmd_mc->add_option("--n", mc_cfg.n, "norm-squared n")->required();
  cmd_mc->add_option("--samples", mc_cfg.samples, "number of waves");
  cmd_mc->add_option("--seed", mc_cfg.seed, "campaign seed");
  cmd_mc->add_option("--grid-cells", mc_cfg.grid_cells, "grid resolution override");
  cmd_mc->add_option("--threads", mc_cfg.threads, "worker threads");
  cmd_mc->add_option("--out", mc_cfg.out_csv, "CSV output path");

  // disk --m --k [--phase] [--zeta-angle] [--plot FILE]
  auto* cmd_disk = app.add_subcommand("disk", "Disk eigenfunction directional count");
  int disk_m = 0, disk_k = 1, disk_grid = 0;
  double disk_phase = 0.0, disk_zeta = 0.1234;
  std::string disk_plot;
  cmd_disk->add_option("--m", disk_m, "angular index")->required();
  cmd_disk->add_option("--k", disk_k, "radial index")->required();
  cmd_disk->add_option("--phase", disk_phase, "angular phase");
  cmd_disk->add_option("--zeta-angle", disk_zeta, "direction angle");
  cmd_disk->add_option("--plot", disk_plot, "write a nodal SVG to this path");
  cmd_disk->add_option("--grid-cells", disk_grid, "plot grid resolution");

  // rect --alpha --m --n [--zeta-angle]
  auto* cmd_rect = app.add_subcommand("rect", "Irrational rectangle directional count");
  RectangleSpec rect_spec;
  double rect_zeta = 0.1234;
  cmd_rect->add_option("--alpha", rect_spec.alpha, "aspect parameter")->required();
  cmd_rect->add_option("--m", rect_spec.m, "x mode index")->required();
  cmd_rect->add_option("--n", rect_spec.n, "y mode index")->required();
  cmd_rect->add_option("--zeta-angle", rect_zeta, "direction angle");

  // plot: source [+ direction] --out FILE
  auto* cmd_plot = app.add_subcommand("plot", "Emit a nodal-line SVG");
  SourceFlags plot_src;
  std::string plot_rational, plot_out;
  double plot_theta = 0.0;
  int plot_grid = 0;
  cmd_plot->add_option("--fixture", plot_src.fixture_name, "fixture name");
  cmd_plot->add_option("--load", plot_src.load_path, "eigenfunction file");
  cmd_plot->add_option("--n", plot_src.n, "sample a random wave with this n");
  cmd_plot->add_option("--seed", plot_src.seed, "random wave seed");
  auto* plot_theta_opt = cmd_plot->add_option("--theta", plot_theta, "direction angle");
  cmd_plot->add_option("--rational", plot_rational, "rational direction K1,K2");
  cmd_plot->add_option("--grid-cells", plot_grid, "grid resolution override");
  cmd_plot->add_option("--out", plot_out, "SVG output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_lattice->parsed()) {
      const LatticeCircle circle = enumerate_circle(lattice_n);
      std::printf("n %lld\n", static_cast<long long>(circle.n));
      std::printf("r2 %lld\n", static_cast<long long>(circle.r2()));
      std::printf("mu4 %.12g\n", mu_hat(circle, 4));
      std::printf("classification %s\n", to_string(classify(circle)).c_str());
      std::printf("points:\n");
      for (const auto& p : circle.points)
        std::printf("%lld %lld\n", static_cast<long long>(p[0]),
                    static_cast<long long>(p[1]));
    } else if (cmd_expect->parsed()) {
      const KacRiceBreakdown b = kac_rice_breakdown(expect_n, expect_theta);
      std::printf("n %lld\n", static_cast<long long>(b.n));
      std::printf("theta %.17g\n", b.theta);
      std::printf("mu4 %.12g\n", b.mu4);
      std::printf("phi0 %.12g\n", b.phi0);
      std::printf("jexp %.12g\n", b.jexp);
      std::printf("density %.12g\n", b.density);
      std::printf("expectation %.12g\n", b.expectation);
      std::printf("degenerate %d\n", b.degenerate ? 1 : 0);
    } else if (cmd_count->parsed()) {
      const ToralEigenfunction f = make_source(count_src);
      if (!count_dump.empty()) f.dump_file(count_dump);
      const Direction zeta =
          parse_direction(count_rational, count_theta, count_theta_opt->count() > 0);
      if (f.n())
        std::printf("n %lld\n", static_cast<long long>(*f.n()));
      print_direction(zeta);
      print_report(count_directional_points(f, zeta, count_grid));
    } else if (cmd_mc->parsed()) {
      mc_cfg.direction =
          parse_direction(mc_rational, mc_theta, mc_theta_opt->count() > 0);
      const MonteCarloSummary s = run_monte_carlo(mc_cfg);
      std::printf("n %lld\n", static_cast<long long>(mc_cfg.n));
      print_direction(mc_cfg.direction);
      std::printf("samples %lld\n", static_cast<long long>(mc_cfg.samples));
      std::printf("used %lld\n", static_cast<long long>(s.used));
      std::printf("excluded_singular %lld\n",
                  static_cast<long long>(s.excluded_singular));
      std::printf("mean %.12g\n", s.mean);
      std::printf("std_error %.12g\n", s.std_error);
      std::printf("prediction %.12g\n", s.prediction);
      std::printf("z_score %.12g\n", s.z_score);
      if (!mc_cfg.out_csv.empty()) std::printf("csv %s\n", mc_cfg.out_csv.c_str());
    } else if (cmd_disk->parsed()) {
      const DiskEigenfunction e = make_disk_eigenfunction(disk_m, disk_k, disk_phase);
      std::printf("m %d\nk %d\n", e.m, e.k);
      std::printf("j_mk %.15g\n", e.j_mk);
      std::printf("eigenvalue %.15g\n", e.eigenvalue());
      const SeparableCount c = disk_directional_count(e, disk_zeta);
      if (c.infinite) std::printf("count infinite\n");
      else std::printf("count finite %d\n", c.count);
      std::printf("singular_coincidence %d\n", c.singular_coincidence ? 1 : 0);
      if (disk_m <= 20 && disk_k <= 20)
        std::printf("bound_ok %d\n", disk_bound_check(disk_m, disk_k) ? 1 : 0);
      if (!disk_plot.empty()) {
        emit_disk_svg(e, disk_plot, disk_grid);
        std::printf("svg %s\n", disk_plot.c_str());
      }
    } else if (cmd_rect->parsed()) {
      const SeparableCount c = rectangle_directional_count(rect_spec, rect_zeta);
      if (c.infinite) std::printf("count infinite\n");
      else std::printf("count finite %d\n", c.count);
    } else if (cmd_plot->parsed()) {
      const ToralEigenfunction f = make_source(plot_src);
      std::optional<Direction> zeta;
      if (!plot_rational.empty() || plot_theta_opt->count() > 0)
        zeta = parse_direction(plot_rational, plot_theta,
                               plot_theta_opt->count() > 0);
      emit_nodal_svg(f, zeta, plot_out, plot_grid);
      std::printf("svg %s\n", plot_out.c_str());
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
