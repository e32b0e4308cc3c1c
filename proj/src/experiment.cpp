#include "nodal/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nodal/direction_count.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/kac_rice.hpp"
#include "nodal/lattice.hpp"
#include "nodal/rng.hpp"

namespace nodal {

MonteCarloSummary run_monte_carlo(const ExperimentConfig& cfg) {
  if (cfg.samples < 1)
    throw std::invalid_argument("run_monte_carlo: samples must be >= 1");
  const LatticeCircle circle = enumerate_circle(cfg.n);
  const int threads =
      std::max(1, std::min<int>(cfg.threads, static_cast<int>(cfg.samples)));

  MonteCarloSummary summary;
  summary.records.resize(static_cast<std::size_t>(cfg.samples));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&](int worker_id) {
    try {
      for (std::int64_t i = worker_id; i < cfg.samples; i += threads) {
        RngStream rng = RngStream::derive(cfg.seed, static_cast<std::uint64_t>(i));
        ExperimentRecord rec;
        rec.sample_index = i;
        rec.derived_seed = rng.derived_seed();
        const ToralEigenfunction wave = sample_arithmetic_wave(circle, rng);
        const auto t0 = std::chrono::steady_clock::now();
        const DirectionalCountReport report =
            count_directional_points(wave, cfg.direction, cfg.grid_cells);
        const auto t1 = std::chrono::steady_clock::now();
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0);
        rec.wall_time_ms = static_cast<double>(us.count()) / 1000.0;
        rec.count = report.count;
        rec.num_geodesics = static_cast<int>(report.geodesics.size());
        rec.singular_flag = report.inconclusive;
        summary.records[static_cast<std::size_t>(i)] = rec;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& rec : summary.records) {
    if (rec.singular_flag) {
      ++summary.excluded_singular;
      continue;
    }
    ++summary.used;
    sum += rec.count;
    sum_sq += static_cast<double>(rec.count) * rec.count;
  }
  if (summary.used > 0) summary.mean = sum / static_cast<double>(summary.used);
  if (summary.used > 1) {
    const double u = static_cast<double>(summary.used);
    const double var = std::max(0.0, (sum_sq - u * summary.mean * summary.mean) / (u - 1.0));
    summary.std_error = std::sqrt(var / u);
  }
  summary.prediction = expected_count(cfg.n, cfg.direction.theta);
  summary.z_score = summary.std_error > 0.0
                        ? (summary.mean - summary.prediction) / summary.std_error
                        : 0.0;

  if (!cfg.out_csv.empty())
    write_csv(cfg.out_csv, cfg.n, cfg.direction.theta, summary.records);
  return summary;
}

namespace {

const char kCsvHeader[] =
    "sample_index,derived_seed,n,theta,count,num_geodesics,singular_flag,"
    "wall_time_ms";

}  // namespace

void write_csv(const std::string& path, std::int64_t n, double theta,
               const std::vector<ExperimentRecord>& records) {
  std::ofstream os(path, std::ios::binary);  // LF endings everywhere
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    char line[192];
    std::snprintf(line, sizeof line, "%lld,%llu,%lld,%.17g,%d,%d,%d,%.3f\n",
                  static_cast<long long>(rec.sample_index),
                  static_cast<unsigned long long>(rec.derived_seed),
                  static_cast<long long>(n), theta, rec.count,
                  rec.num_geodesics, rec.singular_flag ? 1 : 0,
                  rec.wall_time_ms);
    os << line;
  }
  if (!os) throw std::runtime_error("write failed: " + path);
}

CsvContent read_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open for read: " + path);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::runtime_error("bad CSV header in " + path);
  CsvContent content;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    long long index = 0, n = 0;
    unsigned long long seed = 0;
    double theta = 0.0, wall = 0.0;
    int count = 0, geodesics = 0, singular = 0;
    if (std::sscanf(line.c_str(), "%lld,%llu,%lld,%lf,%d,%d,%d,%lf", &index,
                    &seed, &n, &theta, &count, &geodesics, &singular,
                    &wall) != 8)
      throw std::runtime_error("bad CSV row: " + line);
    if (first) {
      content.n = n;
      content.theta = theta;
      first = false;
    }
    ExperimentRecord rec;
    rec.sample_index = index;
    rec.derived_seed = seed;
    rec.count = count;
    rec.num_geodesics = geodesics;
    rec.singular_flag = singular != 0;
    rec.wall_time_ms = wall;
    content.records.push_back(rec);
  }
  return content;
}

}  // namespace nodal
