#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodal/direction.hpp"

namespace nodal {

struct ExperimentConfig {
  std::int64_t n = 1;
  Direction direction;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  int grid_cells = 0;   // 0 = default for n
  int threads = 1;
  std::string out_csv;  // empty = no file output
};

struct ExperimentRecord {
  std::int64_t sample_index = 0;
  std::uint64_t derived_seed = 0;
  int count = 0;
  int num_geodesics = 0;
  bool singular_flag = false;
  double wall_time_ms = 0.0;  // quantized to 3 decimals
};

struct MonteCarloSummary {
  std::vector<ExperimentRecord> records;
  std::int64_t used = 0;               // samples entering the mean
  std::int64_t excluded_singular = 0;  // inconclusive samples left out
  double mean = 0.0;
  double std_error = 0.0;
  double prediction = 0.0;  // Kac-Rice expected_count(n, theta)
  double z_score = 0.0;
};

// Samples `samples` independent waves (stream derived from (seed, index), so
// results are identical for any thread count) and counts directional points.
MonteCarloSummary run_monte_carlo(const ExperimentConfig& cfg);

// CSV header:
// sample_index,derived_seed,n,theta,count,num_geodesics,singular_flag,wall_time_ms
struct CsvContent {
  std::int64_t n = 0;
  double theta = 0.0;
  std::vector<ExperimentRecord> records;
};
void write_csv(const std::string& path, std::int64_t n, double theta,
               const std::vector<ExperimentRecord>& records);
CsvContent read_csv(const std::string& path);

}  // namespace nodal
