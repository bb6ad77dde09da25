#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tardy/instance_io.hpp"
#include "tardy/model.hpp"

namespace tardy {

// One measurement row. CSV schema is fixed:
// algorithm,n,P,d_sharp,D,seed,objective,wall_time_ms
struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::int64_t total_p = 0;
  std::size_t d_sharp = 0;
  std::int64_t distinct_due_sum = 0;
  std::uint64_t seed = 0;
  std::int64_t objective = 0;
  std::int64_t wall_time_ms = 0;
};

struct BenchSolver {
  std::string name;
  std::function<ScheduleResult(const JobInstance&)> fn;
};

struct BenchOptions {
  std::vector<GenFamily> families = {GenFamily::kUniform};
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  std::int64_t pmax = 10;
  std::size_t dsharp = 0;  // 0: min(8, n)
  std::uint64_t base_seed = 1;
  std::string repro_path = "disagreement_repro.txt";
};

// Generates one instance per (family, size), runs every solver on it
// (verifying objective agreement first), and appends reps timing rows
// per (instance, solver). On solver disagreement a greedily minimized
// reproducer instance is written to options.repro_path and 4 is
// returned; otherwise 0. Wall times exclude generation and I/O.
int run_instance_bench(const BenchOptions& options, const std::vector<BenchSolver>& solvers,
                       std::ostream& csv, std::ostream& log);

void write_bench_header(std::ostream& csv);
void write_bench_record(std::ostream& csv, const BenchRecord& rec);

// Convolution scaling report: wall times of the fast and naive
// (max,min)- and skewed-convolutions over a doubling ladder of vector
// lengths, plus the fitted log-log slopes.
struct ScalingSeries {
  std::string algorithm;
  std::vector<std::size_t> lengths;
  std::vector<double> millis;
  double slope = 0.0;
};

std::vector<ScalingSeries> run_conv_scaling(const std::vector<std::size_t>& lengths,
                                            std::uint64_t seed);

// CSV schema: algorithm,n,wall_time_ms (one row per measured length).
void write_scaling_csv(const std::vector<ScalingSeries>& series, std::ostream& csv);

double fit_loglog_slope(const std::vector<std::size_t>& xs, const std::vector<double>& ys);

}  // namespace tardy
