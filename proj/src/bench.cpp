#include "tardy/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "tardy/maxmin.hpp"
#include "tardy/rng.hpp"
#include "tardy/selftest.hpp"
#include "tardy/skewed.hpp"

namespace tardy {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t cell_seed(std::uint64_t base, std::size_t family_idx, std::size_t size_idx) {
  SplitMix64 mix(base ^ (0x42656E63ULL + family_idx * 1000003ULL + size_idx * 10007ULL));
  return mix.next();
}

// Greedy single-job removals while the disagreement persists.
std::vector<Job> minimize_disagreement(std::vector<Job> jobs,
                                       const std::vector<BenchSolver>& solvers) {
  auto disagrees = [&](const std::vector<Job>& cand) {
    if (cand.empty()) return false;
    JobInstance inst = build_instance(cand);
    std::int64_t first = 0;
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      const std::int64_t obj = solvers[s].fn(inst).objective;
      if (s == 0)
        first = obj;
      else if (obj != first)
        return true;
    }
    return false;
  };

  bool shrunk = true;
  while (shrunk && jobs.size() > 1) {
    shrunk = false;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      std::vector<Job> cand = jobs;
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
      if (disagrees(cand)) {
        jobs = std::move(cand);
        shrunk = true;
        break;
      }
    }
  }
  return jobs;
}

}  // namespace

void write_bench_header(std::ostream& csv) {
  csv << "algorithm,n,P,d_sharp,D,seed,objective,wall_time_ms\n";
}

void write_bench_record(std::ostream& csv, const BenchRecord& rec) {
  csv << rec.algorithm << ',' << rec.n << ',' << rec.total_p << ',' << rec.d_sharp << ','
      << rec.distinct_due_sum << ',' << rec.seed << ',' << rec.objective << ','
      << rec.wall_time_ms << '\n';
}

int run_instance_bench(const BenchOptions& options, const std::vector<BenchSolver>& solvers,
                       std::ostream& csv, std::ostream& log) {
  write_bench_header(csv);
  for (std::size_t fi = 0; fi < options.families.size(); ++fi) {
    for (std::size_t si = 0; si < options.sizes.size(); ++si) {
      GenParams params;
      params.family = options.families[fi];
      params.n = options.sizes[si];
      params.pmax = options.pmax;
      params.dsharp = params.family == GenFamily::kSubsetSum
                          ? 1
                          : (options.dsharp ? std::min(options.dsharp, params.n)
                                            : std::min<std::size_t>(8, params.n));
      params.seed = cell_seed(options.base_seed, fi, si);
      std::vector<Job> jobs = generate_instance(params);
      JobInstance inst = build_instance(jobs);
      if (inst.total_p > 100000000)
        log << "warning: P=" << inst.total_p
            << " needs >1e8-bit dense sets; expect heavy memory use\n";

      // Agreement gate before any row is written.
      std::vector<ScheduleResult> first_runs;
      for (const BenchSolver& solver : solvers) {
        const auto start = Clock::now();
        ScheduleResult r = solver.fn(inst);
        r.wall_time_ms = ms_since(start);
        first_runs.push_back(std::move(r));
      }
      for (std::size_t s = 1; s < first_runs.size(); ++s) {
        if (first_runs[s].objective != first_runs[0].objective) {
          log << "solver disagreement on family=" << family_name(params.family)
              << " n=" << params.n << " seed=" << params.seed << ": " << solvers[0].name
              << "=" << first_runs[0].objective << " vs " << solvers[s].name << "="
              << first_runs[s].objective << "\n";
          std::vector<Job> reduced = minimize_disagreement(jobs, solvers);
          std::ofstream repro(options.repro_path);
          repro << "# minimized disagreement reproducer, seed " << params.seed << "\n"
                << render_instance(reduced);
          log << "minimized reproducer (" << reduced.size() << " jobs) written to "
              << options.repro_path << "\n";
          return 4;
        }
      }

      for (std::size_t s = 0; s < solvers.size(); ++s) {
        for (std::size_t rep = 0; rep < options.reps; ++rep) {
          double ms;
          std::int64_t objective;
          if (rep == 0) {
            ms = first_runs[s].wall_time_ms;
            objective = first_runs[s].objective;
          } else {
            const auto start = Clock::now();
            ScheduleResult r = solvers[s].fn(inst);
            ms = ms_since(start);
            objective = r.objective;
          }
          BenchRecord rec;
          rec.algorithm = solvers[s].name;
          rec.n = inst.n();
          rec.total_p = inst.total_p;
          rec.d_sharp = inst.d_sharp();
          rec.distinct_due_sum = inst.distinct_due_sum;
          rec.seed = params.seed;
          rec.objective = objective;
          rec.wall_time_ms = std::llround(ms);
          write_bench_record(csv, rec);
        }
      }
    }
  }
  return 0;
}

double fit_loglog_slope(const std::vector<std::size_t>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log2(static_cast<double>(xs[i]));
    const double y = std::log2(std::max(ys[i], 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return denom == 0 ? 0 : (static_cast<double>(m) * sxy - sx * sy) / denom;
}

std::vector<ScalingSeries> run_conv_scaling(const std::vector<std::size_t>& lengths,
                                            std::uint64_t seed) {
  std::vector<ScalingSeries> series(4);
  series[0].algorithm = "maxmin_fast";
  series[1].algorithm = "maxmin_naive";
  series[2].algorithm = "skewed_fast";
  series[3].algorithm = "skewed_naive";

  auto time_call = [](auto&& fn) {
    // Repeat short calls until the measurement is meaningful.
    const auto start = Clock::now();
    std::size_t reps = 0;
    do {
      fn();
      ++reps;
    } while (ms_since(start) < 30.0 && reps < 1000);
    return ms_since(start) / static_cast<double>(reps);
  };

  for (std::size_t len : lengths) {
    SplitMix64 rng(seed ^ len);
    ExtVec a = random_ext_vec(rng, len, 0, static_cast<std::int64_t>(4 * len), 0.1);
    ExtVec b = random_ext_vec(rng, len, 0, static_cast<std::int64_t>(4 * len), 0.1);
    const double t0 = time_call([&] { maxmin_conv_fast(a, b); });
    const double t1 = time_call([&] { maxmin_conv_naive(a, b); });
    const double t2 = time_call([&] { skewed_conv_fast(a, b); });
    const double t3 = time_call([&] { skewed_conv_naive(a, b); });
    const double times[] = {t0, t1, t2, t3};
    for (std::size_t s = 0; s < 4; ++s) {
      series[s].lengths.push_back(len);
      series[s].millis.push_back(times[s]);
    }
  }
  for (ScalingSeries& s : series) s.slope = fit_loglog_slope(s.lengths, s.millis);
  return series;
}

void write_scaling_csv(const std::vector<ScalingSeries>& series, std::ostream& csv) {
  csv << "algorithm,n,wall_time_ms\n";
  for (const ScalingSeries& s : series)
    for (std::size_t i = 0; i < s.lengths.size(); ++i)
      csv << s.algorithm << ',' << s.lengths[i] << ',' << s.millis[i] << '\n';
}

}  // namespace tardy
