#include "tardy/cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tardy/baseline.hpp"
#include "tardy/bench.hpp"
#include "tardy/instance_io.hpp"
#include "tardy/sched.hpp"
#include "tardy/selftest.hpp"

namespace tardy {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

bool choice_from_name(const std::string& name, SolverChoice& out) {
  if (name == "brute") out = SolverChoice::kBrute;
  else if (name == "lm") out = SolverChoice::kLawlerMoore;
  else if (name == "sumset") out = SolverChoice::kSumset;
  else if (name == "conv") out = SolverChoice::kConv;
  else if (name == "auto") out = SolverChoice::kAuto;
  else return false;
  return true;
}

bool load_cost_model(const std::string& path, CostModel& model, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open cost config: " + path;
    return false;
  }
  nlohmann::json j;
  try {
    in >> j;
    model.lawler_moore = j.value("lawler_moore", model.lawler_moore);
    model.sumset = j.value("sumset", model.sumset);
    model.conv = j.value("conv", model.conv);
  } catch (const std::exception& e) {
    error = std::string("cost config parse error: ") + e.what();
    return false;
  }
  return true;
}

int cmd_solve(const std::string& path, const std::string& algo, bool json_output,
              const std::string& cost_config, std::ostream& out, std::ostream& err) {
  SolverChoice choice;
  if (!choice_from_name(algo, choice)) {
    err << "unknown algorithm: " << algo << "\n";
    return kExitUsage;
  }
  CostModel model;
  if (!cost_config.empty()) {
    std::string error;
    if (!load_cost_model(cost_config, model, error)) {
      err << error << "\n";
      return kExitUsage;
    }
  }

  std::vector<Job> jobs;
  ParseError perr;
  if (!parse_instance_file(path, jobs, perr)) {
    err << "parse error at line " << perr.line << ": " << perr.message << "\n";
    return kExitUsage;
  }
  JobInstance inst;
  try {
    inst = build_instance(std::move(jobs));
  } catch (const std::exception& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitUsage;
  }
  if (choice == SolverChoice::kBrute && inst.n() > 25) {
    err << "brute force requires n <= 25 (instance has n = " << inst.n() << ")\n";
    return kExitPrecondition;
  }

  ScheduleResult res;
  try {
    res = solve(inst, choice, model);
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  if (json_output) {
    nlohmann::json j;
    j["algorithm"] = res.algorithm;
    j["n"] = inst.n();
    j["P"] = inst.total_p;
    j["d_sharp"] = inst.d_sharp();
    j["objective"] = res.objective;
    j["wall_time_ms"] = static_cast<std::int64_t>(std::llround(res.wall_time_ms));
    out << j.dump() << "\n";
  } else {
    out << "algorithm: " << res.algorithm << "\n";
    out << "objective: " << res.objective << "\n";
    if (res.early_set) {
      out << "early:";
      for (std::size_t idx : *res.early_set) out << ' ' << idx;
      out << "\n";
    }
    out << "wall_time_ms: " << std::llround(res.wall_time_ms) << "\n";
  }
  return kExitOk;
}

int cmd_gen(const GenParams& params, std::ostream& out, std::ostream& err) {
  try {
    out << render_instance(generate_instance(params));
  } catch (const std::exception& e) {
    err << "generator error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& family_names,
              const std::vector<std::size_t>& sizes, const std::vector<std::string>& algo_names,
              std::size_t reps, std::int64_t pmax, std::size_t dsharp, std::uint64_t seed,
              const std::string& out_path, const std::string& repro_path, bool conv_scaling,
              std::ostream& out, std::ostream& err) {
  std::ofstream file_out;
  std::ostream* csv = &out;
  if (!out_path.empty() && out_path != "-") {
    file_out.open(out_path);
    if (!file_out) {
      err << "cannot open output file: " << out_path << "\n";
      return kExitUsage;
    }
    csv = &file_out;
  }

  if (conv_scaling) {
    std::vector<std::size_t> lengths = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};
    std::vector<ScalingSeries> series = run_conv_scaling(lengths, seed);
    write_scaling_csv(series, *csv);
    for (const ScalingSeries& s : series)
      err << s.algorithm << " log-log slope: " << s.slope << "\n";
    return kExitOk;
  }

  if (sizes.empty()) {
    err << "bench requires at least one size\n";
    return kExitUsage;
  }

  BenchOptions options;
  options.sizes = sizes;
  options.reps = reps;
  options.pmax = pmax;
  options.dsharp = dsharp;
  options.base_seed = seed;
  options.repro_path = repro_path;
  options.families.clear();
  for (const std::string& name : family_names) {
    GenFamily family;
    if (!family_from_name(name, family)) {
      err << "unknown family: " << name << "\n";
      return kExitUsage;
    }
    options.families.push_back(family);
  }

  std::vector<BenchSolver> solvers;
  for (const std::string& name : algo_names) {
    SolverChoice choice;
    if (!choice_from_name(name, choice)) {
      err << "unknown algorithm: " << name << "\n";
      return kExitUsage;
    }
    if (choice == SolverChoice::kBrute) {
      for (std::size_t n : sizes) {
        if (n > 25) {
          err << "brute force cannot run at n = " << n << "\n";
          return kExitUsage;
        }
      }
    }
    solvers.push_back(BenchSolver{
        name, [choice](const JobInstance& inst) { return solve(inst, choice); }});
  }
  if (solvers.empty()) {
    err << "bench requires at least one algorithm\n";
    return kExitUsage;
  }
  try {
    return run_instance_bench(options, solvers, *csv, err);
  } catch (const std::exception& e) {
    err << "bench error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

int cmd_selftest(bool full, std::ostream& out) {
  bool all_ok = true;
  for (const std::string& group : selftest_group_names()) {
    std::vector<SuiteResult> results = run_selftest_group(group, full);
    std::size_t passed = 0, failed = 0;
    for (const SuiteResult& r : results) {
      passed += r.passed;
      failed += r.failed;
    }
    out << "suite " << group << ": " << passed << " passed, " << failed << " failed\n";
    for (const SuiteResult& r : results) {
      if (!r.ok()) {
        all_ok = false;
        out << "  FAILED " << r.name << " (seed " << r.first_failing_seed << ")\n";
        if (!r.failure_detail.empty()) out << "  detail: " << r.failure_detail << "\n";
      }
    }
  }
  out << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok ? kExitOk : kExitSelftest;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solvers for minimizing total processing time of tardy jobs"};
  app.require_subcommand(1);

  // solve
  std::string solve_path, solve_algo = "auto", solve_cost_config;
  bool solve_json = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("file", solve_path, "instance file")->required();
  solve_cmd->add_option("--algo", solve_algo, "brute|lm|sumset|conv|auto");
  solve_cmd->add_flag("--json", solve_json, "emit a single JSON object");
  solve_cmd->add_option("--cost-config", solve_cost_config,
                        "JSON file with auto-dispatch calibration constants");

  // gen
  GenParams gen_params;
  std::string gen_family = "uniform";
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance on stdout");
  gen_cmd->add_option("--n", gen_params.n, "job count")->required();
  gen_cmd->add_option("--pmax", gen_params.pmax, "maximum processing time");
  gen_cmd->add_option("--dsharp", gen_params.dsharp, "distinct due dates");
  gen_cmd->add_option("--seed", gen_params.seed, "generator seed");
  gen_cmd->add_option("--family", gen_family, "uniform|subsetsum|tight");

  // bench
  std::vector<std::string> bench_families = {"uniform"};
  std::vector<std::size_t> bench_sizes;
  std::vector<std::string> bench_algos = {"lm", "sumset", "conv"};
  std::size_t bench_reps = 1, bench_dsharp = 0;
  std::int64_t bench_pmax = 10;
  std::uint64_t bench_seed = 1;
  std::string bench_out = "-", bench_repro = "disagreement_repro.txt";
  bool bench_scaling = false;
  CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark solvers to CSV");
  bench_cmd->add_option("--families", bench_families, "instance families")->delimiter(',');
  bench_cmd->add_option("--sizes", bench_sizes, "instance sizes (n)")->delimiter(',');
  bench_cmd->add_option("--algos", bench_algos, "solvers to run")->delimiter(',');
  bench_cmd->add_option("--reps", bench_reps, "timing repetitions per cell");
  bench_cmd->add_option("--pmax", bench_pmax, "maximum processing time");
  bench_cmd->add_option("--dsharp", bench_dsharp, "distinct due dates (0 = min(8, n))");
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_option("--out", bench_out, "CSV path ('-' for stdout)");
  bench_cmd->add_option("--repro-out", bench_repro, "disagreement reproducer path");
  bench_cmd->add_flag("--conv-scaling", bench_scaling,
                      "measure convolution scaling instead of instances");

  // selftest
  bool st_quick = false, st_full = false;
  CLI::App* st_cmd = app.add_subcommand("selftest", "run the differential suites");
  st_cmd->add_flag("--quick", st_quick, "seconds-scale suites (default)");
  st_cmd->add_flag("--full", st_full, "minutes-scale suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (solve_cmd->parsed())
    return cmd_solve(solve_path, solve_algo, solve_json, solve_cost_config, out, err);
  if (gen_cmd->parsed()) {
    if (!family_from_name(gen_family, gen_params.family)) {
      err << "unknown family: " << gen_family << "\n";
      return kExitUsage;
    }
    return cmd_gen(gen_params, out, err);
  }
  if (bench_cmd->parsed())
    return cmd_bench(bench_families, bench_sizes, bench_algos, bench_reps, bench_pmax,
                     bench_dsharp, bench_seed, bench_out, bench_repro, bench_scaling, out, err);
  if (st_cmd->parsed()) return cmd_selftest(st_full && !st_quick, out);

  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace tardy
