#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tardy/baseline.hpp"
#include "tardy/bench.hpp"
#include "tardy/cli_app.hpp"
#include "tardy/instance_io.hpp"
#include "tardy/rng.hpp"
#include "tardy/sched.hpp"
#include "tardy/selftest.hpp"

using namespace tardy;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("instance parse and render round trip") {
  const std::string text = "# header comment\n2 2\n\n2 2\r\n3 7   # trailing comment\n";
  std::vector<Job> jobs;
  ParseError err;
  REQUIRE(parse_instance_text(text, jobs, err));
  CHECK(jobs == std::vector<Job>{{2, 2}, {2, 2}, {3, 7}});
  CHECK(render_instance(jobs) == "2 2\n2 2\n3 7\n");

  std::vector<Job> again;
  REQUIRE(parse_instance_text(render_instance(jobs), again, err));
  CHECK(again == jobs);
}

TEST_CASE("render-parse round trip on generated instances") {
  SplitMix64 rng(606);
  for (int t = 0; t < 40; ++t) {
    GenParams params;
    params.n = 1 + rng.below(60);
    params.pmax = 1 + static_cast<std::int64_t>(rng.below(30));
    params.dsharp = 1 + rng.below(params.n);
    params.seed = rng.next();
    params.family = params.dsharp == 1 && t % 3 == 0 ? GenFamily::kSubsetSum
                    : t % 2 ? GenFamily::kTight
                            : GenFamily::kUniform;
    std::vector<Job> jobs = generate_instance(params);
    std::vector<Job> round;
    ParseError err;
    REQUIRE(parse_instance_text(render_instance(jobs), round, err));
    CHECK(round == jobs);
  }
}

TEST_CASE("parse errors carry line numbers") {
  std::vector<Job> jobs;
  ParseError err;
  CHECK_FALSE(parse_instance_text("x y\n", jobs, err));
  CHECK(err.line == 1);
  CHECK_FALSE(parse_instance_text("1 2\n3\n", jobs, err));
  CHECK(err.line == 2);
  CHECK_FALSE(parse_instance_text("1 2\n0 5\n", jobs, err));
  CHECK(err.line == 2);
  CHECK_FALSE(parse_instance_text("# only comments\n", jobs, err));
}

TEST_CASE("generator determinism and family shapes") {
  GenParams params{.n = 12, .pmax = 9, .dsharp = 4, .seed = 7, .family = GenFamily::kUniform};
  std::vector<Job> a = generate_instance(params);
  std::vector<Job> b = generate_instance(params);
  CHECK(render_instance(a) == render_instance(b));
  CHECK(build_instance(a).d_sharp() == 4);

  params.seed = 8;
  CHECK(render_instance(generate_instance(params)) != render_instance(a));

  GenParams ss{.n = 6, .pmax = 5, .dsharp = 1, .seed = 3, .family = GenFamily::kSubsetSum};
  CHECK(build_instance(generate_instance(ss)).d_sharp() == 1);

  GenParams tight{.n = 9, .pmax = 5, .dsharp = 3, .seed = 3, .family = GenFamily::kTight};
  CHECK(build_instance(generate_instance(tight)).d_sharp() == 3);

  GenParams bad{.n = 3, .pmax = 5, .dsharp = 4, .seed = 0, .family = GenFamily::kUniform};
  CHECK_THROWS_AS(generate_instance(bad), std::invalid_argument);
}

TEST_CASE("cmd_solve plain and json output") {
  TempFile file("solve.txt", "2 2\n2 2\n3 7\n");
  std::string out;
  CHECK(run_cli({"solve", file.path, "--algo", "lm"}, &out) == 0);
  CHECK(out.find("objective: 2") != std::string::npos);
  CHECK(out.find("early: 1 3") != std::string::npos);

  TempFile single("single.txt", "5 9\n");
  CHECK(run_cli({"solve", single.path, "--algo", "sumset"}, &out) == 0);
  CHECK(out.find("objective: 0") != std::string::npos);

  CHECK(run_cli({"solve", file.path, "--algo", "sumset", "--json"}, &out) == 0);
  CHECK(out.find("\"objective\":2") != std::string::npos);
  CHECK(out.find("\"algorithm\":\"sumset\"") != std::string::npos);
  CHECK(out.find("\"n\":3") != std::string::npos);
  CHECK(out.find("\"P\":7") != std::string::npos);
  CHECK(out.find("\"d_sharp\":2") != std::string::npos);
  CHECK(out.find("\"wall_time_ms\":") != std::string::npos);
}

TEST_CASE("cmd_solve exit codes") {
  TempFile bad("bad.txt", "x y\n");
  std::string err;
  CHECK(run_cli({"solve", bad.path}, nullptr, &err) == 2);
  CHECK(err.find("line 1") != std::string::npos);

  CHECK(run_cli({"solve", "no_such_file.txt"}, nullptr, &err) == 2);

  std::string many;
  for (int i = 0; i < 26; ++i) many += "1 30\n";
  TempFile big("big.txt", many);
  CHECK(run_cli({"solve", big.path, "--algo", "brute"}, nullptr, &err) == 3);

  TempFile ok("ok.txt", "5 9\n");
  CHECK(run_cli({"solve", ok.path, "--algo", "nope"}, nullptr, &err) == 2);

  // P at the representable limit passes validation but no dense solver
  // can allocate for it; the failure must surface as a clean exit.
  TempFile huge("huge.txt", "4611686018427387904 5\n");
  CHECK(run_cli({"solve", huge.path, "--algo", "lm"}, nullptr, &err) == 3);
}

TEST_CASE("cmd_gen behaviour") {
  std::string out1, out2, err;
  CHECK(run_cli({"gen", "--n", "3", "--pmax", "5", "--dsharp", "1", "--seed", "7"}, &out1) == 0);
  CHECK(run_cli({"gen", "--n", "3", "--pmax", "5", "--dsharp", "1", "--seed", "7"}, &out2) == 0);
  CHECK(out1 == out2);
  std::vector<Job> jobs;
  ParseError perr;
  REQUIRE(parse_instance_text(out1, jobs, perr));
  CHECK(build_instance(jobs).d_sharp() == 1);

  CHECK(run_cli({"gen", "--n", "3", "--dsharp", "4"}, nullptr, &err) == 2);
}

TEST_CASE("cmd_solve with cost config") {
  TempFile file("auto.txt", "3 9\n5 9\n7 9\n");
  TempFile config("cost.json", R"({"lawler_moore": 1.0, "sumset": 1.0, "conv": 1.0})");
  std::string out;
  CHECK(run_cli({"solve", file.path, "--algo", "auto", "--cost-config", config.path}, &out) == 0);
  CHECK(out.find("algorithm: sumset") != std::string::npos);

  std::string err;
  CHECK(run_cli({"solve", file.path, "--cost-config", "missing.json"}, nullptr, &err) == 2);
}

TEST_CASE("bench rows and disagreement handling") {
  BenchOptions options;
  options.sizes = {6};
  options.families = {GenFamily::kUniform};
  options.reps = 2;
  options.pmax = 6;
  options.base_seed = 42;
  options.repro_path = "cli_test_repro.txt";

  std::vector<BenchSolver> good = {
      {"lm", [](const JobInstance& inst) { return lawler_moore(inst, false); }},
      {"sumset", [](const JobInstance& inst) { return sumset_scheduler(inst); }},
  };
  std::ostringstream csv, log;
  CHECK(run_instance_bench(options, good, csv, log) == 0);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "algorithm,n,P,d_sharp,D,seed,objective,wall_time_ms");
  std::size_t rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);  // two algorithms x two reps on one instance

  std::vector<BenchSolver> faulty = good;
  faulty.push_back({"broken", [](const JobInstance& inst) {
                      ScheduleResult r = sumset_scheduler(inst);
                      r.objective += 1;
                      return r;
                    }});
  std::ostringstream csv2, log2;
  CHECK(run_instance_bench(options, faulty, csv2, log2) == 4);
  std::ifstream repro(options.repro_path);
  REQUIRE(repro.good());
  std::ostringstream repro_text;
  repro_text << repro.rdbuf();
  std::vector<Job> jobs;
  ParseError perr;
  CHECK(parse_instance_text(repro_text.str(), jobs, perr));
  CHECK(jobs.size() == 1);  // fully minimized: the off-by-one shows on any job
  std::remove(options.repro_path.c_str());
}

TEST_CASE("bench cli validation") {
  std::string err;
  CHECK(run_cli({"bench", "--algos", "lm,sumset"}, nullptr, &err) == 2);  // no sizes
  CHECK(run_cli({"bench", "--sizes", "30", "--algos", "brute"}, nullptr, &err) == 2);
  CHECK(run_cli({"bench", "--sizes", "4", "--algos", "mystery"}, nullptr, &err) == 2);
  CHECK(run_cli({"bench", "--sizes", "4", "--families", "weird"}, nullptr, &err) == 2);
}

TEST_CASE("scaling csv shape") {
  std::vector<ScalingSeries> series = run_conv_scaling({64, 128}, 5);
  REQUIRE(series.size() == 4);
  std::ostringstream csv;
  write_scaling_csv(series, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "algorithm,n,wall_time_ms");
  std::size_t rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 8);
}

TEST_CASE("selftest quick smoke") {
  std::string out;
  CHECK(run_cli({"selftest", "--quick"}, &out) == 0);
  CHECK(out.find("suite numseq") != std::string::npos);
  CHECK(out.find("selftest passed") != std::string::npos);
}
