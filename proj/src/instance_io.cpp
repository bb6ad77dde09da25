#include "tardy/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tardy/rng.hpp"

namespace tardy {

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

bool parse_instance_text(const std::string& text, std::vector<Job>& jobs, ParseError& err) {
  jobs.clear();
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::vector<std::string_view> tokens;
    std::string_view rest = line;
    while (!rest.empty()) {
      std::size_t start = rest.find_first_not_of(" \t");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      std::size_t end = rest.find_first_of(" \t");
      tokens.push_back(rest.substr(0, end));
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      err = {lineno, "expected two integers \"p d\""};
      return false;
    }
    Job job;
    if (!parse_int(tokens[0], job.p) || !parse_int(tokens[1], job.d)) {
      err = {lineno, "expected two integers \"p d\""};
      return false;
    }
    if (job.p < 1) {
      err = {lineno, "processing time must be >= 1"};
      return false;
    }
    if (job.d < 0) {
      err = {lineno, "due date must be >= 0"};
      return false;
    }
    jobs.push_back(job);
  }
  if (jobs.empty()) {
    err = {lineno, "no jobs in file"};
    return false;
  }
  return true;
}

bool parse_instance_file(const std::string& path, std::vector<Job>& jobs, ParseError& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = {0, "cannot open file: " + path};
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), jobs, err);
}

std::string render_instance(const std::vector<Job>& jobs) {
  std::string out;
  for (const Job& j : jobs) {
    out += std::to_string(j.p);
    out += ' ';
    out += std::to_string(j.d);
    out += '\n';
  }
  return out;
}

std::vector<Job> generate_instance(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  if (params.pmax < 1) throw std::invalid_argument("generate_instance: pmax must be >= 1");
  if (params.dsharp < 1 || params.dsharp > params.n)
    throw std::invalid_argument("generate_instance: need 1 <= dsharp <= n");
  if (params.family == GenFamily::kSubsetSum && params.dsharp != 1)
    throw std::invalid_argument("generate_instance: subsetsum family requires dsharp == 1");

  SplitMix64 rng(params.seed);
  std::vector<Job> jobs(params.n);
  std::int64_t total = 0;
  for (Job& j : jobs) {
    j.p = rng.range(1, params.pmax);
    total += j.p;
  }

  switch (params.family) {
    case GenFamily::kUniform: {
      std::set<std::int64_t> pool;
      while (pool.size() < params.dsharp)
        pool.insert(rng.range(1, std::max<std::int64_t>(total, static_cast<std::int64_t>(params.dsharp))));
      std::vector<std::int64_t> dues(pool.begin(), pool.end());
      // First dsharp jobs pin one value each so all values are realized.
      for (std::size_t i = 0; i < params.n; ++i)
        jobs[i].d = i < params.dsharp
                        ? dues[i]
                        : dues[static_cast<std::size_t>(rng.below(dues.size()))];
      break;
    }
    case GenFamily::kSubsetSum: {
      const std::int64_t due = std::max<std::int64_t>(1, total / 2);
      for (Job& j : jobs) j.d = due;
      break;
    }
    case GenFamily::kTight: {
      std::vector<std::int64_t> prefix(params.n);
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < params.n; ++i) {
        acc += jobs[i].p;
        prefix[i] = acc;
      }
      std::int64_t prev_due = 0;
      for (std::size_t blk = 0; blk < params.dsharp; ++blk) {
        const std::size_t begin = blk * params.n / params.dsharp;
        const std::size_t end = (blk + 1) * params.n / params.dsharp;
        const std::int64_t base = prefix[end - 1];
        const std::int64_t jitter = rng.range(-params.pmax, params.pmax);
        const std::int64_t due = std::max(prev_due + 1, std::max<std::int64_t>(1, base + jitter));
        for (std::size_t i = begin; i < end; ++i) jobs[i].d = due;
        prev_due = due;
      }
      break;
    }
  }
  return jobs;
}

const char* family_name(GenFamily family) {
  switch (family) {
    case GenFamily::kUniform: return "uniform";
    case GenFamily::kSubsetSum: return "subsetsum";
    case GenFamily::kTight: return "tight";
  }
  return "unknown";
}

bool family_from_name(const std::string& name, GenFamily& out) {
  if (name == "uniform") out = GenFamily::kUniform;
  else if (name == "subsetsum") out = GenFamily::kSubsetSum;
  else if (name == "tight") out = GenFamily::kTight;
  else return false;
  return true;
}

}  // namespace tardy
