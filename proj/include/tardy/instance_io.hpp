#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tardy/model.hpp"

namespace tardy {

// Instance text format: one job per line as "p d" (whitespace
// separated), '#' starts a comment, blank lines ignored. LF or CRLF is
// accepted on input; LF is emitted.
struct ParseError {
  std::size_t line = 0;
  std::string message;
};

// Parses instance text. On failure fills err (with a 1-based line
// number) and returns false.
bool parse_instance_text(const std::string& text, std::vector<Job>& jobs, ParseError& err);

// Reads and parses a file; a missing/unreadable file reports line 0.
bool parse_instance_file(const std::string& path, std::vector<Job>& jobs, ParseError& err);

std::string render_instance(const std::vector<Job>& jobs);

enum class GenFamily { kUniform, kSubsetSum, kTight };

struct GenParams {
  std::size_t n = 1;
  std::int64_t pmax = 1;
  std::size_t dsharp = 1;
  std::uint64_t seed = 0;
  GenFamily family = GenFamily::kUniform;
};

// Deterministic instance generator (SplitMix64 driven; identical
// params yield identical jobs on every platform).
//  - uniform:   p ~ U[1,pmax]; due dates drawn from dsharp distinct
//               values <= P, each value used at least once.
//  - subsetsum: all due dates equal floor(P/2) (requires dsharp == 1).
//  - tight:     dsharp contiguous job blocks with due dates jittered
//               around the block prefix sums.
// Throws std::invalid_argument on parameter violations.
std::vector<Job> generate_instance(const GenParams& params);

const char* family_name(GenFamily family);
bool family_from_name(const std::string& name, GenFamily& out);

}  // namespace tardy
