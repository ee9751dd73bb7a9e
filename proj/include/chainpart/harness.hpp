#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chainpart/json_io.hpp"
#include "chainpart/online.hpp"

namespace chainpart {

/// Random DAG on n vertices with a random presentation. Extra comparabilities
/// are added between members of a maximum antichain until the width is at
/// most w; width_bound is w. Deterministic in the seed.
OnlineInstance random_online_instance(std::uint64_t seed, std::size_t n, std::size_t w);

enum class Algorithm { kFirstFit, kComposite };
/// kRandom draws random_online_instance(·, n, w); kRn uses gen_Rn(n) and
/// ignores w.
enum class Source { kRandom, kRn };

const char* to_string(Algorithm a);
const char* to_string(Source s);
/// Throws BadParameterError on an unknown name.
Algorithm parse_algorithm(const std::string& name);
Source parse_source(const std::string& name);

struct SizeSpec {
  std::size_t n = 0;
  std::size_t w = 0;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::vector<SizeSpec> sizes;
  std::vector<Algorithm> algorithms;
  Source source = Source::kRandom;
  /// Off makes every ms field 0, so output depends only on the config.
  bool timing = true;
};

struct ResultRow {
  std::size_t instance = 0;
  std::size_t n = 0;
  std::size_t w = 0;
  Algorithm algorithm = Algorithm::kFirstFit;
  std::size_t colors = 0;
  bool valid = false;
  /// name=ok|fail pairs joined by ';', or error=<kind> when the run aborted.
  std::string verdicts;
  double ms = 0;

  bool all_ok() const;
};

/// Instances are numbered in (size, trial) order and each algorithm gets one
/// row per instance. Instance seeds are drawn from a generator seeded with
/// config.seed.
std::vector<ResultRow> run_suite(const ExperimentConfig& config);

/// Header `instance,n,w,algorithm,colors,valid,verdicts,ms` then one line per
/// row.
std::string rows_to_csv(const std::vector<ResultRow>& rows);
Json rows_to_json(const std::vector<ResultRow>& rows);

/// Writes CSV or JSON ("csv" / "json") to path, or to stdout when path is
/// empty or "-". Throws IoError on write failure, BadParameterError on an
/// unknown format.
void emit(const std::vector<ResultRow>& rows, const std::string& format, const std::string& path);

}  // namespace chainpart
