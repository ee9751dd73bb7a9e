#include "chainpart/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"
#include "chainpart/generators.hpp"
#include "chainpart/reduction.hpp"

namespace chainpart {

OnlineInstance random_online_instance(std::uint64_t seed, std::size_t n, std::size_t w) {
  if (n == 0 || w == 0) throw BadParameterError("random_online_instance: n and w must be positive");
  std::mt19937_64 rng(seed);
  // rank[v] is a hidden linear extension; every relation goes up in rank.
  std::vector<Vertex> rank(n);
  std::iota(rank.begin(), rank.end(), Vertex{0});
  std::shuffle(rank.begin(), rank.end(), rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = 0.05 + 0.4 * unit(rng);

  std::vector<Relation> rel;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (rank[u] < rank[v] && unit(rng) < density) rel.emplace_back(u, v);
  Poset poset = Poset::from_relations(n, rel);

  while (width(poset) > w) {
    const Antichain a = maximum_antichain(poset);
    std::size_t i = rng() % a.size();
    std::size_t j = rng() % (a.size() - 1);
    if (j >= i) ++j;
    Vertex u = a.members[i], v = a.members[j];
    if (rank[u] > rank[v]) std::swap(u, v);
    rel.emplace_back(u, v);
    poset = Poset::from_relations(n, rel);
  }

  std::vector<Vertex> presentation(n);
  std::iota(presentation.begin(), presentation.end(), Vertex{0});
  std::shuffle(presentation.begin(), presentation.end(), rng);
  return OnlineInstance{std::move(poset), std::move(presentation), w};
}

const char* to_string(Algorithm a) { return a == Algorithm::kFirstFit ? "first_fit" : "composite"; }

const char* to_string(Source s) { return s == Source::kRandom ? "random" : "rn"; }

Algorithm parse_algorithm(const std::string& name) {
  if (name == "first_fit" || name == "ff") return Algorithm::kFirstFit;
  if (name == "composite") return Algorithm::kComposite;
  throw BadParameterError("unknown algorithm " + name);
}

Source parse_source(const std::string& name) {
  if (name == "random") return Source::kRandom;
  if (name == "rn") return Source::kRn;
  throw BadParameterError("unknown source " + name);
}

bool ResultRow::all_ok() const { return valid && verdicts.find("fail") == std::string::npos && verdicts.find("error") == std::string::npos; }

namespace {

// Pairwise check of the chain labels, independent of any colorer.
bool chains_valid(const Poset& poset, const std::vector<std::size_t>& label) {
  if (label.size() != poset.size()) return false;
  for (Vertex u = 0; u < poset.size(); ++u) {
    if (label[u] == 0) return false;
    for (Vertex v = u + 1; v < poset.size(); ++v)
      if (label[u] == label[v] && poset.incomparable(u, v)) return false;
  }
  return true;
}

std::string verdict(const char* name, bool ok) { return std::string(name) + (ok ? "=ok" : "=fail"); }

const char* error_kind(const Error& e) {
  if (dynamic_cast<const InvalidMoveError*>(&e)) return "error=invalid_move";
  if (dynamic_cast<const CapExceededError*>(&e)) return "error=cap_exceeded";
  if (dynamic_cast<const WidthExceededError*>(&e)) return "error=width_exceeded";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "error=invariant";
  return "error=other";
}

void run_row(const OnlineInstance& inst, ResultRow& row) {
  std::vector<std::string> parts;
  if (row.algorithm == Algorithm::kFirstFit) {
    FirstFitColorer ff;
    const ChainPartition part = run_online(ff, inst);
    row.colors = part.count;
    row.valid = chains_valid(inst.poset, part.chain_of);
    parts.push_back(verdict("grundy", verify_grundy(inst.poset, GrundyColoring{part.chain_of, part.count}).ok()));
  } else {
    const CompositeResult res = composite_color(inst);
    row.colors = res.partition.count;
    row.valid = chains_valid(inst.poset, res.partition.chain_of);
    bool regular = true, p6p7 = true;
    for (const RegularEmission& level : res.levels) {
      regular = regular && verify_regular(level.instance).ok();
      p6p7 = p6p7 && verify_p6_p7(level.instance).ok();
    }
    parts.push_back(verdict("regular", regular));
    parts.push_back(verdict("p6p7", p6p7));
  }
  std::string joined = verdict("chains", row.valid);
  for (const std::string& p : parts) joined += ";" + p;
  row.verdicts = joined;
}

}  // namespace

std::vector<ResultRow> run_suite(const ExperimentConfig& config) {
  std::vector<ResultRow> rows;
  std::mt19937_64 seeds(config.seed);
  std::size_t id = 0;
  for (const SizeSpec& size : config.sizes) {
    for (std::size_t t = 0; t < config.trials; ++t, ++id) {
      const std::uint64_t s = seeds();
      const OnlineInstance inst =
          config.source == Source::kRn ? gen_Rn(size.n) : random_online_instance(s, size.n, size.w);
      for (Algorithm a : config.algorithms) {
        ResultRow row;
        row.instance = id;
        row.n = size.n;
        row.w = inst.width_bound;
        row.algorithm = a;
        const auto start = std::chrono::steady_clock::now();
        try {
          run_row(inst, row);
        } catch (const Error& e) {
          row.valid = false;
          row.verdicts = error_kind(e);
        }
        if (config.timing) {
          row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "instance,n,w,algorithm,colors,valid,verdicts,ms\n";
  for (const ResultRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.w << ',' << to_string(r.algorithm) << ',' << r.colors << ','
        << (r.valid ? "true" : "false") << ',' << r.verdicts << ',' << format_ms(r.ms) << '\n';
  }
  return out.str();
}

Json rows_to_json(const std::vector<ResultRow>& rows) {
  Json out = Json::array();
  for (const ResultRow& r : rows) {
    out.push_back({{"instance", r.instance},
                   {"n", r.n},
                   {"w", r.w},
                   {"algorithm", to_string(r.algorithm)},
                   {"colors", r.colors},
                   {"valid", r.valid},
                   {"verdicts", r.verdicts},
                   {"ms", r.ms}});
  }
  return out;
}

void emit(const std::vector<ResultRow>& rows, const std::string& format, const std::string& path) {
  std::string text;
  if (format == "csv") {
    text = rows_to_csv(rows);
  } else if (format == "json") {
    text = rows_to_json(rows).dump(2) + "\n";
  } else {
    throw BadParameterError("unknown format " + format);
  }
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("cannot write to stdout");
  } else {
    write_text_file(path, text);
  }
}

}  // namespace chainpart
