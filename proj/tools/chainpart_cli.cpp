// Command-line front end: instance generation, colorers, verifiers and the
// batch experiment suite.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"
#include "chainpart/generators.hpp"
#include "chainpart/harness.hpp"
#include "chainpart/json_io.hpp"
#include "chainpart/ladder.hpp"
#include "chainpart/reduction.hpp"

using namespace chainpart;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void write(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
  }
}

// Accepts a bare poset document or any document holding one under "poset".
Poset load_poset(const std::string& path) {
  const Json j = read_json_file(path);
  return j.contains("poset") ? poset_from_json(j.at("poset")) : poset_from_json(j);
}

std::string partition_text(const Globals& g, const ChainPartition& part) {
  if (g.format == "csv") {
    std::ostringstream out;
    out << "vertex,chain\n";
    for (Vertex v = 0; v < part.chain_of.size(); ++v) out << v << ',' << part.chain_of[v] << '\n';
    return out.str();
  }
  return partition_to_json(part).dump(2) + "\n";
}

std::vector<SizeSpec> parse_sizes(const std::vector<std::string>& items) {
  std::vector<SizeSpec> out;
  for (const std::string& item : items) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        out.push_back({std::stoul(item), 0});
      } else {
        out.push_back({std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1))});
      }
    } catch (const std::logic_error&) {
      throw BadParameterError("bad size " + item + ", expected n or n:w");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line chain partitioning toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Output path (stdout when omitted)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  int status = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string kind;
  std::size_t gen_n = 1, gen_m = 3, gen_k = 1, gen_w = 2, gen_target = 0;
  std::string core_kind = "I";
  bool closed = false;
  gen->add_option("--kind", kind, "rn|ladder|core|regular-ladder|qk|random")
      ->required()
      ->check(CLI::IsMember({"rn", "ladder", "core", "regular-ladder", "qk", "random"}));
  gen->add_option("--n", gen_n, "R_n size, ladder rungs, or random vertex count");
  gen->add_option("--m", gen_m, "Q_k ladder parameter");
  gen->add_option("--k", gen_k, "Q_k depth or core pattern size");
  gen->add_option("--w", gen_w, "Width");
  gen->add_option("--core", core_kind, "Core kind")->check(CLI::IsMember({"I", "S", "T"}));
  gen->add_option("--target-width", gen_target, "Q_k padding width");
  gen->add_flag("--closed", closed, "List every relation instead of covers");
  gen->callback([&] {
    Json j;
    if (kind == "rn") {
      j = online_instance_to_json(gen_Rn(gen_n), closed);
    } else if (kind == "ladder") {
      j = poset_to_json(gen_ladder(gen_n), closed);
    } else if (kind == "core") {
      const CoreKind ck = core_kind == "I" ? CoreKind::kI : core_kind == "S" ? CoreKind::kS : CoreKind::kT;
      j = poset_to_json(gen_core(ck, gen_w, gen_k), closed);
    } else if (kind == "regular-ladder") {
      const RegularLadder rl = gen_regular_with_ladder(gen_w);
      j = regular_instance_to_json(rl.instance, closed);
      j["ladder"] = rl.ladder.rungs;
    } else if (kind == "qk") {
      const QkFamily q = gen_Qk(gen_m, gen_k, gen_target);
      j = poset_to_json(q.poset, closed);
      j["coloring"] = q.coloring.color;
    } else {
      j = online_instance_to_json(random_online_instance(g.seed, gen_n, gen_w), closed);
    }
    write(g, j.dump(2) + "\n");
  });

  // ff
  auto* ff = app.add_subcommand("ff", "Run First-Fit on an on-line instance");
  std::string instance_path;
  ff->add_option("--instance", instance_path, "OnlineInstance JSON")->required();
  ff->callback([&] {
    FirstFitColorer colorer;
    write(g, partition_text(g, run_online(colorer, online_instance_from_json(read_json_file(instance_path)))));
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Run the recursive width reduction");
  std::size_t reduce_w = 0;
  std::string emit_regular;
  reduce->add_option("--instance", instance_path, "OnlineInstance JSON")->required();
  reduce->add_option("--w", reduce_w, "Width bound (defaults to the instance's)");
  reduce->add_option("--emit-regular", emit_regular, "Write the top-level regular instance here");
  reduce->callback([&] {
    OnlineInstance inst = online_instance_from_json(read_json_file(instance_path));
    if (reduce_w) inst.width_bound = reduce_w;
    const CompositeResult res = composite_color(inst);
    write(g, partition_text(g, res.partition));
    if (!emit_regular.empty()) {
      const Json j = res.levels.empty() ? Json{{"poset", poset_to_json(Poset())}, {"antichains", Json::array()}, {"w", inst.width_bound}}
                                        : regular_instance_to_json(res.levels.front().instance);
      write_text_file(emit_regular, j.dump(2) + "\n");
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a regular instance or a chain partition");
  std::string regular_path, partition_path;
  verify->add_option("--regular", regular_path, "RegularInstance JSON");
  verify->add_option("--instance", instance_path, "Poset or instance JSON");
  verify->add_option("--partition", partition_path, "Partition JSON from ff/reduce");
  verify->callback([&] {
    std::ostringstream out;
    if (!regular_path.empty()) {
      const RegularInstance inst = regular_instance_from_json(read_json_file(regular_path));
      const RegularVerdict v = verify_regular(inst);
      const P6P7Verdict p = verify_p6_p7(inst);
      out << "check,result,detail\n";
      for (RegularCondition c : {RegularCondition::kWidth, RegularCondition::kAntichain, RegularCondition::kR1,
                                 RegularCondition::kR2, RegularCondition::kR3, RegularCondition::kR4, RegularCondition::kR5}) {
        std::string detail;
        for (const RegularViolation& x : v.violations)
          if (x.condition == c && detail.empty()) detail = x.message;
        out << to_string(c) << ',' << (v.has(c) ? "fail" : "ok") << ',' << detail << '\n';
      }
      out << "P6," << (p.p6.empty() ? "ok" : "fail") << ",\n";
      out << "P7," << (p.earliest_to_top.empty() && p.earliest_to_bottom.empty() ? "ok" : "fail") << ",\n";
      if (!v.ok() || !p.ok()) status = 1;
    } else if (!instance_path.empty() && !partition_path.empty()) {
      const Poset poset = load_poset(instance_path);
      const Json pj = read_json_file(partition_path);
      const ChainPartition part{pj.at("chain_of").get<std::vector<std::size_t>>(), pj.at("count").get<std::size_t>()};
      const bool ok = is_chain_partition(poset, part);
      out << "check,result\nchains," << (ok ? "ok" : "fail") << '\n';
      if (!ok) status = 1;
    } else {
      throw CLI::ValidationError("verify", "needs --regular, or --instance with --partition");
    }
    write(g, out.str());
  });

  // ladder
  auto* ladder = app.add_subcommand("ladder", "Longest induced ladder");
  std::size_t cap = 64;
  ladder->add_option("--poset", instance_path, "Poset or instance JSON")->required();
  ladder->add_option("--cap", cap, "Search cap on rungs");
  ladder->callback([&] {
    const LadderSearchResult r = find_max_ladder(load_poset(instance_path), cap);
    write(g, Json{{"m", r.m}, {"rungs", r.witness.rungs}}.dump(2) + "\n");
  });

  // chi-exact
  auto* chi = app.add_subcommand("chi-exact", "Exact First-Fit chromatic number");
  chi->add_option("--poset", instance_path, "Poset or instance JSON")->required();
  chi->callback([&] {
    const Poset p = load_poset(instance_path);
    write(g, Json{{"n", p.size()}, {"width", width(p)}, {"chi_ff", chi_ff_exact(p)}}.dump(2) + "\n");
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Batch experiment");
  ExperimentConfig config;
  std::vector<std::string> sizes;
  std::vector<std::string> algorithms{"first_fit", "composite"};
  std::string source = "random";
  bool no_timing = false;
  suite->add_option("--trials", config.trials, "Instances per size");
  suite->add_option("--sizes", sizes, "List of n:w (or n for rn)")->delimiter(',');
  suite->add_option("--algorithms", algorithms, "first_fit,composite")->delimiter(',');
  suite->add_option("--source", source, "random|rn")->check(CLI::IsMember({"random", "rn"}));
  suite->add_flag("--no-timing", no_timing, "Write 0 in the ms column");
  suite->callback([&] {
    config.seed = g.seed;
    config.sizes = parse_sizes(sizes);
    config.source = parse_source(source);
    config.timing = !no_timing;
    for (const std::string& a : algorithms) config.algorithms.push_back(parse_algorithm(a));
    const std::vector<ResultRow> rows = run_suite(config);
    emit(rows, g.format, g.out);
    for (const ResultRow& r : rows)
      if (!r.all_ok()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
