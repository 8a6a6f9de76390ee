// Command-line driver: lpterm analyze FILE ...

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpterm/analyzer.hpp"
#include "lpterm/dot.hpp"
#include "lpterm/oracle.hpp"
#include "lpterm/parser.hpp"
#include "lpterm/report.hpp"

namespace {

struct Options {
  std::string file;
  std::string query;
  bool all_moded = false;
  bool all_concrete = false;
  std::size_t repetition = 3;
  int algorithm = 2;
  bool no_heuristic1 = false;
  bool no_occurs_check = false;
  std::size_t max_nodes = 100000;
  bool prune = false;
  bool prune_any = false;
  std::string probe;
  std::string trace;
  bool json = false;
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

std::string trace_path(const std::string& base, std::size_t k, std::size_t total) {
  if (total == 1) return base;
  auto dot = base.rfind(".dot");
  std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
  return stem + "_" + std::to_string(k) + ".dot";
}

int run_analyze(const Options& o) {
  using namespace lpterm;
  std::string text;
  if (!read_file(o.file, text)) {
    std::cerr << o.file << ": cannot read file\n";
    return 1;
  }
  auto parsed = parse_program(text);
  if (!parsed.ok()) {
    for (const SourceError& e : parsed.errors) {
      std::cerr << o.file << ":" << to_string(e) << "\n";
    }
    return 1;
  }
  const Program& program = *parsed.value;

  Config cfg;
  cfg.repetition = o.repetition;
  cfg.algorithm = o.algorithm;
  cfg.heuristic1 = !o.no_heuristic1;
  cfg.occurs_check = !o.no_occurs_check;
  cfg.max_nodes = o.max_nodes;
  cfg.keep_tree = !o.trace.empty();
  cfg.prune_any_algorithm = o.prune_any;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  std::optional<std::pair<std::size_t, std::size_t>> probe;
  if (!o.probe.empty()) {
    std::size_t depth = 0, len = 0;
    char comma = 0;
    std::istringstream ps(o.probe);
    if (!(ps >> depth >> comma >> len) || comma != ',') {
      std::cerr << "--probe expects DEPTH,LEN\n";
      return 1;
    }
    probe.emplace(depth, len);
  }

  std::vector<AnalysisReport> reports;
  if (!o.query.empty()) {
    auto q = parse_query(o.query);
    if (!q.ok()) {
      for (const SourceError& e : q.errors) std::cerr << "query:" << to_string(e) << "\n";
      return 1;
    }
    try {
      reports.push_back(analyze(program, *q.value, cfg));
    } catch (const std::invalid_argument& e) {
      std::cerr << "query: " << e.what() << "\n";
      return 1;
    }
  } else if (o.all_moded) {
    reports = analyze_all(program, cfg, o.prune);
  } else {
    for (const Query& q : enumerate_concrete_queries(program)) {
      reports.push_back(analyze(program, q, cfg));
    }
  }

  int status = 0;
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const AnalysisReport& r = reports[k];
    if (r.error) status = 2;
    for (const std::string& d : r.diagnostics) std::cerr << "warning: " << d << "\n";
    if (r.error) std::cerr << "error: " << r.error_message << "\n";
    nlohmann::json j = to_json(r, program);
    if (probe) {
      BoundedForestSummary s = forest_probe(program, r.query, probe->first, probe->second);
      std::size_t longest = 0;
      for (std::size_t l : s.longest) longest = std::max(longest, l);
      j["probe"] = {{"instances", s.instances},
                    {"longest", longest},
                    {"reached_cap", s.reached_cap},
                    {"all_finite", s.all_finite},
                    {"errors", s.errors}};
      if (!o.json) {
        std::cerr << "probe " << to_string(r.query) << ": instances=" << s.instances
                  << " longest=" << longest
                  << " reached_cap=" << (s.reached_cap ? "yes" : "no") << "\n";
      }
    }
    if (r.tree) {
      std::ofstream dot(trace_path(o.trace, k, reports.size()));
      dot << export_dot(*r.tree, program);
    }
    if (o.json) {
      out.push_back(std::move(j));
    } else {
      std::cout << tsv_line(r) << std::endl;
    }
  }
  if (o.json) std::cout << out.dump(2) << std::endl;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic termination analysis of logic programs"};
  app.require_subcommand(1);
  Options o;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze queries against a program");
  analyze->add_option("FILE", o.file, "Program file")->required();
  auto* q = analyze->add_option("-q,--query", o.query, "Query, e.g. \"p(@I, V2)\"");
  auto* moded = analyze->add_flag("--all-moded", o.all_moded, "All most general moded queries, then the concrete ones");
  auto* concrete = analyze->add_flag("--all-concrete", o.all_concrete, "All concrete queries");
  q->excludes(moded)->excludes(concrete);
  moded->excludes(concrete);
  analyze->add_option("-r,--repetition", o.repetition, "Repetition number (>= 3)");
  analyze->add_option("--algorithm", o.algorithm, "1 or 2")->check(CLI::IsMember({1, 2}));
  analyze->add_flag("--no-heuristic1", o.no_heuristic1, "Disable condition (c)");
  analyze->add_flag("--no-occurs-check", o.no_occurs_check, "Unify without occurs check");
  analyze->add_option("--max-nodes", o.max_nodes, "Node limit per tree");
  analyze->add_flag("--prune", o.prune, "Reuse terminating verdicts for larger input sets");
  analyze->add_flag("--prune-any-algorithm", o.prune_any,
                    "Let --prune apply under algorithm 2 as well");
  analyze->add_option("--probe", o.probe, "Bounded forest probe: DEPTH,LEN");
  analyze->add_option("--trace", o.trace, "Write the tree as Graphviz DOT");
  analyze->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (o.query.empty() && !o.all_moded && !o.all_concrete) {
    std::cerr << "one of -q, --all-moded, --all-concrete is required\n";
    return 1;
  }
  return run_analyze(o);
}
