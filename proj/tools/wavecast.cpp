// wavecast: generate port-numbered graphs, run the labelling/wave pipeline on
// them, and check every output against sequential references.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wavecast/errors.hpp"
#include "wavecast/oracles.hpp"
#include "wavecast/report.hpp"
#include "wavecast/rng.hpp"

using namespace wavecast;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WAVECAST_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      fail(Errc::InvalidParams, "WAVECAST_SEED is not a number");
    }
  }
  return 0;
}

// generator spec: kind[:arg[:arg...]], e.g. path:4, random:20:0.2:7
Graph graph_from_spec(const std::string& spec, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) fail(Errc::InvalidParams, "empty generator spec");
  const std::string& kind = parts[0];
  auto num = [&](size_t i) -> std::optional<std::string> {
    return i < parts.size() ? std::optional(parts[i]) : std::nullopt;
  };
  try {
    if (kind == "path") return generate(GraphKind::Path, {.n = std::stoi(parts.at(1))}, seed);
    if (kind == "cycle") return generate(GraphKind::Cycle, {.n = std::stoi(parts.at(1))}, seed);
    if (kind == "complete")
      return generate(GraphKind::Complete, {.n = std::stoi(parts.at(1))}, seed);
    if (kind == "star") return generate(GraphKind::Star, {.n = std::stoi(parts.at(1))}, seed);
    if (kind == "claw" || kind == "subdivided_claw")
      return generate(GraphKind::SubdividedClaw, {}, seed);
    if (kind == "tree" || kind == "random_tree") {
      if (auto s = num(2)) seed = std::stoull(*s);
      return generate(GraphKind::RandomTree, {.n = std::stoi(parts.at(1))}, seed);
    }
    if (kind == "random" || kind == "random_connected") {
      if (auto s = num(3)) seed = std::stoull(*s);
      return generate(GraphKind::RandomConnected,
                      {.n = std::stoi(parts.at(1)), .p = std::stod(parts.at(2))}, seed);
    }
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::InvalidParams, "bad generator spec '" + spec + "'");
  }
  fail(Errc::InvalidParams, "unknown generator kind '" + kind + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Inputs {
  std::string graph_file, gen_spec, ports_file;
  std::string port_policy = "adjacency";
  int leader = -1;
  std::uint64_t seed = 0;
  long budget = 0;
};

void add_input_flags(CLI::App* cmd, Inputs& in) {
  auto* file = cmd->add_option("--graph", in.graph_file, "edge-list file (n m leader header)");
  auto* gen = cmd->add_option("--gen", in.gen_spec,
                              "generator spec: path:N cycle:N complete:N star:LEAVES claw "
                              "tree:N[:SEED] random:N:P[:SEED]");
  file->excludes(gen);
  cmd->add_option("--leader", in.leader, "override the distinguished vertex");
  cmd->add_option("--ports", in.port_policy, "port policy: adjacency | random")
      ->check(CLI::IsMember({"adjacency", "random"}));
  cmd->add_option("--ports-file", in.ports_file, "explicit port file (lines: u port v)");
  cmd->add_option("--seed", in.seed, "seed for generation and port shuffling");
  cmd->add_option("--budget", in.budget, "round budget (default 64n+64)");
}

Graph load_graph(const Inputs& in) {
  Graph g;
  if (!in.graph_file.empty())
    g = parse_edge_list(slurp(in.graph_file));
  else if (!in.gen_spec.empty())
    g = graph_from_spec(in.gen_spec, in.seed);
  else
    fail(Errc::InvalidParams, "one of --graph or --gen is required");
  if (in.leader >= 0) g = build_graph(g.n, g.edges, in.leader);
  return g;
}

PortMap load_ports(const Inputs& in, const Graph& g) {
  if (!in.ports_file.empty()) return parse_port_file(g, slurp(in.ports_file));
  return assign_ports(
      g, in.port_policy == "random" ? PortPolicy::Random : PortPolicy::AdjacencyOrder, in.seed);
}

proto_pipeline::StopAfter stop_for(const std::string& task) {
  using proto_pipeline::StopAfter;
  if (task == "enumerate") return StopAfter::Label;
  if (task == "apsp" || task == "cut-edges" || task == "cut-vertices" || task == "biconnected")
    return StopAfter::Waves;
  if (task == "diameter") return StopAfter::Diameter;
  return StopAfter::Full;  // girth, all
}

// Report pieces, keyed by task. RunReport fields that a shorter pipeline did
// not produce stay at their -1/empty defaults, so printing is task-gated.
void print_labels(std::ostream& os, const RunReport& r) {
  for (int u = 0; u < r.n; ++u) os << u << ' ' << r.number[u] << '\n';
}

void print_matrix(std::ostream& os, const RunReport& r, bool tsv) {
  std::vector<int> by_number(r.n + 1);
  for (int u = 0; u < r.n; ++u) by_number[r.number[u]] = u;
  if (tsv) {
    for (int i = 1; i <= r.n; ++i) {
      const auto& row = r.dist[by_number[i]];
      for (int j = 1; j <= r.n; ++j) os << (j > 1 ? "\t" : "") << row[by_number[j]];
      os << '\n';
    }
    return;
  }
  os << "dist (rows and columns by label)\n";
  for (int i = 1; i <= r.n; ++i) {
    os << i << ':';
    for (int j = 1; j <= r.n; ++j) os << ' ' << r.dist[by_number[i]][by_number[j]];
    os << '\n';
  }
}

void print_cuts(std::ostream& os, const RunReport& r, bool edges, bool vertices) {
  if (edges) {
    for (auto [u, v] : r.bridges) os << "cut-edge " << u << ' ' << v << '\n';
    os << "cut-edge-count " << r.bridges.size() << '\n';
  }
  if (vertices) {
    for (int u : r.articulations) os << "cut-vertex " << u << '\n';
    os << "cut-vertex-count " << r.articulations.size() << '\n';
  }
}

void print_task(std::ostream& os, const std::string& task, const RunReport& r, bool tsv) {
  if (task == "enumerate" || task == "all") print_labels(os, r);
  if (task == "apsp" || task == "all") print_matrix(os, r, tsv);
  if (task == "diameter" || task == "all") os << "diameter " << r.diameter << '\n';
  if (task == "girth" || task == "all") os << "girth " << r.girth << '\n';
  if (task == "cut-edges" || task == "all") print_cuts(os, r, true, false);
  if (task == "cut-vertices" || task == "all") print_cuts(os, r, false, true);
  if (task == "biconnected" || task == "all")
    os << "biconnected " << (r.biconnected ? "true" : "false") << '\n';
  if (task == "all") {
    os << "vertex  label  level  ecc  cycle  cut-ports  is-cut\n";
    for (int u = 0; u < r.n; ++u) {
      os << u << '\t' << r.number[u] << '\t' << r.level[u] << '\t' << r.ecc[u] << '\t'
         << r.cycle_len[u] << '\t';
      bool any = false;
      for (size_t i = 0; i < r.cut_ports[u].size(); ++i)
        if (r.cut_ports[u][i]) {
          os << (any ? "," : "") << i + 1;
          any = true;
        }
      os << (any ? "" : "-") << '\t'
         << (std::find(r.articulations.begin(), r.articulations.end(), u) !=
                     r.articulations.end()
                 ? 1
                 : 0)
         << '\n';
    }
  }
}

int cmd_generate(const std::string& spec, const std::string& out_path, std::uint64_t seed) {
  Graph g = graph_from_spec(spec, seed);
  std::string text = to_edge_list(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, "cannot write " + out_path);
    out << text;
  }
  return 0;
}

int cmd_run(const Inputs& in, const std::string& task, const std::string& trace_path,
            const std::string& format, bool verify) {
  Graph g = load_graph(in);
  PortMap pm = load_ports(in, g);
  proto_pipeline::Options opts;
  opts.stop_after = verify ? proto_pipeline::StopAfter::Full : stop_for(task);
  opts.record_trace = !trace_path.empty();
  if (in.budget > 0) opts.max_rounds = in.budget;
  auto run = proto_pipeline::run_pipeline(g, pm, opts);
  RunReport rep = assemble_report(g, pm, run);
  print_task(std::cout, task, rep, format == "tsv");
  std::cout << run.metrics.to_text(g.n);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) fail(Errc::ParseError, "cannot write " + trace_path);
    out << run.trace.to_text();
  }
  if (verify) {
    auto ver = verify_report(g, pm, rep);
    std::cout << ver.to_text();
    if (!ver.ok) return 1;
  }
  return 0;
}

int cmd_verify(const Inputs& in) {
  Graph g = load_graph(in);
  PortMap pm = load_ports(in, g);
  proto_pipeline::Options opts;
  if (in.budget > 0) opts.max_rounds = in.budget;
  auto run = proto_pipeline::run_pipeline(g, pm, opts);
  RunReport rep = assemble_report(g, pm, run);
  auto ver = verify_report(g, pm, rep);
  std::cout << ver.to_text();
  return ver.ok ? 0 : 1;
}

// Sweep a built-in corpus: every connected graph on up to 6 vertices plus
// random graphs and trees, one randomised instance each. Independent runs,
// so this could be parallelised; sequential keeps the output ordered.
int cmd_verify_corpus(std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  long total = 0, failed = 0;
  auto visit = [&](const Graph& base) {
    int leader = static_cast<int>(rng.bounded(base.n));
    Graph g = build_graph(base.n, base.edges, leader);
    PortMap pm = assign_ports(g, PortPolicy::Random, rng.next());
    ++total;
    try {
      auto run = proto_pipeline::run_pipeline(g, pm);
      RunReport rep = assemble_report(g, pm, run);
      if (!verify_report(g, pm, rep).ok) ++failed;
    } catch (const Error& e) {
      std::cout << "corpus failure: n=" << g.n << " leader=" << leader << ": "
                << errc_name(e.code()) << '\n';
      ++failed;
    }
  };
  for (int n = 1; n <= 6; ++n) {
    int pairs = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1L << bit)) edges.emplace_back(u, v);
      try {
        visit(build_graph(n, edges, 0));
      } catch (const Error&) {
        continue;  // disconnected sample
      }
    }
    std::cout << "verified all connected graphs on " << n << " vertices\n";
  }
  for (int i = 0; i < 100; ++i) {
    int n = 7 + static_cast<int>(rng.bounded(58));
    double p = std::min(0.9, 2.0 * std::log(n) / n * (0.8 + 0.002 * rng.bounded(1200)));
    visit(generate(GraphKind::RandomConnected, {.n = n, .p = p}, rng.next()));
  }
  for (int i = 0; i < 30; ++i)
    visit(generate(GraphKind::RandomTree, {.n = 2 + static_cast<int>(rng.bounded(127))}, rng.next()));
  std::cout << "corpus " << total << " instances, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synchronous anonymous-network pipeline: vertex labelling with consecutive "
               "labels within distance 3, wave-timed all-pairs distances, diameter, girth "
               "and cut detection, all with constant-size messages"};
  app.require_subcommand(1);

  std::string gen_spec, out_path;
  std::uint64_t gen_seed = default_seed();
  auto* gen = app.add_subcommand("generate", "write a graph in edge-list format");
  gen->add_option("spec", gen_spec, "generator spec (see run --gen)")->required();
  gen->add_option("-o,--out", out_path, "output file (default stdout)");
  gen->add_option("--seed", gen_seed, "generation seed");

  Inputs run_in;
  run_in.seed = default_seed();
  std::string task = "all", trace_path, format = "table";
  bool verify_flag = false;
  auto* run = app.add_subcommand("run", "run the pipeline and print the requested outputs");
  add_input_flags(run, run_in);
  run->add_option("--task", task, "enumerate | apsp | diameter | girth | cut-edges | "
                                  "cut-vertices | biconnected | all")
      ->check(CLI::IsMember({"enumerate", "apsp", "diameter", "girth", "cut-edges",
                             "cut-vertices", "biconnected", "all"}));
  run->add_option("--trace", trace_path, "write the delivery trace to a file");
  run->add_option("--format", format, "table | tsv")->check(CLI::IsMember({"table", "tsv"}));
  run->add_flag("--verify", verify_flag, "also diff every output against the references");

  Inputs ver_in;
  ver_in.seed = default_seed();
  bool corpus = false;
  auto* ver = app.add_subcommand("verify", "run and diff against the references");
  add_input_flags(ver, ver_in);
  ver->add_flag("--corpus", corpus, "sweep the built-in corpus instead of one graph");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_generate(gen_spec, out_path, gen_seed);
    if (run->parsed()) return cmd_run(run_in, task, trace_path, format, verify_flag);
    if (ver->parsed()) return corpus ? cmd_verify_corpus(ver_in.seed) : cmd_verify(ver_in);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return 0;
}
