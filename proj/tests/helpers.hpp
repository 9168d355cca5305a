#pragma once

#include <vector>

#include "wavecast/graph.hpp"
#include "wavecast/rng.hpp"

namespace wavecast::testutil {

inline Graph path(int n, int leader = 0) {
  Graph g = generate(GraphKind::Path, {.n = n}, 0);
  return build_graph(g.n, g.edges, leader);
}

inline Graph cycle(int n, int leader = 0) {
  Graph g = generate(GraphKind::Cycle, {.n = n}, 0);
  return build_graph(g.n, g.edges, leader);
}

inline Graph star(int leaves, int leader = 0) {
  Graph g = generate(GraphKind::Star, {.n = leaves}, 0);
  return build_graph(g.n, g.edges, leader);
}

inline Graph complete(int n, int leader = 0) {
  Graph g = generate(GraphKind::Complete, {.n = n}, 0);
  return build_graph(g.n, g.edges, leader);
}

// two triangles sharing vertex 0
inline Graph bowtie(int leader = 0) {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}, leader);
}

// a small mixed bag for property tests: every named shape plus random graphs
// and trees with randomised leaders
inline std::vector<std::pair<Graph, std::uint64_t>> small_corpus(int random_count = 25,
                                                                 std::uint64_t seed = 42) {
  std::vector<std::pair<Graph, std::uint64_t>> out;
  Rng rng(seed);
  auto push = [&](Graph g) {
    int leader = static_cast<int>(rng.bounded(g.n));
    out.emplace_back(build_graph(g.n, g.edges, leader), rng.next());
  };
  push(generate(GraphKind::Path, {.n = 1}, 0));
  push(generate(GraphKind::Path, {.n = 2}, 0));
  push(generate(GraphKind::Path, {.n = 6}, 0));
  push(generate(GraphKind::Cycle, {.n = 4}, 0));
  push(generate(GraphKind::Cycle, {.n = 5}, 0));
  push(generate(GraphKind::Cycle, {.n = 9}, 0));
  push(generate(GraphKind::Star, {.n = 5}, 0));
  push(generate(GraphKind::Complete, {.n = 5}, 0));
  push(generate(GraphKind::SubdividedClaw, {}, 0));
  push(bowtie());
  for (int i = 0; i < random_count; ++i) {
    int n = 3 + static_cast<int>(rng.bounded(18));
    double p = 0.15 + 0.5 * (rng.bounded(1000) / 1000.0);
    push(generate(GraphKind::RandomConnected, {.n = n, .p = p}, rng.next()));
  }
  for (int i = 0; i < random_count / 2; ++i) {
    int n = 2 + static_cast<int>(rng.bounded(30));
    push(generate(GraphKind::RandomTree, {.n = n}, rng.next()));
  }
  return out;
}

}  // namespace wavecast::testutil
