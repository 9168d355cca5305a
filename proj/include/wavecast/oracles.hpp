#pragma once

#include <utility>
#include <vector>

#include "wavecast/graph.hpp"
#include "wavecast/tree.hpp"

namespace wavecast {

// Sequential reference algorithms. Every distributed output in this project
// is checked against one of these; none of them shares code with the
// protocols they vet.

std::vector<int> bfs_distances(const Graph& g, int src);

struct ApspOracle {
  std::vector<std::vector<int>> dist;
  std::vector<int> ecc;
  int diameter = 0;
};
ApspOracle oracle_apsp(const Graph& g);

// Exact girth, 0 for acyclic: for each edge, shortest alternative path
// between its endpoints plus one, minimised.
int oracle_girth(const Graph& g);

// Cross-check variant: per-source BFS arrival pattern (two equidistant
// neighbours give an even cycle, an equidistant neighbour pair an odd one).
int oracle_girth_bfs(const Graph& g);

struct CutOracle {
  std::vector<std::pair<int, int>> bridges;    // canonical u < v, sorted
  std::vector<int> articulations;              // sorted
  bool biconnected = false;                    // no articulation vertex
};
CutOracle oracle_cuts(const Graph& g);

// The definitional double-visit walk over a rooted ordered tree, executed
// centrally: visit order, per-vertex visit prefixes, and the induced
// labelling (a vertex is labelled k at its even-prefix visit).
struct TravOracle {
  std::vector<int> visit_order;          // 2n entries
  std::vector<long> first_prefix;        // visits before first visit
  std::vector<long> second_prefix;       // visits before second visit
  std::vector<int> number;               // 1..n
};
TravOracle reference_trav(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees);

struct CubeCheck {
  bool pass = false;           // consecutive labels within distance 3
  int max_step = 0;            // largest consecutive-label distance seen
  int closure = 0;             // dist(v_n, v_1)
};
CubeCheck check_cube_path(const Graph& g, const std::vector<int>& number);

}  // namespace wavecast
