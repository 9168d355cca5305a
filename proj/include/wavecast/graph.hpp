#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wavecast {

// Simple connected undirected graph with one distinguished vertex. Vertex ids
// exist only on the harness side (building instances, collecting results);
// protocol handlers never see them.
struct Graph {
  int n = 0;
  int leader = 0;
  std::vector<std::pair<int, int>> edges;  // canonical u < v, sorted
  std::vector<std::vector<int>> adj;       // sorted neighbour lists

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
};

// Validates: dense indices, no self-loops or duplicates, connected, leader in
// range. Throws Error on violation.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges, int leader);

// Convenience form: n inferred as max index + 1 (1 for an empty edge list).
Graph build_graph(std::vector<std::pair<int, int>> edges, int leader);

enum class GraphKind {
  Path,
  Cycle,
  Complete,
  Star,
  RandomTree,
  RandomConnected,
  SubdividedClaw,
};

struct GenParams {
  int n = 0;       // vertex count (Star: leaf count)
  double p = 0.0;  // edge probability for RandomConnected
};

// Deterministic for fixed (kind, params, seed). Leader defaults to vertex 0.
Graph generate(GraphKind kind, GenParams params, std::uint64_t seed);

// Per-vertex bijection incident edges <-> 1..deg. slots[u][p-1] names the
// neighbour behind port p of u and the port that leads back.
struct PortMap {
  struct Link {
    int nbr = -1;
    int back = 0;
  };
  std::vector<std::vector<Link>> slots;

  int degree(int u) const { return static_cast<int>(slots[u].size()); }
  int neighbor(int u, int port) const { return slots[u][port - 1].nbr; }
  int back_port(int u, int port) const { return slots[u][port - 1].back; }
  int port_to(int u, int v) const;  // 0 if u,v not adjacent
};

enum class PortPolicy { AdjacencyOrder, Random };

PortMap assign_ports(const Graph& g, PortPolicy policy, std::uint64_t seed);

// Edge-list text format: line 1 "n m leader", then m lines "u v", '#' starts
// a comment line.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Port override file: lines "u port v" assigning port at u toward v. Every
// incident edge of every vertex must be covered exactly once.
PortMap parse_port_file(const Graph& g, const std::string& text);

}  // namespace wavecast
