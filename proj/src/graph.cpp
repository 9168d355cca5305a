#include "wavecast/graph.hpp"

#include <algorithm>
#include <sstream>

#include "wavecast/errors.hpp"
#include "wavecast/rng.hpp"

namespace wavecast {

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges, int leader) {
  if (n <= 0) fail(Errc::InvalidParams, "vertex count must be positive");
  if (leader < 0 || leader >= n)
    fail(Errc::LeaderOutOfRange, "leader " + std::to_string(leader) + " out of range for n=" + std::to_string(n));
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::ParseError, "edge endpoint out of range");
    if (u == v) fail(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::DuplicateEdge, "duplicate edge in input");

  Graph g;
  g.n = n;
  g.leader = leader;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  if (!connected(n, g.adj)) fail(Errc::DisconnectedGraph, "graph is not connected");
  return g;
}

Graph build_graph(std::vector<std::pair<int, int>> edges, int leader) {
  int n = 1;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  n = std::max(n, leader + 1);
  return build_graph(n, std::move(edges), leader);
}

namespace {

Graph gen_random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1 || p < 0.0 || p > 1.0) fail(Errc::InvalidParams, "random graph needs n >= 1 and p in [0,1]");
  Rng master(seed);
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng = master.fork(attempt);
    edges.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(p)) edges.emplace_back(u, v);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    if (connected(n, adj)) return build_graph(n, std::move(edges), 0);
  }
  // Dense sampling kept failing (tiny p); overlay a random spanning tree so
  // generation always terminates.
  Rng rng = master.fork(100);
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.bounded(v));
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) == edges.end())
      edges.emplace_back(e.first, e.second);
  }
  return build_graph(n, std::move(edges), 0);
}

}  // namespace

Graph generate(GraphKind kind, GenParams params, std::uint64_t seed) {
  const int n = params.n;
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case GraphKind::Path:
      if (n < 1) fail(Errc::InvalidParams, "path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return build_graph(n, std::move(edges), 0);
    case GraphKind::Cycle:
      if (n < 3) fail(Errc::InvalidParams, "cycle needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      return build_graph(n, std::move(edges), 0);
    case GraphKind::Complete:
      if (n < 1) fail(Errc::InvalidParams, "complete graph needs n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return build_graph(n, std::move(edges), 0);
    case GraphKind::Star:
      if (n < 1) fail(Errc::InvalidParams, "star needs at least one leaf");
      for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
      return build_graph(n + 1, std::move(edges), 0);
    case GraphKind::RandomTree: {
      if (n < 1) fail(Errc::InvalidParams, "tree needs n >= 1");
      Rng rng(seed);
      for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng.bounded(v)), v);
      return build_graph(n, std::move(edges), 0);
    }
    case GraphKind::RandomConnected:
      return gen_random_connected(n, params.p, seed);
    case GraphKind::SubdividedClaw:
      // K_{1,3} with every edge subdivided once: centre 0, middles 1..3,
      // leaves 4..6.
      return build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}, 0);
  }
  fail(Errc::InvalidParams, "unknown graph kind");
}

int PortMap::port_to(int u, int v) const {
  for (int p = 1; p <= degree(u); ++p)
    if (slots[u][p - 1].nbr == v) return p;
  return 0;
}

PortMap assign_ports(const Graph& g, PortPolicy policy, std::uint64_t seed) {
  // Decide, per vertex, the neighbour order; port p = position p in order.
  std::vector<std::vector<int>> order(g.n);
  for (int u = 0; u < g.n; ++u) order[u] = g.adj[u];
  if (policy == PortPolicy::Random) {
    Rng master(seed);
    for (int u = 0; u < g.n; ++u) {
      Rng rng = master.fork(static_cast<std::uint64_t>(u));
      auto& o = order[u];
      for (int i = static_cast<int>(o.size()) - 1; i > 0; --i)
        std::swap(o[i], o[rng.bounded(static_cast<std::uint64_t>(i + 1))]);
    }
  }
  PortMap pm;
  pm.slots.assign(g.n, {});
  for (int u = 0; u < g.n; ++u) {
    pm.slots[u].resize(order[u].size());
    for (int p = 1; p <= static_cast<int>(order[u].size()); ++p)
      pm.slots[u][p - 1].nbr = order[u][p - 1];
  }
  for (int u = 0; u < g.n; ++u)
    for (int p = 1; p <= pm.degree(u); ++p) {
      int v = pm.slots[u][p - 1].nbr;
      pm.slots[u][p - 1].back = pm.port_to(v, u);
    }
  return pm;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1, leader = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m >> leader)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) { n = -1; continue; }
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'n m leader'");
      }
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) fail(Errc::ParseError, "empty graph file");
  if (static_cast<int>(edges.size()) != m)
    fail(Errc::ParseError, "header announces " + std::to_string(m) + " edges, file has " +
                               std::to_string(edges.size()));
  return build_graph(n, std::move(edges), leader);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << ' ' << g.leader << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

PortMap parse_port_file(const Graph& g, const std::string& text) {
  PortMap pm;
  pm.slots.assign(g.n, {});
  for (int u = 0; u < g.n; ++u) pm.slots[u].resize(g.degree(u));
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, port, v;
    if (!(ls >> u >> port >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail(Errc::ParseError, "port file line " + std::to_string(lineno) + ": expected 'u port v'");
    }
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
      fail(Errc::ParseError, "port file line " + std::to_string(lineno) + ": no such edge");
    if (port < 1 || port > g.degree(u))
      fail(Errc::ParseError, "port file line " + std::to_string(lineno) + ": port out of range");
    if (pm.slots[u][port - 1].nbr != -1)
      fail(Errc::ParseError, "port file line " + std::to_string(lineno) + ": port assigned twice");
    pm.slots[u][port - 1].nbr = v;
  }
  for (int u = 0; u < g.n; ++u)
    for (int p = 1; p <= g.degree(u); ++p)
      if (pm.slots[u][p - 1].nbr == -1)
        fail(Errc::ParseError, "port file leaves port " + std::to_string(p) + " of vertex " +
                                   std::to_string(u) + " unassigned");
  for (int u = 0; u < g.n; ++u)
    for (int p = 1; p <= g.degree(u); ++p)
      pm.slots[u][p - 1].back = pm.port_to(pm.slots[u][p - 1].nbr, u);
  return pm;
}

}  // namespace wavecast
