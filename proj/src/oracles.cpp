#include "wavecast/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "wavecast/errors.hpp"

namespace wavecast {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, kInf);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.adj[u])
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

ApspOracle oracle_apsp(const Graph& g) {
  ApspOracle r;
  r.dist.resize(g.n);
  r.ecc.resize(g.n);
  for (int u = 0; u < g.n; ++u) {
    r.dist[u] = bfs_distances(g, u);
    r.ecc[u] = *std::max_element(r.dist[u].begin(), r.dist[u].end());
    r.diameter = std::max(r.diameter, r.ecc[u]);
  }
  return r;
}

int oracle_girth(const Graph& g) {
  int best = kInf;
  for (auto [eu, ev] : g.edges) {
    // BFS from eu with the edge (eu,ev) removed.
    std::vector<int> dist(g.n, kInf);
    std::deque<int> q{eu};
    dist[eu] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.adj[u]) {
        if ((u == eu && v == ev) || (u == ev && v == eu)) continue;
        if (dist[v] == kInf) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
    if (dist[ev] < kInf) best = std::min(best, dist[ev] + 1);
  }
  return best == kInf ? 0 : best;
}

int oracle_girth_bfs(const Graph& g) {
  int best = kInf;
  for (int s = 0; s < g.n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < g.n; ++v) {
      if (v == s) continue;
      int closer = 0, level = 0;
      for (int w : g.adj[v]) {
        if (dist[w] == dist[v] - 1) ++closer;
        if (dist[w] == dist[v]) ++level;
      }
      if (closer >= 2) best = std::min(best, 2 * dist[v]);
      if (closer >= 1 && level >= 1) best = std::min(best, 2 * dist[v] + 1);
    }
  }
  return best == kInf ? 0 : best;
}

CutOracle oracle_cuts(const Graph& g) {
  // Iterative low-link so deep paths cannot blow the stack. Non-root u is an
  // articulation vertex iff some DFS child subtree cannot reach above u; the
  // root iff it has two or more DFS children. A tree edge (p,u) is a bridge
  // iff low[u] > disc[p].
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<char> is_art(g.n, 0);
  std::vector<std::pair<int, int>> bridges;
  int timer = 0;

  struct Frame {
    int u, parent;
    size_t next = 0;
    int child_count = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1});
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < g.adj[f.u].size()) {
      int v = g.adj[f.u][f.next++];
      if (v == f.parent) continue;  // simple graph: exactly one parent edge
      if (disc[v] == -1) {
        ++f.child_count;
        disc[v] = low[v] = timer++;
        stack.push_back({v, f.u});
      } else {
        low[f.u] = std::min(low[f.u], disc[v]);
      }
    } else {
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.child_count >= 2) is_art[done.u] = 1;  // root rule
        break;
      }
      Frame& pf = stack.back();
      low[pf.u] = std::min(low[pf.u], low[done.u]);
      if (low[done.u] > disc[pf.u])
        bridges.emplace_back(std::min(pf.u, done.u), std::max(pf.u, done.u));
      if (low[done.u] >= disc[pf.u] && stack.size() > 1) is_art[pf.u] = 1;
    }
  }

  CutOracle r;
  r.bridges = std::move(bridges);
  std::sort(r.bridges.begin(), r.bridges.end());
  for (int u = 0; u < g.n; ++u)
    if (is_art[u]) r.articulations.push_back(u);
  r.biconnected = r.articulations.empty();
  return r;
}

TravOracle reference_trav(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees) {
  // Resolve the port-level tree into vertex ids once.
  std::vector<int> parent(g.n, -1);
  std::vector<std::vector<int>> children(g.n);
  int root = -1;
  for (int u = 0; u < g.n; ++u) {
    if (trees[u].is_root())
      root = u;
    else
      parent[u] = ports.neighbor(u, trees[u].parent_port);
    for (int p : trees[u].child_ports) children[u].push_back(ports.neighbor(u, p));
  }
  if (root < 0) fail(Errc::ProtocolViolation, "tree views name no root");

  TravOracle r;
  r.first_prefix.assign(g.n, -1);
  r.second_prefix.assign(g.n, -1);
  r.number.assign(g.n, 0);

  std::vector<int> visits(g.n, 0);
  std::vector<size_t> child_rank(g.n, 0);  // position among parent's children
  for (int u = 0; u < g.n; ++u)
    for (size_t i = 0; i < children[u].size(); ++i) child_rank[children[u][i]] = i;

  int cur = root;
  for (;;) {
    long t = static_cast<long>(r.visit_order.size());
    r.visit_order.push_back(cur);
    int visit = ++visits[cur];
    (visit == 1 ? r.first_prefix : r.second_prefix)[cur] = t;
    if (t % 2 == 0) r.number[cur] = static_cast<int>(t / 2 + 1);
    if (visit == 1) {
      // first visit: descend, or bounce off a leaf
      if (!children[cur].empty()) cur = children[cur].front();
      // leaf: next visit is the same vertex
    } else {
      // second visit: next sibling, else finish at the parent, else stop
      if (cur == root) break;
      int p = parent[cur];
      size_t rank = child_rank[cur];
      cur = (rank + 1 < children[p].size()) ? children[p][rank + 1] : p;
    }
  }
  return r;
}

CubeCheck check_cube_path(const Graph& g, const std::vector<int>& number) {
  std::vector<int> by_number(g.n + 1, -1);
  for (int u = 0; u < g.n; ++u) {
    if (number[u] < 1 || number[u] > g.n || by_number[number[u]] != -1)
      fail(Errc::InvalidParams, "labelling is not a bijection onto 1..n");
    by_number[number[u]] = u;
  }
  CubeCheck c;
  c.pass = true;
  for (int k = 1; k < g.n; ++k) {
    int d = bfs_distances(g, by_number[k])[by_number[k + 1]];
    c.max_step = std::max(c.max_step, d);
    if (d > 3) c.pass = false;
  }
  c.closure = g.n >= 2 ? bfs_distances(g, by_number[g.n])[by_number[1]] : 0;
  return c;
}

}  // namespace wavecast
