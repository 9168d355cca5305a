#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "wavecast/oracles.hpp"
#include "wavecast/proto/bfs.hpp"
#include "wavecast/proto/enumerate.hpp"
#include "wavecast/proto/unary.hpp"
#include "wavecast/proto/waves.hpp"

using namespace wavecast;
using namespace wavecast::proto_waves;

namespace {

struct Prepared {
  std::vector<int> number, level;
};

Prepared prepare(const Graph& g, const PortMap& pm) {
  auto trees = proto_bfs::run_bfs(g, pm).trees;
  auto en = proto_enum::run_enumeration(g, pm, trees);
  auto dc = proto_unary::run_dist_cal(g, pm, trees);
  return {en.number, dc.level};
}

WaveRun waves_of(const Graph& g, const PortMap& pm, long t1 = 2) {
  auto prep = prepare(g, pm);
  return run_waves(g, pm, prep.number, prep.level, t1);
}

WaveRecord rec_at(long tau, std::vector<std::pair<int, int>> arrivals = {}, bool own = false) {
  WaveRecord r;
  r.first_round = tau;
  r.own = own;
  r.arrivals = std::move(arrivals);
  return r;
}

}  // namespace

TEST_CASE("distance arithmetic over a crafted log") {
  std::vector<WaveRecord> log{rec_at(7, {}, true), rec_at(7 + 5 + 4), rec_at(7 + 10 + 1)};
  CHECK(distances_from_log(log, 7) == std::vector<int>{0, 4, 1});
}

TEST_CASE("emission slots follow the 5-round schedule") {
  Graph g = generate(GraphKind::RandomConnected, {.n = 14, .p = 0.3}, 3);
  PortMap pm = assign_ports(g, PortPolicy::AdjacencyOrder, 0);
  const long t1 = 10;
  auto run = waves_of(g, pm, t1);
  for (int u = 0; u < g.n; ++u) {
    const auto& s = run.states[u];
    CHECK(s.emit_round == t1 + 5 * (s.number - 1));  // number 4 at t1=10 emits at 25
    CHECK(s.first_wave_round == t1);
  }
}

TEST_CASE("triangle: both non-sources hear the wave twice, the source never") {
  Graph tri = testutil::complete(3);
  PortMap pm = assign_ports(tri, PortPolicy::AdjacencyOrder, 0);
  auto run = waves_of(tri, pm);
  for (int u = 1; u <= 2; ++u) {
    const auto& rec = run.states[u].log.front();  // wave 1, from the leader
    REQUIRE(rec.arrivals.size() == 2);
    CHECK(rec.arrivals[0].second == 0);
    CHECK(rec.arrivals[1].second == 1);
    CHECK(rec.arrivals[0].first != rec.arrivals[1].first);
  }
  const auto& own = run.states[0].log.front();
  CHECK(own.own);
  CHECK(own.arrivals.empty());
  // odd loop of length 3 detected everywhere
  for (int u = 0; u < 3; ++u) CHECK(run.states[u].results.cycle_len == 3);
}

TEST_CASE("path: tree flooding arrives exactly once") {
  Graph p3 = testutil::path(3);
  PortMap pm = assign_ports(p3, PortPolicy::AdjacencyOrder, 0);
  auto run = waves_of(p3, pm);
  for (int u = 1; u <= 2; ++u) {
    const auto& rec = run.states[u].log.front();
    REQUIRE(rec.arrivals.size() == 1);
    CHECK(rec.arrivals[0].second == 0);
  }
  for (int u = 0; u < 3; ++u) CHECK(run.states[u].results.cycle_len == 0);
}

TEST_CASE("four-cycle: the far vertex hears both fronts together") {
  Graph c4 = testutil::cycle(4);
  PortMap pm = assign_ports(c4, PortPolicy::AdjacencyOrder, 0);
  const long t1 = 2;
  auto run = waves_of(c4, pm, t1);
  int far = -1;
  for (int u = 0; u < 4; ++u)
    if (bfs_distances(c4, 0)[u] == 2) far = u;
  const auto& rec = run.states[far].log.front();
  CHECK(rec.first_round == t1 + 2);
  REQUIRE(rec.arrivals.size() == 2);
  CHECK(rec.arrivals[0].second == 0);
  CHECK(rec.arrivals[1].second == 0);
  CHECK(run.states[far].results.cycle_len == 4);
}

TEST_CASE("six-cycle: the antipodal vertex detects the even loop") {
  Graph c6 = testutil::cycle(6);
  PortMap pm = assign_ports(c6, PortPolicy::AdjacencyOrder, 0);
  auto run = waves_of(c6, pm);
  int far = -1;
  for (int u = 0; u < 6; ++u)
    if (bfs_distances(c6, 0)[u] == 3) far = u;
  // wave 1 reaches the antipode along both arcs at once
  const auto& rec = run.states[far].log.front();
  REQUIRE(rec.arrivals.size() == 2);
  CHECK(rec.arrivals[0].second == 0);
  CHECK(rec.arrivals[1].second == 0);
  for (int u = 0; u < 6; ++u) CHECK(run.states[u].results.cycle_len == 6);
}

TEST_CASE("triangle with a pendant: exactly the pendant edge separates") {
  Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {2, 3}}, 0);
  PortMap pm = assign_ports(g, PortPolicy::AdjacencyOrder, 0);
  auto run = waves_of(g, pm);
  for (auto [u, v] : g.edges) {
    bool flagged = run.states[u].results.port_cut[pm.port_to(u, v) - 1];
    CHECK(flagged == (u == 2 && v == 3));
  }
}

TEST_CASE("two vertices resolve each other") {
  Graph p2 = testutil::path(2);
  PortMap pm = assign_ports(p2, PortPolicy::AdjacencyOrder, 0);
  auto run = waves_of(p2, pm);
  CHECK(run.states[0].results.dist_by_number == std::vector<int>{0, 1});
  CHECK(run.states[1].results.dist_by_number == std::vector<int>{1, 0});
  // the only edge separates: flagged at both ends
  CHECK(run.states[0].results.port_cut == std::vector<char>{1});
  CHECK(run.states[1].results.port_cut == std::vector<char>{1});
  CHECK_FALSE(run.states[0].results.is_cut);
  CHECK_FALSE(run.states[1].results.is_cut);
}

TEST_CASE("wave model invariants and distances across the corpus") {
  for (auto& [g, seed] : testutil::small_corpus()) {
    PortMap pm = assign_ports(g, PortPolicy::Random, seed);
    auto prep = prepare(g, pm);
    const long t1 = 2;
    auto run = run_waves(g, pm, prep.number, prep.level, t1);
    auto apsp = oracle_apsp(g);
    std::vector<int> by_number(g.n + 1);
    for (int u = 0; u < g.n; ++u) by_number[prep.number[u]] = u;

    for (int u = 0; u < g.n; ++u) {
      const auto& s = run.states[u];
      REQUIRE(static_cast<int>(s.log.size()) == g.n);
      for (size_t i = 0; i < s.log.size(); ++i) {
        const auto& rec = s.log[i];
        // timing identity: arrival = origin + slot + distance
        long expect = t1 + 5 * static_cast<long>(i) + apsp.dist[u][by_number[i + 1]];
        CHECK(rec.first_round == expect);
        for (auto [port, off] : rec.arrivals) {
          CHECK((off == 0 || off == 1));
          CHECK(port >= 1);
          CHECK(port <= g.degree(u));
        }
        if (i > 0) CHECK(rec.first_round - s.log[i - 1].first_round >= 2);
      }
      CHECK(s.results.eccentricity == apsp.ecc[u]);
      for (int v = 0; v < g.n; ++v)
        CHECK(s.results.dist_by_number[prep.number[v] - 1] == apsp.dist[u][v]);
    }
  }
}

TEST_CASE("cycle detection: global minimum is the girth") {
  for (auto& [g, seed] : testutil::small_corpus()) {
    PortMap pm = assign_ports(g, PortPolicy::Random, seed);
    auto run = waves_of(g, pm);
    int og = oracle_girth(g);
    int detected = 0;
    for (int u = 0; u < g.n; ++u) {
      int c = run.states[u].results.cycle_len;
      if (c > 0 && og > 0) CHECK(c >= og);  // never an undershoot
      if (c > 0 && (detected == 0 || c < detected)) detected = c;
    }
    CHECK(detected == og);
  }
}

TEST_CASE("bridge flags match the cut oracle at both endpoints") {
  for (auto& [g, seed] : testutil::small_corpus()) {
    PortMap pm = assign_ports(g, PortPolicy::Random, seed);
    auto run = waves_of(g, pm);
    auto cuts = oracle_cuts(g);
    std::vector<std::pair<int, int>> flagged;
    for (auto [u, v] : g.edges) {
      bool fu = run.states[u].results.port_cut[pm.port_to(u, v) - 1];
      bool fv = run.states[v].results.port_cut[pm.port_to(v, u) - 1];
      CHECK(fu == fv);
      if (fu) flagged.emplace_back(u, v);
    }
    CHECK(flagged == cuts.bridges);
  }
}

TEST_CASE("articulation flags match the cut oracle") {
  // the three named cases first
  {
    Graph p3 = testutil::path(3);
    PortMap pm = assign_ports(p3, PortPolicy::AdjacencyOrder, 0);
    auto run = waves_of(p3, pm);
    CHECK_FALSE(run.states[0].results.is_cut);
    CHECK(run.states[1].results.is_cut);
    CHECK_FALSE(run.states[2].results.is_cut);
  }
  {
    Graph c5 = testutil::cycle(5);
    PortMap pm = assign_ports(c5, PortPolicy::AdjacencyOrder, 0);
    auto run = waves_of(c5, pm);
    for (int u = 0; u < 5; ++u) CHECK_FALSE(run.states[u].results.is_cut);
  }
  {
    Graph bow = testutil::bowtie();
    PortMap pm = assign_ports(bow, PortPolicy::AdjacencyOrder, 0);
    auto run = waves_of(bow, pm);
    for (int u = 0; u < 5; ++u) CHECK(run.states[u].results.is_cut == (u == 0));
  }
  for (auto& [g, seed] : testutil::small_corpus()) {
    PortMap pm = assign_ports(g, PortPolicy::Random, seed);
    auto run = waves_of(g, pm);
    auto cuts = oracle_cuts(g);
    std::vector<int> arts;
    for (int u = 0; u < g.n; ++u)
      if (run.states[u].results.is_cut) arts.push_back(u);
    CHECK(arts == cuts.articulations);
  }
}
