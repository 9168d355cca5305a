#include "wavecast/report.hpp"

#include <algorithm>
#include <sstream>

#include "wavecast/errors.hpp"

namespace wavecast {

RunReport assemble_report(const Graph& g, const PortMap& ports,
                          const proto_pipeline::PipelineRun& run) {
  const auto& st = run.states;
  RunReport r;
  r.n = g.n;
  r.leader = g.leader;
  r.rounds = run.rounds;
  r.number.resize(g.n);
  r.level.resize(g.n);
  r.first_prefix.resize(g.n);
  r.second_prefix.resize(g.n);
  r.ecc.resize(g.n);
  r.cycle_len.resize(g.n);
  r.cut_ports.resize(g.n);
  r.dist.assign(g.n, std::vector<int>(g.n, -1));

  for (int u = 0; u < g.n; ++u) {
    r.number[u] = st[u].en.number;
    r.level[u] = st[u].dist.level;
    r.first_prefix[u] = st[u].en.first_prefix;
    r.second_prefix[u] = st[u].en.second_prefix;
    r.ecc[u] = st[u].wav.results.eccentricity;
    r.cycle_len[u] = st[u].wav.results.cycle_len;
    r.cut_ports[u] = st[u].wav.results.port_cut;
  }
  // A shorter run leaves the later fields at their defaults; only assemble
  // and cross-check what the executed phases actually produced.
  const bool has_labels = st[g.leader].en.complete;
  const bool has_waves =
      std::all_of(st.begin(), st.end(), [](const auto& s) { return s.wav.finalized; });

  std::vector<int> by_number(g.n + 1, -1);
  if (has_labels) {
    for (int u = 0; u < g.n; ++u) {
      int k = r.number[u];
      if (k < 1 || k > g.n || by_number[k] != -1)
        fail(Errc::ProtocolViolation, "labelling is not a bijection");
      by_number[k] = u;
    }
  }
  if (has_waves) {
    for (int u = 0; u < g.n; ++u) {
      const auto& lr = st[u].wav.results;
      if (lr.n != g.n)
        fail(Errc::WaveCountMismatch, "vertex " + std::to_string(u) + " saw " +
                                          std::to_string(lr.n) + " waves in a network of " +
                                          std::to_string(g.n));
      for (int k = 1; k <= g.n; ++k) r.dist[u][by_number[k]] = lr.dist_by_number[k - 1];
    }

    // Bridge flags are computed independently at both ends of each edge.
    for (auto [u, v] : g.edges) {
      int pu = ports.port_to(u, v), pv = ports.port_to(v, u);
      bool fu = st[u].wav.results.port_cut[pu - 1];
      bool fv = st[v].wav.results.port_cut[pv - 1];
      if (fu != fv)
        fail(Errc::EndpointDisagreement, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") flagged " + (fu ? "cut" : "kept") +
                                             " at one end only");
      if (fu) r.bridges.emplace_back(u, v);
    }
    for (int u = 0; u < g.n; ++u)
      if (st[u].wav.results.is_cut) r.articulations.push_back(u);
    r.biconnected = r.articulations.empty();
  }

  // Broadcast readbacks: a single value per stage, network wide.
  r.diameter = st[g.leader].diameter;
  r.girth = st[g.leader].girth;
  for (int u = 0; u < g.n; ++u) {
    if ((r.diameter >= 0 && st[u].diameter != r.diameter) ||
        (r.girth >= 0 && st[u].girth != r.girth))
      fail(Errc::ProtocolViolation, "broadcast readback differs at vertex " + std::to_string(u));
  }

  r.tree_round = st[g.leader].bfs.complete_round;
  r.label_round = st[g.leader].en.complete_round;
  r.depth_round = st[g.leader].dist.complete_round;
  r.first_wave_round = st[g.leader].wav.first_wave_round;
  return r;
}

namespace {

template <class T>
std::string show(const T& v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "check " << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  out << (ok ? "verify PASS" : "verify FAIL") << '\n';
  return out.str();
}

VerifyReport verify_report(const Graph& g, const PortMap& ports, const RunReport& r) {
  VerifyReport v;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    v.checks.push_back({name, pass, std::move(detail)});
    v.ok = v.ok && pass;
  };

  auto apsp = oracle_apsp(g);

  // labelling: bijective (assembly enforced), consecutive labels close by
  {
    CubeCheck cc = check_cube_path(g, r.number);
    add("label-step<=3", cc.pass, "max step " + show(cc.max_step));
    add("label-closure<=3", cc.closure <= 3, "dist(v_n,v_1) = " + show(cc.closure));
  }
  // labelling matches the definitional walk over the same tree
  {
    auto bfs = proto_bfs::run_bfs(g, ports);
    auto trav = reference_trav(g, ports, bfs.trees);
    bool same = trav.number == r.number && trav.first_prefix == r.first_prefix &&
                trav.second_prefix == r.second_prefix;
    add("label-matches-walk", same);
    bool parity = true;
    for (int u = 0; u < g.n; ++u) {
      bool e1 = r.first_prefix[u] % 2 == 0, e2 = r.second_prefix[u] % 2 == 0;
      bool level_even = apsp.dist[g.leader][u] % 2 == 0;
      if (e1 == e2 || e1 != level_even) parity = false;
    }
    add("visit-parity", parity);
  }
  // levels and the distance matrix
  {
    bool lv = true;
    for (int u = 0; u < g.n; ++u) lv = lv && r.level[u] == apsp.dist[g.leader][u];
    add("levels", lv);
    add("apsp-matrix", r.dist == apsp.dist);
    bool ec = true;
    for (int u = 0; u < g.n; ++u) ec = ec && r.ecc[u] == apsp.ecc[u];
    add("eccentricities", ec);
    add("diameter", r.diameter == apsp.diameter,
        show(r.diameter) + " vs " + show(apsp.diameter));
  }
  // girth and connectivity structure
  {
    int og = oracle_girth(g);
    add("girth", r.girth == og, show(r.girth) + " vs " + show(og));
    auto cuts = oracle_cuts(g);
    add("bridges", r.bridges == cuts.bridges,
        show(r.bridges.size()) + " vs " + show(cuts.bridges.size()));
    add("articulations", r.articulations == cuts.articulations,
        show(r.articulations.size()) + " vs " + show(cuts.articulations.size()));
    add("biconnected", r.biconnected == cuts.biconnected);
  }
  return v;
}

}  // namespace wavecast
