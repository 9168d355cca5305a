#include "wavecast/proto/waves.hpp"

#include <algorithm>
#include <string>

namespace wavecast::proto_waves {

namespace {

// Tiny disjoint-set over ports for the co-arrival classes.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void step(State& s, VertexIo& io) {
  if (s.finalized) return;
  const long r = io.round();

  std::vector<int> ports;
  for (int p = 1; p <= io.degree(); ++p)
    if (io.received(p) == Signal::Wave) ports.push_back(p);

  if (!ports.empty()) {
    bool fresh = s.log.empty() || r >= s.log.back().first_round + 2;
    if (fresh) {
      s.log.push_back({r, false, {}});
    } else if (s.log.back().own) {
      // The flood-once rule guarantees a source never hears its own wave.
      fail(Errc::ArrivalOutsideWindow, "wave echoed back to its source");
    }
    WaveRecord& rec = s.log.back();
    int offset = static_cast<int>(r - rec.first_round);
    if (offset < 0 || offset > 1)
      fail(Errc::ArrivalOutsideWindow, "arrival offset " + std::to_string(offset));
    for (int p : ports) rec.arrivals.emplace_back(p, offset);
    s.last_signal = r;

    if (fresh) {
      // forward exactly once: every port that did not deliver this round
      for (int p = 1; p <= io.degree(); ++p)
        if (std::find(ports.begin(), ports.end(), p) == ports.end()) io.send(p, Signal::Wave);
      // the very first wave pins the schedule origin
      if (s.first_wave_round < 0) {
        if (s.level < 0) fail(Errc::ProtocolViolation, "wave arrived before the depth is known");
        s.first_wave_round = s.log.front().first_round - s.level;
        if (s.number <= 0) fail(Errc::ProtocolViolation, "wave arrived before the label is known");
        if (s.number > 1) {
          s.emit_round = s.first_wave_round + kWaveSpacing * (s.number - 1);
          if (s.emit_round <= r)
            fail(Errc::ScheduleInfeasible, "own slot " + std::to_string(s.emit_round) +
                                               " already past at round " + std::to_string(r));
        }
      }
    }
  }

  if (!s.emitted && s.emit_round == r) {
    if (!s.log.empty() && r < s.log.back().first_round + 2)
      fail(Errc::WaveSeparation, "own wave would collide with the previous one");
    for (int p = 1; p <= io.degree(); ++p) io.send(p, Signal::Wave);
    s.log.push_back({r, true, {}});
    s.emitted = true;
    s.last_signal = r;
    if (static_cast<int>(s.log.size()) != s.number)
      fail(Errc::WaveCountMismatch, "own wave is record " + std::to_string(s.log.size()) +
                                        " but the label is " + std::to_string(s.number));
  }

  if (s.last_signal >= 0 && r - s.last_signal >= kQuietWindow) {
    s.finalized = true;
    s.quiescent_round = r;
    LocalResults& lr = s.results;
    lr.n = static_cast<int>(s.log.size());
    lr.dist_by_number = distances_from_log(s.log, s.first_wave_round);
    lr.eccentricity = *std::max_element(lr.dist_by_number.begin(), lr.dist_by_number.end());
    if (s.number < 1 || s.number > lr.n || lr.dist_by_number[s.number - 1] != 0 ||
        !s.log[s.number - 1].own)
      fail(Errc::WaveCountMismatch, "own wave not at own label position");
    lr.cycle_len = cycle_length_from_log(s.log, s.first_wave_round);
    lr.port_cut = cut_ports_from_log(s.log, io.degree());
    lr.is_cut = is_cut_vertex_from_log(s.log, io.degree());
  }
}

std::vector<int> distances_from_log(const std::vector<WaveRecord>& log, long first_wave_round) {
  std::vector<int> dist(log.size());
  for (size_t i = 0; i < log.size(); ++i) {
    long d = log[i].first_round - first_wave_round - kWaveSpacing * static_cast<long>(i);
    if (d < 0) fail(Errc::ArrivalOutsideWindow, "negative inferred distance: waves mis-grouped");
    dist[i] = static_cast<int>(d);
  }
  return dist;
}

int cycle_length_from_log(const std::vector<WaveRecord>& log, long first_wave_round) {
  int best = 0;
  for (size_t i = 0; i < log.size(); ++i) {
    long d = log[i].first_round - first_wave_round - kWaveSpacing * static_cast<long>(i);
    if (d < 1) continue;
    int at0 = 0, at1 = 0;
    for (auto [port, off] : log[i].arrivals) (off == 0 ? at0 : at1)++;
    // Two shortest-front arrivals close an even loop; a front arrival plus a
    // one-late arrival on another port close an odd one. Ports are distinct
    // within a record by the once-per-wave forwarding rule.
    long cand = 0;
    if (at0 >= 2) cand = 2 * d;
    if (at0 >= 1 && at1 >= 1) {
      long odd = 2 * d + 1;
      if (cand == 0 || odd < cand) cand = odd;
    }
    if (cand > 0 && (best == 0 || cand < best)) best = static_cast<int>(cand);
  }
  return best;
}

std::vector<char> cut_ports_from_log(const std::vector<WaveRecord>& log, int degree) {
  // Port p is bridge-flagged unless some wave delivered through p at offset o
  // and through another port at offset o or o+1.
  std::vector<char> cut(degree, 1);
  for (const auto& rec : log) {
    for (auto [p, o] : rec.arrivals) {
      if (!cut[p - 1]) continue;
      for (auto [q, oq] : rec.arrivals)
        if (q != p && (oq == o || oq == o + 1)) {
          cut[p - 1] = 0;
          break;
        }
    }
  }
  return cut;
}

bool is_cut_vertex_from_log(const std::vector<WaveRecord>& log, int degree) {
  if (degree <= 1) return false;
  // Any two arrivals of one wave are at most one round apart, so each wave
  // merges its whole arrival-port set into one co-arrival class.
  Dsu dsu(degree);
  for (const auto& rec : log)
    for (size_t i = 1; i < rec.arrivals.size(); ++i)
      dsu.unite(rec.arrivals[i - 1].first - 1, rec.arrivals[i].first - 1);
  int root0 = dsu.find(0);
  for (int p = 1; p < degree; ++p)
    if (dsu.find(p) != root0) return true;
  return false;
}

WaveRun run_waves(const Graph& g, const PortMap& ports, const std::vector<int>& number,
                  const std::vector<int>& level, long first_wave_round, long max_rounds) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n);
  std::vector<State> init(g.n);
  for (int u = 0; u < g.n; ++u) {
    init[u].number = number[u];
    init[u].level = level[u];
    if (number[u] == 1) {
      init[u].first_wave_round = first_wave_round;
      init[u].emit_round = first_wave_round;
    }
  }
  auto result = run_protocol<State>(
      g, ports, std::move(init), [](State& s, VertexIo& io) { step(s, io); },
      [](const std::vector<State>& st) {
        for (const auto& s : st)
          if (!s.finalized) return false;
        return true;
      },
      max_rounds);
  WaveRun out;
  out.states = std::move(result.states);
  out.metrics = std::move(result.metrics);
  out.rounds = result.rounds;
  return out;
}

}  // namespace wavecast::proto_waves
