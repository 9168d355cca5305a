#pragma once

#include <utility>
#include <vector>

#include "wavecast/engine.hpp"

namespace wavecast::proto_waves {

// The schedule: source i floods at first_wave_round + 5*(i-1). With
// consecutive labels at distance <= 3, wave fronts stay at least 2 rounds
// apart at every vertex and at most 8, so arrival timing alone identifies the
// waves and 8 silent rounds mean the phase is over.
inline constexpr long kWaveSpacing = 5;
inline constexpr long kQuietWindow = 8;

// One wave as seen locally: first arrival round and every (port, offset)
// that delivered it. The vertex's own wave is a synthetic record with no
// arrivals, pinned at its emission round.
struct WaveRecord {
  long first_round = -1;
  bool own = false;
  std::vector<std::pair<int, int>> arrivals;  // (port, offset 0|1)
};

// Everything derived from the wave log once it goes quiet.
struct LocalResults {
  int n = 0;
  std::vector<int> dist_by_number;  // index i-1 holds d(v, v_i)
  int eccentricity = 0;
  int cycle_len = 0;                // shortest detected cycle through here, 0 = none
  std::vector<char> port_cut;       // index port-1: no co-arrival ever seen
  bool is_cut = false;              // ports fall into >1 co-arrival class
};

struct State {
  int level = -1;       // from the depth phase (root: 0)
  int number = 0;       // from the labelling phase
  long first_wave_round = -1;  // inferred as tau_1 - level; root sets it outright
  long emit_round = -1;
  bool emitted = false;
  std::vector<WaveRecord> log;
  long last_signal = -1;
  bool finalized = false;
  long quiescent_round = -1;
  LocalResults results;
};

void step(State& s, VertexIo& io);

// Derivations over a finished log; exposed for direct testing.
std::vector<int> distances_from_log(const std::vector<WaveRecord>& log, long first_wave_round);
int cycle_length_from_log(const std::vector<WaveRecord>& log, long first_wave_round);
std::vector<char> cut_ports_from_log(const std::vector<WaveRecord>& log, int degree);
bool is_cut_vertex_from_log(const std::vector<WaveRecord>& log, int degree);

struct WaveRun {
  std::vector<State> states;
  Metrics metrics;
  long rounds = 0;
};

// Standalone run: labels and levels supplied, wave 1 leaves the leader at
// round `first_wave_round`.
WaveRun run_waves(const Graph& g, const PortMap& ports, const std::vector<int>& number,
                  const std::vector<int>& level, long first_wave_round = 2, long max_rounds = 0);

}  // namespace wavecast::proto_waves
