#pragma once

#include "wavecast/engine.hpp"
#include "wavecast/tree.hpp"

namespace wavecast::proto_bfs {

// Leader-rooted tree construction by flooding with a four-way handshake:
// flood Start outward, the first Start seen names the parent (lowest port on
// a tie), Accept/Reject settle each edge, OkBfs converges completion back up.
struct State {
  bool joined = false;
  long start_round = -1;
  TreeView tree;
  int pending_responses = 0;
  bool children_known = false;
  int ok_count = 0;
  bool ok_sent = false;
  bool complete = false;      // leader only
  long complete_round = -1;
};

void step(State& s, VertexIo& io);

struct BfsRun {
  std::vector<TreeView> trees;
  long completion_round = -1;
  Metrics metrics;
  Trace trace;
};

BfsRun run_bfs(const Graph& g, const PortMap& ports, long max_rounds = 0, bool record_trace = false);

}  // namespace wavecast::proto_bfs
