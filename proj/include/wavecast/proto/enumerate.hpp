#pragma once

#include "wavecast/engine.hpp"
#include "wavecast/tree.hpp"

namespace wavecast::proto_enum {

// Vertex labelling by a travelling unit train. The train walks the tree in
// the double-visit order (down to the first child, leaves bounce off
// themselves, siblings are reached through the parent) and grows by one unit
// at every visit. A vertex's unit count at a visit therefore equals the
// number of visits that happened before it; the visit with an even count
// fixes the label as count/2 + 1.
//
// Routing is static per vertex: a train from the parent is the first visit
// (forward to the first child, or to self at a leaf); a train from child j is
// relayed untouched to child j+1 while one exists, and is otherwise the
// second visit (forward to the parent, or stop at the root). Relays neither
// count a visit nor grow the train.
struct State {
  bool launched = false;         // root trigger consumed
  long units_first = 0;          // units seen so far in the first-visit train
  long units_second = 0;         // ... in the second-visit train
  long first_prefix = -1;        // final count of the first visit
  long second_prefix = -1;       // final count of the second visit
  int number = 0;                // label, 1-based, assigned once
  long number_round = -1;
  long n_total = 0;              // root only: network size learned at the end
  bool complete = false;         // root only
  long complete_round = -1;
  int pending_end_target = 0;    // 0 none, -1 self, >0 port: NumEnd owed next round
  long pending_end_round = -1;   // round the terminator was scheduled
};

// Where a train arriving from `source_port` goes next; the traversal's
// successor rule as one local decision. kSelfSource marks a leaf's own
// bounced train. A visit route counts and grows the train; a relay passes it
// to the next sibling untouched. Target kSelfTarget is the leaf bounce and
// kStopTarget ends the traversal at the root.
inline constexpr int kSelfSource = -1;
inline constexpr int kSelfTarget = -1;
inline constexpr int kStopTarget = 0;

struct TrainRoute {
  bool visit;
  bool first;
  int target;
};

TrainRoute train_route(const TreeView& tree, int source_port);

// The label arithmetic: exactly one of the two visit prefixes is even and
// the label is even_prefix/2 + 1.
int number_from_counts(long p1, long p2);

// Root trigger: behaves as a first visit with an empty incoming train.
void launch_root(State& s, const TreeView& tree, VertexIo& io);

void step(State& s, const TreeView& tree, VertexIo& io);

struct EnumRun {
  std::vector<int> number;
  std::vector<long> first_prefix, second_prefix;
  long n_at_root = 0;
  long completion_round = -1;
  Metrics metrics;
};

// Standalone run over prebuilt tree views (the root starts at round 0).
EnumRun run_enumeration(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                        long max_rounds = 0);

}  // namespace wavecast::proto_enum
