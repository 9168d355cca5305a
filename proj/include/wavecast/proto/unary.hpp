#pragma once

#include <optional>

#include "wavecast/engine.hpp"
#include "wavecast/tree.hpp"

namespace wavecast::proto_unary {

// --- depth broadcast -------------------------------------------------------
// The root streams DistOne*/DistEnd down the tree; every hop inserts one
// extra unit before the terminator, so the unit count received equals the
// receiver's depth. DistOk converges completion back to the root.
struct DistState {
  bool launched = false;
  long units = 0;
  int level = -1;               // root: 0 at launch
  bool end_seen = false;
  bool end_sent = false;
  bool pend_end = false;
  long pend_end_round = -1;
  int ok_count = 0;
  bool ok_sent = false;
  bool complete = false;        // root only
  long complete_round = -1;
};

void dist_launch_root(DistState& s, const TreeView& tree, VertexIo& io);
void dist_step(DistState& s, const TreeView& tree, VertexIo& io);

struct DistRun {
  std::vector<int> level;
  long completion_round = -1;
  Metrics metrics;
};
DistRun run_dist_cal(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                     long max_rounds = 0);

// --- unary max convergecast --------------------------------------------------
// Every vertex owns a value; the root learns the maximum. A frame on a child
// channel is AggMax AggOne* AggEndMax. A vertex opens its own frame once
// every child has opened (leaves: once their value is known), streams units
// while capped by the largest count it can already justify, and terminates
// at max(own value, child values). Frames are terminator-delimited, so the
// staggered starts and occasional pauses are harmless.
//
// The owner of a Convergecast routes child-channel events in; `upward`
// yields at most one signal per round for the parent channel.
class Convergecast {
 public:
  void init(int nchildren) {
    child_units_.assign(nchildren, 0);
    child_state_.assign(nchildren, 0);
  }
  void set_value(long v) { value_ = v; }
  bool value_known() const { return value_ >= 0; }

  void child_event(int child_index, Signal sig);

  // Call once per round while not finished; gate blocks the frame opener.
  std::optional<Signal> upward(bool gate);

  bool all_children_done() const { return children_done_ == static_cast<int>(child_state_.size()); }
  bool finished() const { return done_; }
  // Maximum over the subtree; valid once all children are done and the value
  // is known (the root reads its result here).
  long result() const;
  long units_sent() const { return units_sent_; }

 private:
  long target_cap() const;
  long value_ = -1;
  std::vector<long> child_units_;
  std::vector<std::uint8_t> child_state_;  // 0 idle, 1 streaming, 2 done
  int children_started_ = 0;
  int children_done_ = 0;
  bool started_ = false;
  bool done_ = false;
  long units_sent_ = 0;
};

// Max over per-vertex values, staggered starts allowed: ready_round[v] is the
// first round v may open its frame (pass {} for all-zero).
struct ConvergecastRun {
  long max_at_root = -1;
  long completion_round = -1;
  Metrics metrics;
};
ConvergecastRun unary_max_convergecast(const Graph& g, const PortMap& ports,
                                       const std::vector<TreeView>& trees,
                                       const std::vector<long>& values,
                                       const std::vector<long>& ready_round = {},
                                       long max_rounds = 0);

// --- unary value broadcast ---------------------------------------------------
// Root streams ValOne x value then ValEnd; every vertex relays verbatim and
// reads the unit count back. Value 0 is a bare terminator.
class Broadcast {
 public:
  void start(long value) {
    remaining_ = value;
    active_ = true;
  }
  // Root side: signal to send to every child this round, if any.
  std::optional<Signal> downward();
  // Relay side: feed a parent-channel signal; returns it for forwarding.
  Signal relay(Signal sig);
  bool finished() const { return done_; }
  long readback() const { return units_seen_; }

 private:
  long remaining_ = -1;
  bool active_ = false;
  bool done_ = false;
  long units_seen_ = 0;
};

struct BroadcastRun {
  std::vector<long> readback;
  long completion_round = -1;  // round the last vertex finished
  Metrics metrics;
};
BroadcastRun unary_broadcast(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                             long value, long max_rounds = 0);

}  // namespace wavecast::proto_unary
