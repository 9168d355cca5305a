#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wavecast/errors.hpp"
#include "wavecast/graph.hpp"
#include "wavecast/signal.hpp"

namespace wavecast {

// One channel delivery. `round` is the round the signal appears in the
// recipient's inbox, one after it was emitted.
struct TraceEvent {
  long round;
  int from;
  int to;
  Signal signal;
  bool operator==(const TraceEvent&) const = default;
};

// Protocol milestone on one vertex (label fixed, results finalized, done).
struct OutputEvent {
  long round;
  int vertex;
  std::string kind;
  long value;
  bool operator==(const OutputEvent&) const = default;
};

struct Trace {
  std::vector<TraceEvent> events;
  std::vector<OutputEvent> outputs;
  bool operator==(const Trace&) const = default;
  std::string to_text() const;  // delivery records only: "round u v dir signal"
};

struct Metrics {
  long rounds_total = 0;
  std::vector<long> symbols_per_channel;  // directed channel id, see Network
  std::uint32_t alphabet_mask = 0;

  int alphabet_used() const { return std::popcount(alphabet_mask); }
  int bits_per_symbol() const {
    int a = alphabet_used();
    return a <= 2 ? 1 : std::bit_width(static_cast<unsigned>(a - 1));
  }
  long bit_rounds() const { return rounds_total * bits_per_symbol(); }
  long symbols_total() const;
  long max_channel_load() const;
  std::string to_text(int n) const;
};

class Network;

// What a handler sees of the world in one round: its local endpoints and the
// signals delivered this round. Deliberately exposes no vertex identity.
class VertexIo {
 public:
  int degree() const { return degree_; }
  bool is_leader() const { return leader_; }
  long round() const { return round_; }

  std::optional<Signal> received(int port) const;  // port in 1..degree
  std::optional<Signal> received_self() const;

  void send(int port, Signal s);
  void send_self(Signal s);

 private:
  friend class Network;
  Network* net_ = nullptr;
  int vertex_ = -1;
  int degree_ = 0;
  bool leader_ = false;
  long round_ = 0;
};

// Barrier-synchronous message fabric: a signal emitted in round r is in the
// recipient's inbox in round r+1, one signal per directed channel per round.
// Self-sends follow the same latency but touch no channel, no metric and no
// trace. Handlers must be pure functions of (state, inbox); the engine calls
// each vertex exactly once per round, in vertex order.
class Network {
 public:
  Network(const Graph& g, const PortMap& ports, bool record_trace = false);

  // Runs one round: flips the delivery buffers and invokes `handler` once per
  // vertex. `handler(vertex_index, io)` dispatches to per-vertex state held
  // by the caller.
  void advance_round(const std::function<void(int, VertexIo&)>& handler);

  bool idle() const { return pending_ == 0; }  // nothing scheduled for next round
  long round() const { return round_; }

  const Graph& graph() const { return *g_; }
  const PortMap& ports() const { return *ports_; }
  const Metrics& metrics() const { return metrics_; }
  const Trace& trace() const { return trace_; }

  // Directed channel id of (vertex u, port p); inverse mapping for reports.
  int channel_id(int u, int port) const { return base_[u] + port - 1; }
  std::pair<int, int> channel_endpoints(int channel) const;
  int channel_count() const { return static_cast<int>(cur_.size()); }

 private:
  friend class VertexIo;
  static constexpr std::uint8_t kEmpty = 0xff;

  void put(int from, int port, Signal s);
  void put_self(int vertex, Signal s);

  const Graph* g_;
  const PortMap* ports_;
  std::vector<int> base_;          // prefix degree sums: inbox slice per vertex
  std::vector<std::uint8_t> cur_;  // inbox being read this round, per channel
  std::vector<std::uint8_t> nxt_;  // outbox being written this round
  std::vector<std::uint8_t> self_cur_, self_nxt_;
  long round_ = -1;
  long pending_ = 0;
  Metrics metrics_;
  Trace trace_;
  bool record_trace_;
};

// Drives a protocol to completion. `step` is the per-vertex handler; `done`
// inspects all states once per round and declares logical completion, after
// which the run still requires network quiescence (no in-flight signals).
// Throws RoundBudgetExceeded when max_rounds rounds pass without finishing.
template <class State>
struct RunResult {
  std::vector<State> states;
  long rounds = 0;
  Metrics metrics;
  Trace trace;
};

inline long default_round_budget(int n) { return 64L * n + 64; }

template <class State, class Step, class Done>
RunResult<State> run_protocol(const Graph& g, const PortMap& ports, std::vector<State> states,
                              Step&& step, Done&& done, long max_rounds, bool record_trace = false) {
  if (max_rounds <= 0) fail(Errc::InvalidParams, "round budget must be positive");
  Network net(g, ports, record_trace);
  auto handler = [&](int v, VertexIo& io) { step(states[static_cast<size_t>(v)], io); };
  for (;;) {
    if (net.round() + 1 >= max_rounds)
      fail(Errc::RoundBudgetExceeded,
           "no termination within " + std::to_string(max_rounds) + " rounds");
    net.advance_round(handler);
    if (net.idle() && done(states)) break;
  }
  RunResult<State> r;
  r.states = std::move(states);
  r.rounds = net.metrics().rounds_total;
  r.metrics = net.metrics();
  r.trace = net.trace();
  return r;
}

}  // namespace wavecast
