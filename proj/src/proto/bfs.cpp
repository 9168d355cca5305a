#include "wavecast/proto/bfs.hpp"

namespace wavecast::proto_bfs {

void step(State& s, VertexIo& io) {
  const int deg = io.degree();

  if (!s.joined) {
    if (io.is_leader()) {
      s.joined = true;
      s.start_round = io.round();
      for (int p = 1; p <= deg; ++p) io.send(p, Signal::Start);
      s.pending_responses = deg;
      if (deg == 0) {  // single-vertex network
        s.children_known = true;
        s.complete = true;
        s.complete_round = io.round();
      }
      return;
    }
    bool any_start = false;
    for (int p = 1; p <= deg; ++p)
      if (io.received(p) == Signal::Start) { any_start = true; break; }
    if (!any_start) return;

    s.joined = true;
    s.start_round = io.round();
    for (int p = 1; p <= deg; ++p) {
      if (io.received(p) == Signal::Start) {
        if (s.tree.parent_port == 0) {
          s.tree.parent_port = p;  // lowest port among this round's senders
          io.send(p, Signal::Accept);
        } else {
          io.send(p, Signal::Reject);
          s.tree.nontree_ports.push_back(p);
        }
      } else {
        io.send(p, Signal::Start);
        ++s.pending_responses;
      }
    }
    if (s.pending_responses == 0) s.children_known = true;
    return;  // any completion signalling waits for the next round
  }

  if (io.is_leader() ? s.complete : s.ok_sent) return;  // tree work finished

  for (int p = 1; p <= deg; ++p) {
    auto sig = io.received(p);
    if (!sig) continue;
    switch (*sig) {
      case Signal::Start:  // a same-level neighbour flooded across this edge
        io.send(p, Signal::Reject);
        s.tree.nontree_ports.push_back(p);
        break;
      case Signal::Accept:
        s.tree.child_ports.push_back(p);  // ports scanned ascending
        --s.pending_responses;
        break;
      case Signal::Reject:
        s.tree.nontree_ports.push_back(p);
        --s.pending_responses;
        break;
      case Signal::OkBfs:
        ++s.ok_count;
        break;
      default:
        break;  // a later phase's signal, not ours to handle
    }
  }
  if (!s.children_known && s.pending_responses == 0) s.children_known = true;

  if (s.children_known && !s.ok_sent &&
      s.ok_count == static_cast<int>(s.tree.child_ports.size())) {
    if (io.is_leader()) {
      if (!s.complete) {
        s.complete = true;
        s.complete_round = io.round();
      }
    } else {
      io.send(s.tree.parent_port, Signal::OkBfs);
      s.ok_sent = true;
    }
  }
}

BfsRun run_bfs(const Graph& g, const PortMap& ports, long max_rounds, bool record_trace) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n);
  auto result = run_protocol<State>(
      g, ports, std::vector<State>(g.n),
      [](State& s, VertexIo& io) { step(s, io); },
      [&](const std::vector<State>& st) { return st[g.leader].complete; },
      max_rounds, record_trace);
  BfsRun out;
  out.completion_round = result.states[g.leader].complete_round;
  out.trees.reserve(g.n);
  for (auto& s : result.states) out.trees.push_back(std::move(s.tree));
  out.metrics = std::move(result.metrics);
  out.trace = std::move(result.trace);
  return out;
}

}  // namespace wavecast::proto_bfs
