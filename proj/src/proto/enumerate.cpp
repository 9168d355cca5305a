#include "wavecast/proto/enumerate.hpp"

#include <algorithm>

namespace wavecast::proto_enum {

TrainRoute train_route(const TreeView& t, int source_port) {
  if (source_port == kSelfSource)
    return {true, false, t.parent_port == 0 ? kStopTarget : t.parent_port};
  if (source_port == t.parent_port && source_port != 0) {
    int target = t.child_ports.empty() ? kSelfTarget : t.child_ports.front();
    return {true, true, target};
  }
  auto it = std::find(t.child_ports.begin(), t.child_ports.end(), source_port);
  if (it == t.child_ports.end())
    fail(Errc::ProtocolViolation, "labelling train arrived on a non-tree port");
  if (it + 1 != t.child_ports.end()) return {false, false, *(it + 1)};
  return {true, false, t.parent_port == 0 ? kStopTarget : t.parent_port};
}

namespace {

void emit(VertexIo& io, int target, Signal sig) {
  if (target == kStopTarget) return;
  if (target == kSelfTarget)
    io.send_self(sig);
  else
    io.send(target, sig);
}

}  // namespace

int number_from_counts(long p1, long p2) {
  const bool e1 = p1 % 2 == 0, e2 = p2 % 2 == 0;
  if (e1 == e2)
    fail(Errc::ParityViolation, "visit prefixes " + std::to_string(p1) + "," + std::to_string(p2) +
                                    " do not have opposite parity");
  return static_cast<int>((e1 ? p1 : p2) / 2 + 1);
}

namespace {

void finish_visit(State& s, const TrainRoute& r, VertexIo& io) {
  if (r.first) {
    s.first_prefix = s.units_first;
    if (s.first_prefix % 2 == 0) {  // even first prefix decides immediately
      s.number = static_cast<int>(s.first_prefix / 2 + 1);
      s.number_round = io.round();
    }
  } else {
    s.second_prefix = s.units_second;
    if (s.first_prefix < 0)
      fail(Errc::ProtocolViolation, "second visit before the first");
    int k = number_from_counts(s.first_prefix, s.second_prefix);  // parity check always runs
    if (s.number == 0) {
      s.number = k;
      s.number_round = io.round();
    }
    if (r.target == kStopTarget) {  // the root's second visit ends the traversal
      s.n_total = (s.second_prefix + 1) / 2;
      s.complete = true;
      s.complete_round = io.round();
      return;
    }
  }
  // grow the train by this visit's unit, then terminate it next round
  emit(io, r.target, Signal::NumOne);
  if (s.pending_end_target != 0)
    fail(Errc::ProtocolViolation, "two train terminators in flight at one vertex");
  s.pending_end_target = r.target;
  s.pending_end_round = io.round();
}

void consume(State& s, const TreeView& tree, int source, Signal sig, VertexIo& io) {
  TrainRoute r = train_route(tree, source);
  if (sig == Signal::NumOne) {
    if (r.visit) (r.first ? s.units_first : s.units_second)++;
    emit(io, r.target, Signal::NumOne);
    return;
  }
  // NumEnd
  if (!r.visit) {
    emit(io, r.target, Signal::NumEnd);  // relays pass the terminator through
    return;
  }
  finish_visit(s, r, io);
}

}  // namespace

void launch_root(State& s, const TreeView& tree, VertexIo& io) {
  s.launched = true;
  TrainRoute r{true, true, tree.child_ports.empty() ? kSelfTarget : tree.child_ports.front()};
  finish_visit(s, r, io);
}

void step(State& s, const TreeView& tree, VertexIo& io) {
  if (s.pending_end_target != 0 && io.round() > s.pending_end_round) {
    emit(io, s.pending_end_target, Signal::NumEnd);
    s.pending_end_target = 0;
  }
  for (int p = 1; p <= io.degree(); ++p) {
    auto sig = io.received(p);
    if (sig == Signal::NumOne || sig == Signal::NumEnd) consume(s, tree, p, *sig, io);
  }
  auto self = io.received_self();
  if (self == Signal::NumOne || self == Signal::NumEnd) consume(s, tree, kSelfSource, *self, io);
}

EnumRun run_enumeration(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                        long max_rounds) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n);
  struct Cell {
    State en;
    const TreeView* tree;
  };
  std::vector<Cell> init(g.n);
  for (int u = 0; u < g.n; ++u) init[u].tree = &trees[u];
  auto result = run_protocol<Cell>(
      g, ports, std::move(init),
      [](Cell& c, VertexIo& io) {
        if (io.is_leader() && !c.en.launched) launch_root(c.en, *c.tree, io);
        step(c.en, *c.tree, io);
      },
      [&](const std::vector<Cell>& st) { return st[g.leader].en.complete; }, max_rounds);
  EnumRun out;
  out.number.resize(g.n);
  out.first_prefix.resize(g.n);
  out.second_prefix.resize(g.n);
  for (int u = 0; u < g.n; ++u) {
    out.number[u] = result.states[u].en.number;
    out.first_prefix[u] = result.states[u].en.first_prefix;
    out.second_prefix[u] = result.states[u].en.second_prefix;
  }
  out.n_at_root = result.states[g.leader].en.n_total;
  out.completion_round = result.states[g.leader].en.complete_round;
  out.metrics = std::move(result.metrics);
  return out;
}

}  // namespace wavecast::proto_enum
