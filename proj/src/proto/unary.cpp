#include "wavecast/proto/unary.hpp"

#include <algorithm>

namespace wavecast::proto_unary {

void dist_launch_root(DistState& s, const TreeView& tree, VertexIo& io) {
  s.launched = true;
  s.level = 0;
  s.end_seen = true;
  for (int p : tree.child_ports) io.send(p, Signal::DistOne);
  if (tree.child_ports.empty()) {  // single vertex: nothing to wait for
    s.end_sent = true;
    s.complete = true;
    s.complete_round = io.round();
  } else {
    s.pend_end = true;
    s.pend_end_round = io.round();
  }
}

void dist_step(DistState& s, const TreeView& tree, VertexIo& io) {
  if (s.pend_end && io.round() > s.pend_end_round) {
    for (int p : tree.child_ports) io.send(p, Signal::DistEnd);
    s.pend_end = false;
    s.end_sent = true;
  }
  const bool root = tree.is_root();
  for (int p = 1; p <= io.degree(); ++p) {
    auto sig = io.received(p);
    if (!sig) continue;
    switch (*sig) {
      case Signal::DistOne:
        if (p != tree.parent_port)
          fail(Errc::ProtocolViolation, "depth unit arrived from a non-parent port");
        ++s.units;
        for (int c : tree.child_ports) io.send(c, Signal::DistOne);
        break;
      case Signal::DistEnd: {
        if (p != tree.parent_port)
          fail(Errc::ProtocolViolation, "depth terminator arrived from a non-parent port");
        s.end_seen = true;
        s.level = static_cast<int>(s.units);
        for (int c : tree.child_ports) io.send(c, Signal::DistOne);  // the inserted unit
        if (tree.child_ports.empty()) {
          s.end_sent = true;
        } else {
          s.pend_end = true;
          s.pend_end_round = io.round();
        }
        break;
      }
      case Signal::DistOk:
        ++s.ok_count;
        break;
      default:
        break;
    }
  }
  if (s.end_seen && s.end_sent && !s.ok_sent &&
      s.ok_count == static_cast<int>(tree.child_ports.size())) {
    if (root) {
      if (!s.complete) {
        s.complete = true;
        s.complete_round = io.round();
      }
    } else {
      io.send(tree.parent_port, Signal::DistOk);
      s.ok_sent = true;
    }
  }
}

DistRun run_dist_cal(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                     long max_rounds) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n);
  struct Cell {
    DistState d;
    const TreeView* tree;
  };
  std::vector<Cell> init(g.n);
  for (int u = 0; u < g.n; ++u) init[u].tree = &trees[u];
  auto result = run_protocol<Cell>(
      g, ports, std::move(init),
      [](Cell& c, VertexIo& io) {
        if (io.is_leader() && !c.d.launched) dist_launch_root(c.d, *c.tree, io);
        dist_step(c.d, *c.tree, io);
      },
      [&](const std::vector<Cell>& st) { return st[g.leader].d.complete; }, max_rounds);
  DistRun out;
  out.level.resize(g.n);
  for (int u = 0; u < g.n; ++u) out.level[u] = result.states[u].d.level;
  out.completion_round = result.states[g.leader].d.complete_round;
  out.metrics = std::move(result.metrics);
  return out;
}

void Convergecast::child_event(int child_index, Signal sig) {
  auto& st = child_state_[child_index];
  switch (sig) {
    case Signal::AggMax:
      if (st != 0) fail(Errc::FramingViolation, "duplicate frame opener on a child channel");
      st = 1;
      ++children_started_;
      break;
    case Signal::AggOne:
      if (st != 1) fail(Errc::FramingViolation, "aggregate unit outside an open frame");
      ++child_units_[child_index];
      break;
    case Signal::AggEndMax:
      if (st != 1) fail(Errc::FramingViolation, "frame terminator before its opener");
      st = 2;
      ++children_done_;
      break;
    default:
      fail(Errc::FramingViolation, "unexpected signal on an aggregation channel");
  }
}

long Convergecast::target_cap() const {
  // Largest unit count already justified by local knowledge. Streaming past
  // it could overshoot the final maximum, which the frame cannot retract.
  long cap = value_;
  for (long u : child_units_) cap = std::max(cap, u);
  return cap;
}

std::optional<Signal> Convergecast::upward(bool gate) {
  if (done_) return std::nullopt;
  if (!started_) {
    if (!gate || !value_known()) return std::nullopt;
    if (children_started_ != static_cast<int>(child_state_.size())) return std::nullopt;
    started_ = true;
    return Signal::AggMax;
  }
  if (all_children_done()) {
    long target = result();
    if (units_sent_ > target)
      fail(Errc::ProtocolViolation, "aggregation frame overshot its maximum");
    if (units_sent_ == target) {
      done_ = true;
      return Signal::AggEndMax;
    }
    ++units_sent_;
    return Signal::AggOne;
  }
  if (units_sent_ < target_cap()) {
    ++units_sent_;
    return Signal::AggOne;
  }
  return std::nullopt;  // capped; wait for slower children
}

long Convergecast::result() const {
  long m = value_;
  for (long u : child_units_) m = std::max(m, u);
  return m;
}

ConvergecastRun unary_max_convergecast(const Graph& g, const PortMap& ports,
                                       const std::vector<TreeView>& trees,
                                       const std::vector<long>& values,
                                       const std::vector<long>& ready_round, long max_rounds) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n) + 2 * *std::max_element(values.begin(), values.end());
  struct Cell {
    Convergecast cc;
    const TreeView* tree;
    long ready = 0;
    bool root_done = false;
    long root_result = -1;
    long done_round = -1;
  };
  std::vector<Cell> init(g.n);
  for (int u = 0; u < g.n; ++u) {
    init[u].tree = &trees[u];
    init[u].cc.init(static_cast<int>(trees[u].child_ports.size()));
    init[u].cc.set_value(values[u]);
    if (!ready_round.empty()) init[u].ready = ready_round[u];
  }
  auto result = run_protocol<Cell>(
      g, ports, std::move(init),
      [](Cell& c, VertexIo& io) {
        const auto& t = *c.tree;
        for (size_t i = 0; i < t.child_ports.size(); ++i) {
          auto sig = io.received(t.child_ports[i]);
          if (sig) c.cc.child_event(static_cast<int>(i), *sig);
        }
        if (t.is_root()) {
          if (!c.root_done && c.cc.value_known() && c.cc.all_children_done()) {
            c.root_done = true;
            c.root_result = c.cc.result();
            c.done_round = io.round();
          }
          return;
        }
        auto out = c.cc.upward(io.round() >= c.ready);
        if (out) io.send(t.parent_port, *out);
      },
      [&](const std::vector<Cell>& st) { return st[g.leader].root_done; }, max_rounds);
  ConvergecastRun out;
  out.max_at_root = result.states[g.leader].root_result;
  out.completion_round = result.states[g.leader].done_round;
  out.metrics = std::move(result.metrics);
  return out;
}

std::optional<Signal> Broadcast::downward() {
  if (!active_ || done_) return std::nullopt;
  if (remaining_ > 0) {
    --remaining_;
    return Signal::ValOne;
  }
  done_ = true;
  return Signal::ValEnd;
}

Signal Broadcast::relay(Signal sig) {
  if (sig == Signal::ValOne)
    ++units_seen_;
  else if (sig == Signal::ValEnd)
    done_ = true;
  else
    fail(Errc::FramingViolation, "unexpected signal on a broadcast channel");
  return sig;
}

BroadcastRun unary_broadcast(const Graph& g, const PortMap& ports, const std::vector<TreeView>& trees,
                             long value, long max_rounds) {
  if (max_rounds <= 0) max_rounds = default_round_budget(g.n) + 2 * value;
  struct Cell {
    Broadcast bc;
    const TreeView* tree;
    long done_round = -1;
  };
  std::vector<Cell> init(g.n);
  for (int u = 0; u < g.n; ++u) init[u].tree = &trees[u];
  auto result = run_protocol<Cell>(
      g, ports, std::move(init),
      [&](Cell& c, VertexIo& io) {
        const auto& t = *c.tree;
        if (t.is_root()) {
          if (io.round() == 0) c.bc.start(value);
          auto sig = c.bc.downward();
          if (sig)
            for (int p : t.child_ports) io.send(p, *sig);
          if (c.bc.finished() && c.done_round < 0) c.done_round = io.round();
          return;
        }
        auto sig = io.received(t.parent_port);
        if (sig) {
          Signal fwd = c.bc.relay(*sig);
          for (int p : t.child_ports) io.send(p, fwd);
          if (c.bc.finished() && c.done_round < 0) c.done_round = io.round();
        }
      },
      [&](const std::vector<Cell>& st) {
        for (const auto& c : st)
          if (!c.bc.finished()) return false;
        return true;
      },
      max_rounds);
  BroadcastRun out;
  out.readback.resize(g.n);
  long last = -1;
  for (int u = 0; u < g.n; ++u) {
    out.readback[u] = (u == g.leader) ? value : result.states[u].bc.readback();
    last = std::max(last, result.states[u].done_round);
  }
  out.completion_round = last;
  out.metrics = std::move(result.metrics);
  return out;
}

}  // namespace wavecast::proto_unary
