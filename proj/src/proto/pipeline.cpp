#include "wavecast/proto/pipeline.hpp"

#include <algorithm>
#include <tuple>

namespace wavecast::proto_pipeline {

namespace {

bool is_agg_signal(Signal s) {
  return s == Signal::AggMax || s == Signal::AggOne || s == Signal::AggEndMax;
}
bool is_val_signal(Signal s) { return s == Signal::ValOne || s == Signal::ValEnd; }

long girth_submission(const proto_waves::LocalResults& r) {
  // Encoded so larger means shorter cycle and 0 means nothing detected; the
  // root decodes the maximum back into the girth.
  if (r.cycle_len <= 0) return 0;
  return std::max(0L, static_cast<long>(r.n) + 1 - r.cycle_len);
}

void agg_section(State& s, const TreeView& tree, VertexIo& io, bool allow_girth) {
  if (!s.agg_init) return;
  const int nch = static_cast<int>(tree.child_ports.size());

  for (int ci = 0; ci < nch; ++ci) {
    auto sig = io.received(tree.child_ports[ci]);
    if (!sig || !is_agg_signal(*sig)) continue;
    int f = s.child_frame[ci];
    if (f >= 2) fail(Errc::FramingViolation, "third aggregation frame on a child channel");
    s.agg[f].cc.child_event(ci, *sig);
    if (*sig == Signal::AggEndMax) ++s.child_frame[ci];
  }

  if (!tree.is_root()) {
    auto sig = io.received(tree.parent_port);
    if (sig && is_val_signal(*sig)) {
      int f = s.down_frame;
      if (f >= 2) fail(Errc::FramingViolation, "third broadcast frame from the parent");
      Signal fwd = s.agg[f].bc.relay(*sig);
      for (int c : tree.child_ports) io.send(c, fwd);
      if (*sig == Signal::ValEnd) {
        s.agg[f].value_result = s.agg[f].bc.readback();
        if (f == 0)
          s.diameter = static_cast<int>(s.agg[f].value_result);
        else
          s.girth = static_cast<int>(s.agg[f].value_result);
        ++s.down_frame;
        if (s.down_frame == 2) {
          s.done = true;
          s.done_round = io.round();
        }
      }
    }
    if (s.up_frame < 2) {
      int a = s.up_frame;
      // the second stage must not enter a channel before the first stage's
      // broadcast has passed this vertex
      bool gate = a == 0 || (allow_girth && s.down_frame >= 1);
      auto out = s.agg[a].cc.upward(gate);
      if (out) {
        io.send(tree.parent_port, *out);
        if (*out == Signal::AggEndMax) ++s.up_frame;
      }
    }
    return;
  }

  // root: close each stage, decode, and feed the broadcast
  for (int a = 0; a < 2; ++a) {
    AggStage& st = s.agg[a];
    if (a == 1 && !allow_girth) break;
    if (!st.root_started && st.cc.value_known() && st.cc.all_children_done()) {
      long raw = st.cc.result();
      long decoded = raw;
      if (a == 1) {
        if (s.wav.results.n != s.en.n_total)
          fail(Errc::WaveCountMismatch,
               "root counted " + std::to_string(s.wav.results.n) + " waves for " +
                   std::to_string(s.en.n_total) + " vertices");
        decoded = raw > 0 ? s.en.n_total + 1 - raw : 0;
      }
      st.value_result = decoded;
      if (a == 0)
        s.diameter = static_cast<int>(decoded);
      else
        s.girth = static_cast<int>(decoded);
      st.bc.start(decoded);
      st.root_started = true;
    }
    if (st.root_started && !st.bcast_done) {
      auto sig = st.bc.downward();
      if (sig)
        for (int c : tree.child_ports) io.send(c, *sig);
      if (st.bc.finished()) {
        st.bcast_done = true;
        if (a == 1) {
          s.done = true;
          s.done_round = io.round();
        }
      }
    }
    if (!st.bcast_done) break;  // the next stage waits for this one's broadcast
  }
}

Phase derive_phase(const State& s, bool leader) {
  if (s.done) return Phase::Done;
  if (s.wav.finalized) return Phase::Aggregate;
  if (!s.wav.log.empty() || s.wav.emit_round >= 0) return Phase::Waves;
  if (leader ? s.dist.launched : (s.dist.units > 0 || s.dist.level >= 0)) return Phase::Depth;
  if (s.en.launched || s.en.units_first > 0 || s.en.first_prefix >= 0) return Phase::Label;
  return Phase::Tree;
}

}  // namespace

void step(State& s, VertexIo& io, StopAfter stop) {
  proto_bfs::step(s.bfs, io);
  const TreeView& tree = s.bfs.tree;

  if (stop >= StopAfter::Label && io.is_leader() && s.bfs.complete && !s.en.launched)
    proto_enum::launch_root(s.en, tree, io);
  proto_enum::step(s.en, tree, io);

  if (stop >= StopAfter::Depth && io.is_leader() && s.en.complete && !s.dist.launched)
    proto_unary::dist_launch_root(s.dist, tree, io);
  proto_unary::dist_step(s.dist, tree, io);

  if (s.wav.number == 0 && s.en.number > 0) s.wav.number = s.en.number;
  if (s.wav.level < 0 && s.dist.level >= 0) s.wav.level = s.dist.level;
  if (stop >= StopAfter::Waves && io.is_leader() && s.dist.complete && s.wav.emit_round < 0) {
    s.wav.first_wave_round = s.dist.complete_round + 2;
    s.wav.emit_round = s.wav.first_wave_round;
  }
  proto_waves::step(s.wav, io);

  if (!s.agg_init && s.bfs.children_known) {
    int nch = static_cast<int>(tree.child_ports.size());
    s.agg[0].cc.init(nch);
    s.agg[1].cc.init(nch);
    s.child_frame.assign(nch, 0);
    s.agg_init = true;
  }
  if (stop >= StopAfter::Diameter && !s.agg_values_set && s.wav.finalized) {
    s.agg[0].cc.set_value(s.wav.results.eccentricity);
    s.agg[1].cc.set_value(girth_submission(s.wav.results));
    s.agg_values_set = true;
  }
  agg_section(s, tree, io, stop >= StopAfter::Full);

  Phase now = derive_phase(s, io.is_leader());
  if (static_cast<int>(now) < static_cast<int>(s.phase))
    fail(Errc::ProtocolViolation, "phase moved backwards");
  s.phase = now;
}

PipelineRun run_pipeline(const Graph& g, const PortMap& ports, const Options& opts) {
  long budget = opts.max_rounds > 0 ? opts.max_rounds : default_round_budget(g.n);
  const int leader = g.leader;
  auto done = [&](const std::vector<State>& st) {
    switch (opts.stop_after) {
      case StopAfter::Tree:
        return st[leader].bfs.complete;
      case StopAfter::Label:
        return st[leader].en.complete;
      case StopAfter::Depth:
        return st[leader].dist.complete;
      case StopAfter::Waves:
        return std::all_of(st.begin(), st.end(),
                           [](const State& s) { return s.wav.finalized; });
      case StopAfter::Diameter:
        return std::all_of(st.begin(), st.end(),
                           [](const State& s) { return s.diameter >= 0; });
      case StopAfter::Full:
        return std::all_of(st.begin(), st.end(), [](const State& s) { return s.done; });
    }
    return false;
  };
  auto result = run_protocol<State>(
      g, ports, std::vector<State>(g.n),
      [stop = opts.stop_after](State& s, VertexIo& io) { step(s, io, stop); }, done, budget,
      opts.record_trace);
  PipelineRun out;
  out.states = std::move(result.states);
  out.rounds = result.rounds;
  out.metrics = std::move(result.metrics);
  out.trace = std::move(result.trace);
  for (int u = 0; u < g.n; ++u) {
    const State& s = out.states[u];
    if (s.en.number_round >= 0)
      out.trace.outputs.push_back({s.en.number_round, u, "label", s.en.number});
    if (s.wav.quiescent_round >= 0)
      out.trace.outputs.push_back({s.wav.quiescent_round, u, "results", s.wav.results.n});
    if (s.done_round >= 0) out.trace.outputs.push_back({s.done_round, u, "done", s.girth});
  }
  std::sort(out.trace.outputs.begin(), out.trace.outputs.end(),
            [](const OutputEvent& a, const OutputEvent& b) {
              return std::tie(a.round, a.vertex, a.kind) < std::tie(b.round, b.vertex, b.kind);
            });
  return out;
}

}  // namespace wavecast::proto_pipeline
