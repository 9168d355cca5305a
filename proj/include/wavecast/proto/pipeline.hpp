#pragma once

#include "wavecast/proto/bfs.hpp"
#include "wavecast/proto/enumerate.hpp"
#include "wavecast/proto/unary.hpp"
#include "wavecast/proto/waves.hpp"

namespace wavecast::proto_pipeline {

// The fixed phase order. Per vertex the marker only moves forward; phases of
// different vertices overlap freely (a leaf can be aggregating while a far
// corner still sees waves).
enum class Phase : int { Tree = 0, Label, Depth, Waves, Aggregate, Done };

// One convergecast + broadcast stage. Stage 0 carries eccentricities up and
// the diameter down; stage 1 carries encoded cycle lengths up and the girth
// down.
struct AggStage {
  proto_unary::Convergecast cc;
  proto_unary::Broadcast bc;
  bool root_started = false;
  bool bcast_done = false;
  long value_result = -1;
};

// How much of the pipeline to run; later outputs always require the earlier
// phases, never the other way around.
enum class StopAfter { Tree, Label, Depth, Waves, Diameter, Full };

struct State {
  proto_bfs::State bfs;
  proto_enum::State en;
  proto_unary::DistState dist;
  proto_waves::State wav;

  AggStage agg[2];
  std::vector<std::uint8_t> child_frame;  // finished upward frames per child
  int up_frame = 0;                       // index of our next upward frame
  int down_frame = 0;                     // finished downward frames from the parent
  bool agg_init = false;
  bool agg_values_set = false;

  int diameter = -1;
  int girth = -1;
  bool done = false;
  long done_round = -1;
  Phase phase = Phase::Tree;
};

void step(State& s, VertexIo& io, StopAfter stop = StopAfter::Full);

struct Options {
  long max_rounds = 0;  // 0: 64n + 64
  bool record_trace = false;
  StopAfter stop_after = StopAfter::Full;
};

struct PipelineRun {
  std::vector<State> states;
  long rounds = 0;
  Metrics metrics;
  Trace trace;
};

PipelineRun run_pipeline(const Graph& g, const PortMap& ports, const Options& opts = {});

}  // namespace wavecast::proto_pipeline
