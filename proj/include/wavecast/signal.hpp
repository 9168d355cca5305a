#pragma once

#include <cstdint>

namespace wavecast {

// The closed message alphabet. Every protocol in this project communicates
// using only these symbols, so a message always fits in 4 bits and the
// per-channel cost of a run is (rounds) x (4 bits) at worst.
enum class Signal : std::uint8_t {
  Start = 0,   // tree construction: flood
  Accept,      // tree construction: parent acknowledgement
  Reject,      // tree construction: edge demoted to non-tree
  OkBfs,       // tree construction: subtree-complete convergecast
  NumOne,      // labelling train: unit
  NumEnd,      // labelling train: terminator
  DistOne,     // depth broadcast: unit
  DistEnd,     // depth broadcast: terminator
  DistOk,      // depth broadcast: completion convergecast
  Wave,        // anonymous flood
  AggMax,      // unary max convergecast: frame opener
  AggOne,      // unary max convergecast: unit
  AggEndMax,   // unary max convergecast: terminator
  ValOne,      // unary value broadcast: unit
  ValEnd,      // unary value broadcast: terminator
  PhaseGo,     // reserved phase-advance symbol; the pipeline's phases are
               // self-announcing, so no run emits it, but it is part of the
               // fixed alphabet the 4-bit encoding is sized for
};

inline constexpr int kSignalCount = 16;
static_assert(static_cast<int>(Signal::PhaseGo) == kSignalCount - 1);

const char* signal_name(Signal s);

}  // namespace wavecast
