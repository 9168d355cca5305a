#pragma once

#include <stdexcept>
#include <string>

namespace wavecast {

// Every failure the library can raise, grouped by how the CLI reports it:
// input/validation errors exit 2, an exhausted round budget exits 3, and
// protocol-invariant violations (which indicate a bug, not bad input) exit 4.
enum class Errc {
  // graph construction / parsing / generation
  DisconnectedGraph,
  DuplicateEdge,
  SelfLoop,
  LeaderOutOfRange,
  InvalidParams,
  ParseError,
  // simulation
  RoundBudgetExceeded,
  ChannelOverflow,
  // live protocol invariants
  ArrivalOutsideWindow,
  WaveSeparation,
  WaveCountMismatch,
  ScheduleInfeasible,
  ParityViolation,
  FramingViolation,
  EndpointDisagreement,
  ProtocolViolation,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc c);

// CLI exit code contract: 2 = input error, 3 = budget, 4 = invariant violation.
int exit_code_for(Errc c);

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace wavecast
