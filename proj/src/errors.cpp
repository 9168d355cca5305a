#include "wavecast/errors.hpp"

#include "wavecast/signal.hpp"

namespace wavecast {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::LeaderOutOfRange: return "LeaderOutOfRange";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ParseError: return "ParseError";
    case Errc::RoundBudgetExceeded: return "RoundBudgetExceeded";
    case Errc::ChannelOverflow: return "ChannelOverflow";
    case Errc::ArrivalOutsideWindow: return "ArrivalOutsideWindow";
    case Errc::WaveSeparation: return "WaveSeparation";
    case Errc::WaveCountMismatch: return "WaveCountMismatch";
    case Errc::ScheduleInfeasible: return "ScheduleInfeasible";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::FramingViolation: return "FramingViolation";
    case Errc::EndpointDisagreement: return "EndpointDisagreement";
    case Errc::ProtocolViolation: return "ProtocolViolation";
  }
  return "Unknown";
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph:
    case Errc::DuplicateEdge:
    case Errc::SelfLoop:
    case Errc::LeaderOutOfRange:
    case Errc::InvalidParams:
    case Errc::ParseError:
      return 2;
    case Errc::RoundBudgetExceeded:
      return 3;
    default:
      return 4;
  }
}

const char* signal_name(Signal s) {
  switch (s) {
    case Signal::Start: return "START";
    case Signal::Accept: return "ACCEPT";
    case Signal::Reject: return "REJECT";
    case Signal::OkBfs: return "OK_BFS";
    case Signal::NumOne: return "NUM_ONE";
    case Signal::NumEnd: return "NUM_END";
    case Signal::DistOne: return "DIST_ONE";
    case Signal::DistEnd: return "DIST_END";
    case Signal::DistOk: return "DIST_OK";
    case Signal::Wave: return "WAVE";
    case Signal::AggMax: return "AGG_MAX";
    case Signal::AggOne: return "AGG_ONE";
    case Signal::AggEndMax: return "AGG_ENDMAX";
    case Signal::ValOne: return "VAL_ONE";
    case Signal::ValEnd: return "VAL_END";
    case Signal::PhaseGo: return "PHASE_GO";
  }
  return "?";
}

}  // namespace wavecast
