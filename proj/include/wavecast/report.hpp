#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavecast/graph.hpp"
#include "wavecast/oracles.hpp"
#include "wavecast/proto/pipeline.hpp"

namespace wavecast {

// Everything the distributed run produced, collected by vertex id. Assembly
// is where cross-vertex consistency is enforced: the two endpoints of every
// edge must agree on its bridge flag, and every broadcast readback must match
// the root's value.
struct RunReport {
  int n = 0;
  int leader = 0;
  std::vector<int> number;
  std::vector<int> level;
  std::vector<long> first_prefix, second_prefix;
  std::vector<std::vector<int>> dist;  // by vertex id
  std::vector<int> ecc;
  std::vector<int> cycle_len;
  std::vector<std::vector<char>> cut_ports;  // per vertex, index port-1
  int diameter = -1;
  int girth = -1;
  std::vector<std::pair<int, int>> bridges;
  std::vector<int> articulations;
  bool biconnected = false;
  long rounds = 0;
  long tree_round = -1, label_round = -1, depth_round = -1, first_wave_round = -1;
};

RunReport assemble_report(const Graph& g, const PortMap& ports,
                          const proto_pipeline::PipelineRun& run);

// One named comparison against the oracles.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok = true;
  std::string to_text() const;
};

// Diffs every distributed output against the sequential references and the
// structural invariants that do not need an oracle.
VerifyReport verify_report(const Graph& g, const PortMap& ports, const RunReport& r);

}  // namespace wavecast
