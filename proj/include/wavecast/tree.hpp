#pragma once

#include <vector>

namespace wavecast {

// A vertex's local view of the spanning tree: everything is a port, never a
// vertex id. parent_port == 0 marks the root. child_ports ascend, which fixes
// the child order every traversal in this project uses.
struct TreeView {
  int parent_port = 0;
  std::vector<int> child_ports;
  std::vector<int> nontree_ports;

  bool is_root() const { return parent_port == 0; }
  bool is_leaf() const { return child_ports.empty(); }
};

}  // namespace wavecast
