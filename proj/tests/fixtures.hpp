#pragma once

#include <string>

#include "hic/graph.hpp"

namespace fixtures {

inline hic::Graph load(const std::string& name) {
  return hic::read_graph_file(std::string(HIC_TEST_DATA_DIR) + "/" + name);
}

inline hic::Graph fig1() { return load("fig1.txt"); }
// 0=v1 1=v2 2=a1 3=b1 4=b2 5..8 = b1's path, 9..12 = b2's path.
inline hic::Graph fig2() { return load("fig2.txt"); }

}  // namespace fixtures
