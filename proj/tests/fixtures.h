#pragma once

#include "graphspir/graph.h"
#include "oracle.h"

namespace graphspir::testing {

// Edge orders follow the worked examples: edge index = message index.
inline Graph P3() { return Graph(3, {{1, 2}, {2, 3}}, "P3"); }
inline Graph P4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}, "P4"); }
inline Graph C3() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}, "C3"); }
inline Graph C4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, "C4"); }
inline Graph S4() { return Graph(4, {{1, 4}, {2, 4}, {3, 4}}, "S4"); }
inline Graph M() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}, "M"); }
inline Graph K4() { return MakeComplete(4); }

inline oracle::Instance InstanceOf(const Graph& g) {
  oracle::Instance inst{static_cast<int>(g.vertex_count()), {}};
  for (const Edge& e : g.edges()) {
    inst.edges.emplace_back(static_cast<int>(e.lower), static_cast<int>(e.upper));
  }
  return inst;
}

}  // namespace graphspir::testing
