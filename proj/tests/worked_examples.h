#pragma once

#include "mutclass/diagram.h"

namespace mutclass {

// Three 7-vertex diagrams from a worked mutation sequence.

// Four oriented triangles in a strip plus a pendant vertex; 10 edges.
inline Diagram worked_example_i() {
  Diagram d(7);
  d.add_edges(std::vector<Edge>{{0, 2}, {1, 4}, {1, 0}, {2, 1}, {2, 5},
                                {3, 1}, {4, 3}, {4, 2}, {5, 4}, {5, 6}});
  return d;
}

// One weight-4 double arrow; 10 edges.
inline Diagram worked_example_ii() {
  Diagram d(7);
  d.add_edges(std::vector<Edge>{{0, 3}, {1, 3}, {2, 4}, {2, 1}, {2, 0},
                                {3, 2, 4}, {4, 6}, {4, 3}, {5, 4}, {6, 5}});
  return d;
}

// Simply-laced; 12 edges.
inline Diagram worked_example_iii() {
  Diagram d(7);
  d.add_edges(std::vector<Edge>{{0, 2}, {1, 0}, {1, 3}, {2, 1}, {2, 5}, {3, 2},
                                {3, 4}, {4, 5}, {4, 1}, {5, 3}, {5, 6}, {6, 4}});
  return d;
}

}  // namespace mutclass
