#pragma once

#include <optional>
#include <vector>

#include "tgc/core.hpp"

// Deciding whether a host subgraph is rainbow/transversal in a collection:
// compute an edge -> color assignment (injective for rainbow, bijective for
// transversal), or certify that none exists.

namespace tgc {

struct HostSubgraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // distinct endpoints, duplicate-free

  int edge_count() const { return static_cast<int>(edges.size()); }
};

HostSubgraph path_host(int n, const std::vector<int>& vertices);
HostSubgraph cycle_host(int n, const std::vector<int>& vertices);

enum class AssignMode { Rainbow, Transversal };

struct ColorAssignment {
  AssignMode mode = AssignMode::Rainbow;
  std::vector<int> edge_color;  // edge index -> color position in the collection
};

// Maximum bipartite matching between edges and admissible colors. Deterministic:
// edges are scanned in input order, colors in index order.
std::optional<ColorAssignment> find_assignment(const HostSubgraph& h, const GraphCollection& c,
                                               AssignMode mode);

// Independent brute force over all injections/bijections; |E(h)| <= 9.
std::optional<ColorAssignment> assignment_oracle(const HostSubgraph& h, const GraphCollection& c,
                                                 AssignMode mode);

// Re-checks every ColorAssignment invariant from scratch.
bool validate_assignment(const HostSubgraph& h, const GraphCollection& c,
                         const ColorAssignment& a);

}  // namespace tgc
