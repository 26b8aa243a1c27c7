#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgc/assign.hpp"
#include "tgc/core.hpp"

// Exact search for transversal/rainbow Hamilton paths and cycles. Exhaustive
// depth-first extension over bit sets, so an absent verdict is a proof of
// non-existence at the given n.

namespace tgc {

struct RainbowWalk {
  enum class Kind { Path, Cycle };

  Kind kind = Kind::Path;
  std::vector<int> vertices;
  // One color per consecutive pair; for cycles the last entry is the closing
  // edge back to vertices.front(). Colors are positions in the collection.
  std::vector<int> colors;

  int length() const { return static_cast<int>(colors.size()); }
  HostSubgraph host(int n) const {
    return kind == Kind::Cycle ? cycle_host(n, vertices) : path_host(n, vertices);
  }
};

// Distinct vertices, every edge present in its assigned color, colors pairwise
// distinct.
bool is_valid_rainbow_walk(const RainbowWalk& w, const GraphCollection& c);
// Valid and using every color of the collection exactly once.
bool is_transversal_walk(const RainbowWalk& w, const GraphCollection& c);

struct SolverLimits {
  int max_n = 24;  // desk-scale cap; raise explicitly to override
};

// m = n >= 3. Rooted at vertex 0; rotation/reflection broken by requiring the
// second vertex to precede the last.
std::optional<RainbowWalk> find_transversal_hamilton_cycle(const GraphCollection& c,
                                                           const SolverLimits& lim = {});

// m = n - 1, n >= 2. Reflection broken by requiring first endpoint < last.
std::optional<RainbowWalk> find_transversal_hamilton_path(const GraphCollection& c,
                                                          const SolverLimits& lim = {});

// Longest rainbow (injective-color) cycle of length >= min_len, searching
// lengths descending from min(n, m); 3 <= min_len <= n.
std::optional<RainbowWalk> find_longest_rainbow_cycle(const GraphCollection& c, int min_len,
                                                      const SolverLimits& lim = {});

// Number of distinct (Hamilton cycle, color bijection) pairs, cycles counted
// up to rotation and reflection. m = n <= 10.
std::int64_t count_transversal_hamilton_cycles(const GraphCollection& c);

}  // namespace tgc
