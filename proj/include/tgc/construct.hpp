#pragma once

#include <optional>
#include <vector>

#include "tgc/core.hpp"
#include "tgc/solver.hpp"

// Constructive machinery for transversal Hamilton paths: the auxiliary
// digraph over a rainbow walk, rotation index-set splices, a connecting tool
// for disjoint rainbow paths, and the end-to-end constructor with an
// exhaustive fallback.

namespace tgc {

// Arcs x_i -> z whenever x_i z lies in the graph of the color of the walk
// edge leaving x_i and z is not x_i's successor. Vertices off the walk have
// out-degree 0.
struct AuxiliaryDigraph {
  int n = 0;
  std::vector<VertexSet> out;
  RainbowWalk base;

  int out_degree(int v) const { return popcount(out[static_cast<size_t>(v)]); }
  int in_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u)
      if (out[static_cast<size_t>(u)] & vbit(v)) ++d;
    return d;
  }
  std::int64_t arc_count() const {
    std::int64_t s = 0;
    for (int u = 0; u < n; ++u) s += out_degree(u);
    return s;
  }
};

AuxiliaryDigraph build_aux_digraph(const RainbowWalk& walk, const GraphCollection& c);

// Rotation splice: with two reserve colors unused on the path, closes a
// maximal rainbow path x_1..x_t into a rainbow cycle on exactly V(path) by
// dropping one path edge and adding x_1 x_{j+1} (first reserve) and
// x_j x_t (second reserve) at an index j where both index sets meet.
std::optional<RainbowWalk> rotate_to_cycle(const RainbowWalk& path, const GraphCollection& c,
                                           int reserve_a, int reserve_b);

// Joins all of p, then all of q, through at most 2 intermediate vertices kept
// outside `forbidden` and both paths, spending at most 3 fresh colors from
// `pool`. One-vertex bridges are tried before two-vertex bridges.
std::optional<RainbowWalk> connect_paths(const RainbowWalk& p, const RainbowWalk& q,
                                         const GraphCollection& c, const std::vector<int>& pool,
                                         VertexSet forbidden);

// Pipeline: longest rainbow cycle of length >= n-2, then the one- or
// two-vertex rotation arguments, then the exhaustive solver as fallback.
// Whenever min_degree(c) >= (n-1)/2 the result is guaranteed present.
std::optional<RainbowWalk> constructive_hamilton_path(const GraphCollection& c,
                                                      const SolverLimits& lim = {});

}  // namespace tgc
