#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Data model for collections of graphs on a common vertex set, plus the TGC
// text interchange format. Vertices and colors are 0-indexed. Graphs are kept
// dense as one 64-bit neighborhood row per vertex; everything downstream is
// desk scale (n <= 64, typically n <= 24).

namespace tgc {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw std::domain_error("graph size out of range");
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<size_t>(u)] |= vbit(v);
    rows_[static_cast<size_t>(v)] |= vbit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<size_t>(u)] &= ~vbit(v);
    rows_[static_cast<size_t>(v)] &= ~vbit(u);
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return (rows_[static_cast<size_t>(u)] & vbit(v)) != 0;
  }

  VertexSet neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

  int degree(int v) const;
  int min_degree() const;
  int edge_count() const;
  bool empty() const { return edge_count() == 0; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::domain_error("vertex out of range");
    if (u == v) throw std::domain_error("loop edge");
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph complete_graph(int n);
// All pairs within `inside` (restricted to [0, n)).
Graph clique_on(int n, VertexSet inside);
// All pairs with one endpoint in a_side, the other outside.
Graph complete_bipartite(int n, VertexSet a_side);
// Disjoint cliques on a_side and its complement.
Graph two_cliques(int n, VertexSet a_side);

struct GraphCollection {
  int n = 0;
  std::vector<int> color_ids;   // distinct, parallel to graphs
  std::vector<Graph> graphs;

  int colors() const { return static_cast<int>(graphs.size()); }
  const Graph& graph(int i) const { return graphs[static_cast<size_t>(i)]; }

  bool operator==(const GraphCollection&) const = default;
};

// Uniform collection: m copies of g.
GraphCollection copies_of(const Graph& g, int m);

void validate_collection(const GraphCollection& c);

struct Partition {
  VertexSet a_side = 0;
  VertexSet b_side = 0;

  static Partition of(int n, VertexSet a) { return Partition{a, full_set(n) & ~a}; }
  bool covers(int n) const { return (a_side | b_side) == full_set(n) && (a_side & b_side) == 0; }
  bool equitable() const;
};

int popcount(VertexSet s);

// min over colors i and vertices v of d_{G_i}(v); m = 0 is a domain error.
int min_degree(const GraphCollection& c);

Graph union_graph(const GraphCollection& c);
// Union of all colors except `skip` (skip = -1 keeps all).
Graph union_graph_except(const GraphCollection& c, int skip);

struct TgcParseError : std::runtime_error {
  TgcParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// TGC text format, bit-exact on output:
//   tgc 1
//   n <N>
//   m <M>
//   c <color>      (one block per color, ascending on output)
//   <u> <v>        (0 <= u < v < N, sorted on output)
// '#' starts a comment; blank lines are ignored; LF endings on output.
GraphCollection parse_tgc(std::string_view text);
std::string serialize_tgc(const GraphCollection& c);

}  // namespace tgc
