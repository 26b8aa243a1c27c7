#include "tgc/solver.hpp"

#include <algorithm>
#include <bit>

namespace tgc {

bool is_valid_rainbow_walk(const RainbowWalk& w, const GraphCollection& c) {
  const size_t len = w.vertices.size();
  if (len == 0) return false;
  const size_t want = w.kind == RainbowWalk::Kind::Cycle ? len : len - 1;
  if (w.colors.size() != want) return false;
  if (w.kind == RainbowWalk::Kind::Cycle && len < 3) return false;

  VertexSet seen = 0;
  for (int v : w.vertices) {
    if (v < 0 || v >= c.n) return false;
    if (seen & vbit(v)) return false;
    seen |= vbit(v);
  }
  std::uint64_t used = 0;
  for (size_t i = 0; i < w.colors.size(); ++i) {
    int col = w.colors[i];
    if (col < 0 || col >= c.colors()) return false;
    if (used & (std::uint64_t{1} << col)) return false;
    used |= std::uint64_t{1} << col;
    int u = w.vertices[i];
    int v = w.vertices[(i + 1) % len];
    if (!c.graph(col).has_edge(u, v)) return false;
  }
  return true;
}

bool is_transversal_walk(const RainbowWalk& w, const GraphCollection& c) {
  return is_valid_rainbow_walk(w, c) && static_cast<int>(w.colors.size()) == c.colors();
}

namespace {

struct Search {
  const GraphCollection& g;
  int n, m;
  bool spanning_prune;   // sound only when every vertex must be covered
  bool close_to_root;    // cycle target
  int root = 0;
  VertexSet allowed;     // vertices the walk may use
  std::vector<int> color_class;  // first color with an identical graph

  std::vector<int> path;
  std::vector<int> path_colors;
  VertexSet visited = 0;
  std::uint64_t used = 0;

  explicit Search(const GraphCollection& gc)
      : g(gc), n(gc.n), m(gc.colors()), spanning_prune(false), close_to_root(false),
        allowed(full_set(gc.n)) {
    color_class.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      color_class[static_cast<size_t>(i)] = i;
      for (int j = 0; j < i; ++j)
        if (gc.graph(j) == gc.graph(i)) {
          color_class[static_cast<size_t>(i)] = j;
          break;
        }
    }
  }

  // Identical colors are interchangeable in any completion, so only the
  // lowest unused color of each class needs to branch.
  std::uint64_t branchable_colors() const {
    std::uint64_t out = 0, seen = 0;
    for (int c = 0; c < m; ++c) {
      if ((used >> c) & 1) continue;
      std::uint64_t cls = std::uint64_t{1} << color_class[static_cast<size_t>(c)];
      if (seen & cls) continue;
      seen |= cls;
      out |= std::uint64_t{1} << c;
    }
    return out;
  }

  // Every unvisited-but-required vertex still has an incident pair
  // (unused color, edge) whose far end is unvisited, the head, or the root.
  bool feasible(int head) const {
    VertexSet pending = allowed & ~visited;
    VertexSet targets = pending | vbit(head);
    if (close_to_root) targets |= vbit(root);
    VertexSet rest = pending;
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      bool ok = false;
      for (int col = 0; col < m && !ok; ++col) {
        if (used & (std::uint64_t{1} << col)) continue;
        if (g.graph(col).neighbors(w) & targets & ~vbit(w)) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  }

  // Extends until the walk holds `target_vertices` vertices, then calls
  // `done()`. Branch order: neighbors ascending, colors ascending.
  template <typename Done>
  bool extend(int target_vertices, Done&& done) {
    if (static_cast<int>(path.size()) == target_vertices) {
      return done();
    }
    int head = path.back();
    const std::uint64_t branchable = branchable_colors();
    VertexSet cands = allowed & ~visited;
    while (cands) {
      int z = std::countr_zero(cands);
      cands &= cands - 1;
      for (int col = 0; col < m; ++col) {
        if (!((branchable >> col) & 1)) continue;
        if (!g.graph(col).has_edge(head, z)) continue;
        path.push_back(z);
        path_colors.push_back(col);
        visited |= vbit(z);
        used |= std::uint64_t{1} << col;
        bool ok = !spanning_prune || feasible(z);
        if (ok && extend(target_vertices, done)) return true;
        used &= ~(std::uint64_t{1} << col);
        visited &= ~vbit(z);
        path_colors.pop_back();
        path.pop_back();
      }
    }
    return false;
  }
};

void check_cap(const GraphCollection& c, const SolverLimits& lim) {
  if (c.n > lim.max_n) throw std::domain_error("n exceeds solver cap (override max_n to raise)");
}

}  // namespace

std::optional<RainbowWalk> find_transversal_hamilton_cycle(const GraphCollection& c,
                                                           const SolverLimits& lim) {
  if (c.colors() != c.n) throw std::domain_error("hamilton cycle needs m = n");
  if (c.n < 3) throw std::domain_error("hamilton cycle needs n >= 3");
  check_cap(c, lim);

  Search s(c);
  s.spanning_prune = true;
  s.close_to_root = true;
  s.root = 0;
  s.path = {0};
  s.visited = vbit(0);

  RainbowWalk out;
  bool found = s.extend(c.n, [&] {
    // n vertices placed, n-1 colors used; one color remains for the closing edge.
    if (s.path[1] > s.path[static_cast<size_t>(c.n - 1)]) return false;
    std::uint64_t rest = ~s.used & ((std::uint64_t{1} << c.colors()) - 1);
    int col = std::countr_zero(rest);
    if (!c.graph(col).has_edge(s.path.back(), 0)) return false;
    out.kind = RainbowWalk::Kind::Cycle;
    out.vertices = s.path;
    out.colors = s.path_colors;
    out.colors.push_back(col);
    return true;
  });
  if (!found) return std::nullopt;
  return out;
}

std::optional<RainbowWalk> find_transversal_hamilton_path(const GraphCollection& c,
                                                          const SolverLimits& lim) {
  if (c.colors() != c.n - 1) throw std::domain_error("hamilton path needs m = n - 1");
  if (c.n < 2) throw std::domain_error("hamilton path needs n >= 2");
  check_cap(c, lim);

  for (int start = 0; start < c.n; ++start) {
    Search s(c);
    s.spanning_prune = true;
    s.path = {start};
    s.visited = vbit(start);
    RainbowWalk out;
    bool found = s.extend(c.n, [&] {
      if (s.path.front() > s.path.back()) return false;  // reflection
      out.kind = RainbowWalk::Kind::Path;
      out.vertices = s.path;
      out.colors = s.path_colors;
      return true;
    });
    if (found) return out;
  }
  return std::nullopt;
}

std::optional<RainbowWalk> find_longest_rainbow_cycle(const GraphCollection& c, int min_len,
                                                      const SolverLimits& lim) {
  if (min_len < 3 || min_len > c.n) throw std::domain_error("min_len must be in [3, n]");
  check_cap(c, lim);

  int top = std::min(c.n, c.colors());
  for (int len = top; len >= min_len; --len) {
    // Root is the smallest vertex on the cycle.
    for (int root = 0; root + len <= c.n; ++root) {
      Search s(c);
      s.close_to_root = true;
      s.spanning_prune = (len == c.n);
      s.root = root;
      s.allowed = full_set(c.n) & ~(full_set(root + 1) ^ vbit(root));
      s.path = {root};
      s.visited = vbit(root);
      RainbowWalk out;
      bool found = s.extend(len, [&] {
        if (s.path[1] > s.path.back()) return false;
        const std::uint64_t branchable = s.branchable_colors();
        for (int col = 0; col < c.colors(); ++col) {
          if (!((branchable >> col) & 1)) continue;
          if (!c.graph(col).has_edge(s.path.back(), root)) continue;
          out.kind = RainbowWalk::Kind::Cycle;
          out.vertices = s.path;
          out.colors = s.path_colors;
          out.colors.push_back(col);
          return true;
        }
        return false;
      });
      if (found) return out;
    }
  }
  return std::nullopt;
}

std::int64_t count_transversal_hamilton_cycles(const GraphCollection& c) {
  if (c.colors() != c.n) throw std::domain_error("count needs m = n");
  if (c.n > 10) throw std::domain_error("count is capped at n = 10");
  if (c.n < 3) return 0;

  const int n = c.n;
  Graph uni = union_graph(c);

  // For one fixed cycle: perfect matchings between its edges and the colors,
  // by subset DP (dp[mask] = ways to color the first popcount(mask) edges).
  std::vector<std::pair<int, int>> edges(static_cast<size_t>(n));
  std::vector<std::int64_t> dp(static_cast<size_t>(1) << n);
  auto count_bijections = [&](const std::vector<int>& cyc) -> std::int64_t {
    for (int i = 0; i < n; ++i) edges[static_cast<size_t>(i)] = {cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % n)]};
    dp.assign(dp.size(), 0);
    dp[0] = 1;
    for (std::uint64_t mask = 1; mask < dp.size(); ++mask) {
      int k = std::popcount(mask) - 1;  // edge index being colored
      auto [u, v] = edges[static_cast<size_t>(k)];
      std::int64_t total = 0;
      std::uint64_t rest = mask;
      while (rest) {
        int col = std::countr_zero(rest);
        rest &= rest - 1;
        if (c.graph(col).has_edge(u, v)) total += dp[mask & ~(std::uint64_t{1} << col)];
      }
      dp[mask] = total;
    }
    return dp[dp.size() - 1];
  };

  std::int64_t total = 0;
  std::vector<int> cyc = {0};
  VertexSet visited = vbit(0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cyc.size()) == n) {
      if (cyc[1] > cyc.back()) return;
      if (!uni.has_edge(cyc.back(), 0)) return;
      total += count_bijections(cyc);
      return;
    }
    VertexSet cands = uni.neighbors(cyc.back()) & ~visited;
    while (cands) {
      int z = std::countr_zero(cands);
      cands &= cands - 1;
      cyc.push_back(z);
      visited |= vbit(z);
      self(self);
      visited &= ~vbit(z);
      cyc.pop_back();
    }
  };
  rec(rec);
  return total;
}

}  // namespace tgc
