#include "tgc/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tgc {

AuxiliaryDigraph build_aux_digraph(const RainbowWalk& walk, const GraphCollection& c) {
  if (!is_valid_rainbow_walk(walk, c)) throw std::domain_error("walk invalid in collection");
  AuxiliaryDigraph d;
  d.n = c.n;
  d.out.assign(static_cast<size_t>(c.n), 0);
  d.base = walk;
  const size_t len = walk.vertices.size();
  for (size_t i = 0; i < walk.colors.size(); ++i) {
    int u = walk.vertices[i];
    int succ = walk.vertices[(i + 1) % len];
    int col = walk.colors[i];
    d.out[static_cast<size_t>(u)] = c.graph(col).neighbors(u) & ~vbit(succ);
  }
  return d;
}

namespace {

std::uint64_t color_mask(const RainbowWalk& w) {
  std::uint64_t m = 0;
  for (int col : w.colors) m |= std::uint64_t{1} << col;
  return m;
}

VertexSet vertex_mask(const RainbowWalk& w) {
  VertexSet m = 0;
  for (int v : w.vertices) m |= vbit(v);
  return m;
}

}  // namespace

std::optional<RainbowWalk> rotate_to_cycle(const RainbowWalk& path, const GraphCollection& c,
                                           int reserve_a, int reserve_b) {
  if (path.kind != RainbowWalk::Kind::Path || !is_valid_rainbow_walk(path, c))
    throw std::domain_error("rotate_to_cycle needs a valid rainbow path");
  if (reserve_a < 0 || reserve_a >= c.colors() || reserve_b < 0 || reserve_b >= c.colors() ||
      reserve_a == reserve_b)
    throw std::domain_error("bad reserve colors");
  std::uint64_t on_path = color_mask(path);
  if ((on_path >> reserve_a) & 1 || (on_path >> reserve_b) & 1)
    throw std::domain_error("reserve color appears on path");

  const auto& v = path.vertices;
  const int t = static_cast<int>(v.size());
  const Graph& ga = c.graph(reserve_a);
  const Graph& gb = c.graph(reserve_b);
  // 1-indexed j: x_1 x_{j+1} in the first reserve and x_j x_t in the second.
  for (int j = 2; j <= t - 2; ++j) {
    if (!ga.has_edge(v[0], v[static_cast<size_t>(j)])) continue;
    if (!gb.has_edge(v[static_cast<size_t>(j - 1)], v[static_cast<size_t>(t - 1)])) continue;
    RainbowWalk cyc;
    cyc.kind = RainbowWalk::Kind::Cycle;
    cyc.vertices.push_back(v[0]);
    cyc.colors.push_back(reserve_a);
    for (int k = j; k < t; ++k) {
      cyc.vertices.push_back(v[static_cast<size_t>(k)]);
      if (k + 1 < t) cyc.colors.push_back(path.colors[static_cast<size_t>(k)]);
    }
    cyc.colors.push_back(reserve_b);
    for (int k = j - 1; k >= 1; --k) {
      cyc.vertices.push_back(v[static_cast<size_t>(k)]);
      cyc.colors.push_back(path.colors[static_cast<size_t>(k - 1)]);
    }
    if (!is_valid_rainbow_walk(cyc, c)) continue;
    return cyc;
  }
  return std::nullopt;
}

std::optional<RainbowWalk> connect_paths(const RainbowWalk& p, const RainbowWalk& q,
                                         const GraphCollection& c, const std::vector<int>& pool,
                                         VertexSet forbidden) {
  if (p.kind != RainbowWalk::Kind::Path || q.kind != RainbowWalk::Kind::Path)
    throw std::domain_error("connect_paths needs two paths");
  if (!is_valid_rainbow_walk(p, c) || !is_valid_rainbow_walk(q, c))
    throw std::domain_error("path invalid in collection");
  if (vertex_mask(p) & vertex_mask(q)) throw std::domain_error("paths share vertices");
  std::uint64_t pq_colors = color_mask(p) | color_mask(q);
  if (color_mask(p) & color_mask(q)) throw std::domain_error("paths share colors");
  std::uint64_t pool_mask = 0;
  for (int col : pool) {
    if (col < 0 || col >= c.colors()) throw std::domain_error("bad pool color");
    pool_mask |= std::uint64_t{1} << col;
  }
  if (pool_mask & pq_colors) throw std::domain_error("pool overlaps path colors");

  const int u = p.vertices.back();
  const int v = q.vertices.front();
  VertexSet avoid = forbidden | vertex_mask(p) | vertex_mask(q);

  auto assemble = [&](const std::vector<int>& bridge, const std::vector<int>& bridge_colors) {
    RainbowWalk joined;
    joined.kind = RainbowWalk::Kind::Path;
    joined.vertices = p.vertices;
    joined.colors = p.colors;
    joined.colors.push_back(bridge_colors[0]);
    for (size_t i = 0; i < bridge.size(); ++i) {
      joined.vertices.push_back(bridge[i]);
      joined.colors.push_back(bridge_colors[i + 1]);
    }
    joined.vertices.insert(joined.vertices.end(), q.vertices.begin(), q.vertices.end());
    joined.colors.insert(joined.colors.end(), q.colors.begin(), q.colors.end());
    return joined;
  };

  // One intermediate vertex, two fresh colors.
  for (int w = 0; w < c.n; ++w) {
    if (avoid & vbit(w)) continue;
    for (int c1 : pool) {
      if (!c.graph(c1).has_edge(u, w)) continue;
      for (int c2 : pool) {
        if (c2 == c1 || !c.graph(c2).has_edge(w, v)) continue;
        RainbowWalk joined = assemble({w}, {c1, c2});
        if (is_valid_rainbow_walk(joined, c)) return joined;
      }
    }
  }
  // Two intermediate vertices, three fresh colors.
  for (int w1 = 0; w1 < c.n; ++w1) {
    if (avoid & vbit(w1)) continue;
    for (int w2 = 0; w2 < c.n; ++w2) {
      if (w2 == w1 || (avoid & vbit(w2))) continue;
      for (int c1 : pool) {
        if (!c.graph(c1).has_edge(u, w1)) continue;
        for (int c3 : pool) {
          if (c3 == c1 || !c.graph(c3).has_edge(w1, w2)) continue;
          for (int c2 : pool) {
            if (c2 == c1 || c2 == c3 || !c.graph(c2).has_edge(w2, v)) continue;
            RainbowWalk joined = assemble({w1, w2}, {c1, c3, c2});
            if (is_valid_rainbow_walk(joined, c)) return joined;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Cycle re-rooted so position `a` becomes x_1. q[k] is x_{k+1}; qcol[k] is the
// color of the cycle edge x_{k+1} x_{k+2}.
struct Rerooted {
  std::vector<int> q;
  std::vector<int> qcol;
};

Rerooted reroot(const RainbowWalk& cyc, int a) {
  const int len = static_cast<int>(cyc.vertices.size());
  Rerooted r;
  r.q.resize(static_cast<size_t>(len));
  r.qcol.resize(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) {
    r.q[static_cast<size_t>(k)] = cyc.vertices[static_cast<size_t>((a + k) % len)];
    r.qcol[static_cast<size_t>(k)] = cyc.colors[static_cast<size_t>((a + k) % len)];
  }
  return r;
}

// Anchor order for the rotation stage: in-degree descending, index ascending.
std::vector<int> anchor_order(const RainbowWalk& cyc, const AuxiliaryDigraph& d) {
  const int len = static_cast<int>(cyc.vertices.size());
  std::vector<int> idx(static_cast<size_t>(len));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> indeg(static_cast<size_t>(len));
  for (int k = 0; k < len; ++k) indeg[static_cast<size_t>(k)] = d.in_degree(cyc.vertices[static_cast<size_t>(k)]);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return indeg[static_cast<size_t>(a)] > indeg[static_cast<size_t>(b)];
  });
  return idx;
}

struct Budget {
  int left;
  bool spend() { return --left >= 0; }
};

bool accept(const RainbowWalk& w, const GraphCollection& c) {
  return is_transversal_walk(w, c) && static_cast<int>(w.vertices.size()) == c.n;
}

// Case 1: rainbow (n-1)-cycle; splice the single off-cycle vertex in.
std::optional<RainbowWalk> case_one(const RainbowWalk& cyc, const GraphCollection& c, int y,
                                    Budget& budget) {
  const int len = static_cast<int>(cyc.vertices.size());
  const auto& v = cyc.vertices;
  const auto& col = cyc.colors;

  // Direct attach: drop cycle edge i, hang y on either endpoint in color i.
  for (int i = 0; i < len && budget.left > 0; ++i) {
    const Graph& gi = c.graph(col[static_cast<size_t>(i)]);
    if (gi.has_edge(y, v[static_cast<size_t>(i)])) {
      budget.spend();
      RainbowWalk path;
      path.kind = RainbowWalk::Kind::Path;
      for (int k = 1; k <= len; ++k) path.vertices.push_back(v[static_cast<size_t>((i + k) % len)]);
      for (int k = 1; k < len; ++k) path.colors.push_back(col[static_cast<size_t>((i + k) % len)]);
      path.vertices.push_back(y);
      path.colors.push_back(col[static_cast<size_t>(i)]);
      if (accept(path, c)) return path;
    }
    if (gi.has_edge(y, v[static_cast<size_t>((i + 1) % len)])) {
      budget.spend();
      RainbowWalk path;
      path.kind = RainbowWalk::Kind::Path;
      for (int k = 0; k < len; ++k) path.vertices.push_back(v[static_cast<size_t>((i - k + len) % len)]);
      for (int k = 1; k < len; ++k) path.colors.push_back(col[static_cast<size_t>((i - k + len) % len)]);
      path.vertices.push_back(y);
      path.colors.push_back(col[static_cast<size_t>(i)]);
      if (accept(path, c)) return path;
    }
  }

  // Rotation at each anchor: x_2..x_i x_1 x_{n-1}..x_{i+1} y, pairing an
  // in-arc of the anchor with an attachment of y in the anchor's color.
  AuxiliaryDigraph d = build_aux_digraph(cyc, c);
  for (int a : anchor_order(cyc, d)) {
    Rerooted r = reroot(cyc, a);
    for (int i = 2; i <= len - 1 && budget.left > 0; ++i) {
      const int xi = r.q[static_cast<size_t>(i - 1)];
      if (!c.graph(r.qcol[static_cast<size_t>(i - 1)]).has_edge(xi, r.q[0])) continue;
      if (!c.graph(r.qcol[0]).has_edge(r.q[static_cast<size_t>(i)], y)) continue;
      budget.spend();
      RainbowWalk path;
      path.kind = RainbowWalk::Kind::Path;
      for (int k = 2; k <= i; ++k) {
        path.vertices.push_back(r.q[static_cast<size_t>(k - 1)]);
        if (k < i) path.colors.push_back(r.qcol[static_cast<size_t>(k - 1)]);
      }
      path.colors.push_back(r.qcol[static_cast<size_t>(i - 1)]);
      path.vertices.push_back(r.q[0]);
      path.colors.push_back(r.qcol[static_cast<size_t>(len - 1)]);
      for (int k = len; k >= i + 1; --k) {
        path.vertices.push_back(r.q[static_cast<size_t>(k - 1)]);
        if (k > i + 1) path.colors.push_back(r.qcol[static_cast<size_t>(k - 2)]);
      }
      path.colors.push_back(r.qcol[0]);
      path.vertices.push_back(y);
      if (accept(path, c)) return path;
    }
    if (budget.left <= 0) break;
  }
  return std::nullopt;
}

// Case 2: rainbow (n-2)-cycle, off-cycle vertices y and y2, one free color.
std::optional<RainbowWalk> case_two(const RainbowWalk& cyc, const GraphCollection& c, int y,
                                    int y2, int free_color, Budget& budget) {
  const int len = static_cast<int>(cyc.vertices.size());
  AuxiliaryDigraph d = build_aux_digraph(cyc, c);
  std::vector<int> anchors = anchor_order(cyc, d);

  // Joined-pair splice: y2 y x_{i+1} .. x_{n-2} x_1 x_i .. x_2, entering
  // through the free color when the leftover pair is adjacent in it.
  if (c.graph(free_color).has_edge(y, y2)) {
    for (int a : anchors) {
      Rerooted r = reroot(cyc, a);
      for (int i = 2; i <= len - 1 && budget.left > 0; ++i) {
        if (!c.graph(r.qcol[0]).has_edge(r.q[static_cast<size_t>(i)], y)) continue;
        if (!c.graph(r.qcol[static_cast<size_t>(i - 1)]).has_edge(r.q[static_cast<size_t>(i - 1)], r.q[0]))
          continue;
        budget.spend();
        RainbowWalk path;
        path.kind = RainbowWalk::Kind::Path;
        path.vertices = {y2, y};
        path.colors = {free_color, r.qcol[0]};
        for (int k = i + 1; k <= len; ++k) {
          path.vertices.push_back(r.q[static_cast<size_t>(k - 1)]);
          if (k < len) path.colors.push_back(r.qcol[static_cast<size_t>(k - 1)]);
        }
        path.colors.push_back(r.qcol[static_cast<size_t>(len - 1)]);
        path.vertices.push_back(r.q[0]);
        path.colors.push_back(r.qcol[static_cast<size_t>(i - 1)]);
        for (int k = i; k >= 2; --k) {
          path.vertices.push_back(r.q[static_cast<size_t>(k - 1)]);
          if (k > 2) path.colors.push_back(r.qcol[static_cast<size_t>(k - 2)]);
        }
        if (accept(path, c)) return path;
      }
      if (budget.left <= 0) break;
    }
  }

  // Two-stage splice: thread y into the cycle (freeing the dropped edge's
  // color), then rotate the closed end and hang y2 on the freed color.
  for (int a : anchors) {
    Rerooted r = reroot(cyc, a);
    for (int i5 = 2; i5 <= len - 1 && budget.left > 0; ++i5) {
      if (!c.graph(r.qcol[0]).has_edge(r.q[static_cast<size_t>(i5 - 1)], y)) continue;
      if (!c.graph(free_color).has_edge(r.q[static_cast<size_t>(i5)], y)) continue;
      // P'' = x_2 .. x_{i5} y x_{i5+1} .. x_{n-2} x_1; its free color is the
      // dropped cycle edge color qcol(i5).
      std::vector<int> p, pcol;
      for (int k = 2; k <= i5; ++k) {
        p.push_back(r.q[static_cast<size_t>(k - 1)]);
        if (k < i5) pcol.push_back(r.qcol[static_cast<size_t>(k - 1)]);
      }
      pcol.push_back(r.qcol[0]);
      p.push_back(y);
      pcol.push_back(free_color);
      for (int k = i5 + 1; k <= len; ++k) {
        p.push_back(r.q[static_cast<size_t>(k - 1)]);
        if (k < len) pcol.push_back(r.qcol[static_cast<size_t>(k - 1)]);
      }
      pcol.push_back(r.qcol[static_cast<size_t>(len - 1)]);
      p.push_back(r.q[0]);
      const int fr = r.qcol[static_cast<size_t>(i5 - 1)];
      const int plen = static_cast<int>(p.size());

      for (int k = 1; k <= plen - 2 && budget.left > 0; ++k) {
        const int pk = p[static_cast<size_t>(k - 1)];
        const int pk1 = p[static_cast<size_t>(k)];
        if (!c.graph(pcol[static_cast<size_t>(k - 1)]).has_edge(pk, p[static_cast<size_t>(plen - 1)]))
          continue;
        if (!c.graph(fr).has_edge(y2, pk1)) continue;
        budget.spend();
        RainbowWalk path;
        path.kind = RainbowWalk::Kind::Path;
        for (int j = 1; j <= k; ++j) {
          path.vertices.push_back(p[static_cast<size_t>(j - 1)]);
          if (j < k) path.colors.push_back(pcol[static_cast<size_t>(j - 1)]);
        }
        path.colors.push_back(pcol[static_cast<size_t>(k - 1)]);
        for (int j = plen; j >= k + 1; --j) {
          path.vertices.push_back(p[static_cast<size_t>(j - 1)]);
          if (j > k + 1) path.colors.push_back(pcol[static_cast<size_t>(j - 2)]);
        }
        path.colors.push_back(fr);
        path.vertices.push_back(y2);
        if (accept(path, c)) return path;
      }
    }
    if (budget.left <= 0) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RainbowWalk> constructive_hamilton_path(const GraphCollection& c,
                                                      const SolverLimits& lim) {
  if (c.colors() != c.n - 1) throw std::domain_error("hamilton path needs m = n - 1");
  const int n = c.n;

  std::optional<RainbowWalk> result;
  if (n >= 5) {
    std::optional<RainbowWalk> cyc = find_longest_rainbow_cycle(c, n - 2, lim);
    if (cyc) {
      VertexSet off = full_set(n) & ~vertex_mask(*cyc);
      Budget budget{n * n};
      if (cyc->length() == n - 1) {
        result = case_one(*cyc, c, std::countr_zero(off), budget);
      } else {
        int y = std::countr_zero(off);
        int y2 = std::countr_zero(off & (off - 1));
        std::uint64_t free_colors = ~color_mask(*cyc) & ((std::uint64_t{1} << c.colors()) - 1);
        int f = std::countr_zero(free_colors);
        result = case_two(*cyc, c, y, y2, f, budget);
        if (!result) result = case_two(*cyc, c, y2, y, f, budget);
      }
    }
  }
  if (!result) result = find_transversal_hamilton_path(c, lim);
  if (result) {
    if (!find_assignment(result->host(n), c, AssignMode::Transversal))
      throw std::logic_error("constructed path failed re-validation");
  }
  return result;
}

}  // namespace tgc
