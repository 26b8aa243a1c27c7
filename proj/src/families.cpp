#include "tgc/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "tgc/rng.hpp"

namespace tgc {

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Unknown: return "unknown";
    case FamilyTag::HalfSplit: return "half-split";
    case FamilyTag::DominatingVertexTwoCliques: return "dom-vertex";
    case FamilyTag::HstSpanningOddT: return "hst";
    case FamilyTag::NearSplitSparseB: return "near-split-b";
    case FamilyTag::NoR2mTwoCliquesOneFree: return "no-r2m-2cliques";
    case FamilyTag::NoR2mStarThroughU: return "no-r2m-star-u";
    case FamilyTag::NoR2mCrossPairFig1a: return "no-r2m-fig1a";
    case FamilyTag::NoR2mSwapPairFig1b: return "no-r2m-fig1b";
    case FamilyTag::HPathHn10: return "hpath-hn10";
    case FamilyTag::HPathNearSplit: return "hpath-near-split";
  }
  return "unknown";
}

std::optional<FamilyTag> family_tag_from_name(std::string_view name) {
  for (FamilyTag tag :
       {FamilyTag::HalfSplit, FamilyTag::DominatingVertexTwoCliques, FamilyTag::HstSpanningOddT,
        FamilyTag::NearSplitSparseB, FamilyTag::NoR2mTwoCliquesOneFree,
        FamilyTag::NoR2mStarThroughU, FamilyTag::NoR2mCrossPairFig1a,
        FamilyTag::NoR2mSwapPairFig1b, FamilyTag::HPathHn10, FamilyTag::HPathNearSplit})
    if (name == family_tag_name(tag)) return tag;
  return std::nullopt;
}

const char* cert_reason_name(CertReason r) {
  switch (r) {
    case CertReason::IndependentSetTooLarge: return "independent-set-too-large";
    case CertReason::CutVertexArgument: return "cut-vertex-argument";
    case CertReason::ParityOfCrossEdges: return "parity-of-cross-edges";
    case CertReason::SegmentCount: return "segment-count";
    case CertReason::NoTwoDisjointRainbowCrossEdges: return "no-two-disjoint-rainbow-cross-edges";
  }
  return "?";
}

namespace {

bool side_empty(const Graph& g, VertexSet s) {
  VertexSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & s) return false;
  }
  return true;
}

bool side_clique(const Graph& g, VertexSet s) {
  VertexSet rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(v) & s) != (s & ~vbit(v))) return false;
  }
  return true;
}

bool no_cross(const Graph& g, VertexSet a, VertexSet b) {
  VertexSet rest = a;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & b) return false;
  }
  return true;
}

bool cross_complete(const Graph& g, VertexSet a, VertexSet b) {
  VertexSet rest = a;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((g.neighbors(v) & b) != b) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> cross_edges(const Graph& g, VertexSet a) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges()) {
    bool ua = (a >> u) & 1, va = (a >> v) & 1;
    if (ua != va) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<int, int>> inside_edges(const Graph& g, VertexSet s) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges())
    if (((s >> u) & 1) && ((s >> v) & 1)) out.emplace_back(u, v);
  return out;
}

bool exact_two_cliques(const Graph& g, VertexSet a, VertexSet b) {
  return side_clique(g, a) && side_clique(g, b) && no_cross(g, a, b);
}

std::vector<VertexSet> components(const Graph& g, VertexSet inside) {
  std::vector<VertexSet> comps;
  VertexSet todo = inside;
  while (todo) {
    int seed = std::countr_zero(todo);
    VertexSet comp = vbit(seed), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      VertexSet rest = frontier;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= g.neighbors(v) & inside & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    todo &= ~comp;
  }
  return comps;
}

constexpr size_t kCandidateCap = 8192;

// Independent sets of g of size exactly k that contain `forced`, vertices
// chosen ascending.
void independent_sets(const Graph& g, int k, VertexSet forced, std::vector<VertexSet>& out) {
  const int n = g.n();
  VertexSet blocked = 0;
  VertexSet rest = forced;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & forced) return;  // forced set not independent
    blocked |= g.neighbors(v);
  }
  if (popcount(forced) > k) return;
  auto rec = [&](auto&& self, int from, VertexSet chosen, VertexSet bad, int need) -> void {
    if (out.size() >= kCandidateCap) return;
    if (need == 0) {
      out.push_back(chosen);
      return;
    }
    for (int v = from; v <= n - need; ++v) {
      if ((bad >> v) & 1) continue;
      self(self, v + 1, chosen | vbit(v), bad | g.neighbors(v), need - 1);
      if (out.size() >= kCandidateCap) return;
    }
  };
  rec(rec, 0, forced, blocked | forced, k - popcount(forced));
}

// Side assignments: distribute whole pieces so the A side has exactly
// `target` vertices. Pieces may be (X, Y) pairs that must land on opposite
// sides, or one-sided blocks.
struct Piece {
  VertexSet x = 0;
  VertexSet y = 0;
};

void side_assignments(const std::vector<Piece>& pieces, int target,
                      std::vector<VertexSet>& out) {
  auto rec = [&](auto&& self, size_t idx, VertexSet a, int have) -> void {
    if (out.size() >= kCandidateCap) return;
    if (have > target) return;
    if (idx == pieces.size()) {
      if (have == target) out.push_back(a);
      return;
    }
    const Piece& p = pieces[idx];
    self(self, idx + 1, a | p.x, have + popcount(p.x));
    if (p.y || p.x) self(self, idx + 1, a | p.y, have + popcount(p.y));
  };
  rec(rec, 0, 0, 0);
}

// Equitable-or-target partitions keeping every component of g on one side.
std::vector<VertexSet> one_sided_candidates(const Graph& g, int target) {
  std::vector<Piece> pieces;
  for (VertexSet comp : components(g, full_set(g.n()))) pieces.push_back({comp, 0});
  std::vector<VertexSet> out;
  side_assignments(pieces, target, out);
  return out;
}

// Partitions where g is bipartite between the sides.
std::vector<VertexSet> bipartite_candidates(const Graph& g, int target) {
  const int n = g.n();
  std::vector<Piece> pieces;
  for (VertexSet comp : components(g, full_set(n))) {
    if (popcount(comp) == 1) {
      pieces.push_back({comp, 0});
      continue;
    }
    // 2-color the component; odd cycles kill the candidate set.
    std::vector<int> color(static_cast<size_t>(n), -1);
    int seed = std::countr_zero(comp);
    color[static_cast<size_t>(seed)] = 0;
    std::vector<int> queue = {seed};
    VertexSet x = vbit(seed), y = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      VertexSet nb = g.neighbors(v) & comp;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          (color[static_cast<size_t>(w)] == 0 ? x : y) |= vbit(w);
          queue.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return {};
        }
      }
    }
    pieces.push_back({x, y});
  }
  std::vector<VertexSet> out;
  side_assignments(pieces, target, out);
  return out;
}

GraphCollection make_hst(int n, int s, int t) {
  VertexSet a = full_set((n + 1) / 2);
  GraphCollection c;
  c.n = n;
  for (int i = 0; i < s; ++i) {
    c.color_ids.push_back(c.colors());
    c.graphs.push_back(two_cliques(n, a));
  }
  for (int i = 0; i < t; ++i) {
    c.color_ids.push_back(c.colors());
    c.graphs.push_back(complete_bipartite(n, a));
  }
  return c;
}

void fill_side(Graph& g, VertexSet side, Fill fill, Rng& rng) {
  if (fill == Fill::Empty) return;
  VertexSet rest = side;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    VertexSet others = rest;
    while (others) {
      int v = std::countr_zero(others);
      others &= others - 1;
      if (fill == Fill::Complete || rng.coin()) g.add_edge(u, v);
    }
  }
}

}  // namespace

GraphCollection generate_h_s_t(int n, int s, int t) {
  if (n < 2 || s < 0 || t < 0 || s + t != n) throw std::domain_error("need s + t = n >= 2");
  return make_hst(n, s, t);
}

GraphCollection generate_half_split(int n, Fill fill, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw std::domain_error("half-split needs odd n >= 3");
  VertexSet a = full_set((n + 1) / 2);
  VertexSet b = full_set(n) & ~a;
  Rng rng(seed);
  GraphCollection c;
  c.n = n;
  for (int i = 0; i < n; ++i) {
    Graph g = complete_bipartite(n, a);
    fill_side(g, b, fill, rng);
    c.color_ids.push_back(i);
    c.graphs.push_back(g);
  }
  return c;
}

GraphCollection generate_thm3_family(FamilyTag tag, int n, const FamilyParams& params) {
  Rng rng(params.seed);
  switch (tag) {
    case FamilyTag::HalfSplit:
      return generate_half_split(n, params.fill, params.seed);

    case FamilyTag::DominatingVertexTwoCliques: {
      if (n < 3 || n % 2 == 0) throw std::domain_error("dom-vertex needs odd n >= 3");
      int u = params.u < 0 ? 0 : params.u;
      if (u < 0 || u >= n) throw std::domain_error("bad vertex u");
      VertexSet rest = full_set(n) & ~vbit(u);
      VertexSet a = 0;
      for (int k = 0; k < (n - 1) / 2; ++k) {
        int v = std::countr_zero(rest);
        a |= vbit(v);
        rest &= rest - 1;
      }
      VertexSet b = full_set(n) & ~vbit(u) & ~a;
      Graph g = clique_on(n, a);
      for (auto [x, y] : clique_on(n, b).edges()) g.add_edge(x, y);
      for (int v = 0; v < n; ++v)
        if (v != u) g.add_edge(u, v);
      return copies_of(g, n);
    }

    case FamilyTag::HstSpanningOddT: {
      int t = params.t < 0 ? 1 : params.t;
      if (n < 4 || n % 2 != 0) throw std::domain_error("hst family needs even n >= 4");
      if (t % 2 == 0 || t < 1 || t > n) throw std::domain_error("hst family needs odd t in [1, n]");
      return make_hst(n, n - t, t);
    }

    case FamilyTag::NearSplitSparseB: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("near-split-b needs even n >= 4");
      VertexSet a = full_set(n / 2 - 1);
      VertexSet b = full_set(n) & ~a;
      if (params.u >= 0 && (params.v < 0 || !((b >> params.u) & 1) || !((b >> params.v) & 1) ||
                            params.u == params.v))
        throw std::domain_error("u, v must be distinct vertices of B");
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n; ++i) {
        Graph g = complete_bipartite(n, a);
        fill_side(g, a, params.fill, rng);
        if (i == params.exceptional_color) fill_side(g, b, Fill::Complete, rng);
        else if (params.u >= 0) g.add_edge(params.u, params.v);
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::NoR2mTwoCliquesOneFree: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("no-r2m families need even n >= 4");
      VertexSet a = full_set(n / 2);
      int freec = params.exceptional_color < 0 ? 0 : params.exceptional_color;
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n; ++i) {
        Graph g = two_cliques(n, a);
        if (i == freec && params.fill != Fill::Empty) {
          VertexSet rest = a;
          while (rest) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            VertexSet others = full_set(n) & ~a;
            while (others) {
              int y = std::countr_zero(others);
              others &= others - 1;
              if (params.fill == Fill::Complete || rng.coin()) g.add_edge(x, y);
            }
          }
        }
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::NoR2mStarThroughU: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("no-r2m families need even n >= 4");
      VertexSet a = full_set(n / 2);
      int u = params.u < 0 ? 0 : params.u;
      if (!((a >> u) & 1)) throw std::domain_error("u must lie in A");
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n; ++i) {
        Graph g = two_cliques(n, a);
        VertexSet b = full_set(n) & ~a;
        while (b) {
          int w = std::countr_zero(b);
          b &= b - 1;
          if (params.fill == Fill::Complete || (params.fill == Fill::Random && rng.coin()))
            g.add_edge(u, w);
        }
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::NoR2mCrossPairFig1a: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("no-r2m families need even n >= 4");
      VertexSet a = full_set(n / 2);
      int u = params.u < 0 ? 0 : params.u;
      int v = params.v < 0 ? n / 2 : params.v;
      if (!((a >> u) & 1) || ((a >> v) & 1)) throw std::domain_error("need u in A, v in B");
      int special = params.exceptional_color < 0 ? 0 : params.exceptional_color;
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n; ++i) {
        Graph g = two_cliques(n, a);
        if (params.fill != Fill::Empty) {
          if (i == special) {
            for (int w = 0; w < n; ++w) {
              bool wa = (a >> w) & 1;
              if (!wa && w != v && (params.fill == Fill::Complete || rng.coin())) g.add_edge(u, w);
              if (wa && w != u && (params.fill == Fill::Complete || rng.coin())) g.add_edge(w, v);
            }
          }
          if (params.fill == Fill::Complete || rng.coin()) g.add_edge(u, v);
        }
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::NoR2mSwapPairFig1b: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("no-r2m families need even n >= 4");
      VertexSet a = full_set(n / 2);
      int u = params.u < 0 ? 0 : params.u;
      int u2 = params.u2 < 0 ? 1 : params.u2;
      int v = params.v < 0 ? n / 2 : params.v;
      int v2 = params.v2 < 0 ? n / 2 + 1 : params.v2;
      if (!((a >> u) & 1) || !((a >> u2) & 1) || ((a >> v) & 1) || ((a >> v2) & 1) || u == u2 ||
          v == v2)
        throw std::domain_error("need distinct u, u' in A and v, v' in B");
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n; ++i) {
        Graph g = two_cliques(n, a);
        if (i == 0) {
          g.add_edge(u, v);
          g.add_edge(u2, v2);
        } else if (i == 1) {
          g.add_edge(u, v2);
          g.add_edge(u2, v);
        }
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::HPathHn10: {
      if (n < 2) throw std::domain_error("hpath-hn10 needs n >= 2");
      GraphCollection c = make_hst(n, n - 1, 0);
      return c;
    }

    case FamilyTag::HPathNearSplit: {
      if (n < 4) throw std::domain_error("hpath-near-split needs n >= 4");
      int asize = n % 2 == 0 ? n / 2 + 1 : (n + 3) / 2;
      VertexSet a = full_set(asize);
      VertexSet b = full_set(n) & ~a;
      if (params.u >= 0 && (params.v < 0 || !((a >> params.u) & 1) || !((a >> params.v) & 1) ||
                            params.u == params.v))
        throw std::domain_error("u, v must be distinct vertices of A");
      if (n % 2 == 0 && (params.exceptional_color >= 0 || params.u >= 0))
        throw std::domain_error("even-n variant has G_i[A] empty for every color");
      GraphCollection c;
      c.n = n;
      for (int i = 0; i < n - 1; ++i) {
        Graph g = complete_bipartite(n, a);
        fill_side(g, b, params.fill == Fill::Empty ? Fill::Empty : Fill::Complete, rng);
        if (i == params.exceptional_color) fill_side(g, a, Fill::Complete, rng);
        else if (params.u >= 0) g.add_edge(params.u, params.v);
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      return c;
    }

    case FamilyTag::Unknown:
      break;
  }
  throw std::domain_error("cannot generate the Unknown tag");
}

bool has_rainbow_two_matching(const GraphCollection& c, const Partition& p) {
  for (int i = 0; i < c.colors(); ++i) {
    auto ei = cross_edges(c.graph(i), p.a_side);
    if (ei.empty()) continue;
    for (int j = 0; j < c.colors(); ++j) {
      if (j == i) continue;
      for (auto [u1, v1] : ei)
        for (auto [u2, v2] : cross_edges(c.graph(j), p.a_side))
          if (u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2) return true;
    }
  }
  return false;
}

namespace {

// --- family predicates (verify a witness) ---

bool check_half_split(const GraphCollection& c, VertexSet a) {
  const int n = c.n;
  if (n < 3 || n % 2 == 0 || c.colors() != n) return false;
  if (popcount(a) != (n + 1) / 2) return false;
  VertexSet b = full_set(n) & ~a;
  for (const Graph& g : c.graphs)
    if (!side_empty(g, a) || !cross_complete(g, a, b)) return false;
  return true;
}

bool check_dominating_vertex(const GraphCollection& c, int u, VertexSet a) {
  const int n = c.n;
  if (n < 3 || n % 2 == 0 || c.colors() != n) return false;
  if (u < 0 || u >= n || ((a >> u) & 1)) return false;
  if (popcount(a) != (n - 1) / 2) return false;
  VertexSet b = full_set(n) & ~a & ~vbit(u);
  for (const Graph& g : c.graphs) {
    if (g.degree(u) != n - 1) return false;
    if (!exact_two_cliques(g, a, b)) return false;  // ignoring u, checked above
    if (!no_cross(g, a, b)) return false;
  }
  return true;
}

// Purity of every color wrt (a, b); reports cross-color and empty counts.
bool hst_purity(const GraphCollection& c, VertexSet a, int* t_cross, int* free_colors) {
  VertexSet b = full_set(c.n) & ~a;
  int tc = 0, fc = 0;
  for (const Graph& g : c.graphs) {
    bool cross = !no_cross(g, a, b);
    bool within = !side_empty(g, a) || !side_empty(g, b);
    if (cross && within) return false;
    if (cross) ++tc;
    if (!cross && !within) ++fc;
  }
  *t_cross = tc;
  *free_colors = fc;
  return true;
}

bool check_hst_spanning(const GraphCollection& c, VertexSet a, int t) {
  const int n = c.n;
  if (n < 4 || n % 2 != 0 || c.colors() != n) return false;
  if (popcount(a) != n / 2) return false;
  int tc = 0, fc = 0;
  if (!hst_purity(c, a, &tc, &fc)) return false;
  return t % 2 == 1 && t >= 1 && t <= n && tc <= t && t <= tc + fc;
}

// Sparse-side shape: how many walk edges the side can ever host. 0 = empty in
// every color; 1 = at most one exceptional color, or a single fixed pair.
int sparse_side_budget(const GraphCollection& c, VertexSet s, int* exceptional) {
  std::vector<int> nonempty;
  for (int i = 0; i < c.colors(); ++i)
    if (!side_empty(c.graph(i), s)) nonempty.push_back(i);
  if (exceptional) *exceptional = nonempty.size() == 1 ? nonempty.front() : -1;
  if (nonempty.empty()) return 0;
  if (nonempty.size() == 1) return 1;
  std::pair<int, int> common{-1, -1};
  for (int i : nonempty) {
    auto edges = inside_edges(c.graph(i), s);
    if (edges.size() != 1) return -1;
    if (common.first < 0) common = edges.front();
    else if (common != edges.front()) return -1;
  }
  return 1;
}

bool check_near_split_sparse_b(const GraphCollection& c, VertexSet a) {
  const int n = c.n;
  if (n < 4 || n % 2 != 0 || c.colors() != n) return false;
  if (popcount(a) != n / 2 - 1) return false;
  return sparse_side_budget(c, full_set(n) & ~a, nullptr) >= 0;
}

bool even_equitable(const GraphCollection& c, VertexSet a) {
  return c.n >= 4 && c.n % 2 == 0 && c.colors() == c.n && popcount(a) == c.n / 2;
}

bool check_no_r2m_two_cliques(const GraphCollection& c, VertexSet a) {
  if (!even_equitable(c, a)) return false;
  VertexSet b = full_set(c.n) & ~a;
  int bad = 0;
  for (const Graph& g : c.graphs)
    if (!exact_two_cliques(g, a, b)) ++bad;
  return bad <= 1;
}

bool check_no_r2m_star_u(const GraphCollection& c, VertexSet a, int u) {
  if (!even_equitable(c, a)) return false;
  if (u < 0 || u >= c.n || !((a >> u) & 1)) return false;
  for (const Graph& g : c.graphs)
    for (auto [x, y] : cross_edges(g, a))
      if (x != u && y != u) return false;
  return true;
}

bool check_no_r2m_fig1a(const GraphCollection& c, VertexSet a, int u, int v) {
  if (!even_equitable(c, a)) return false;
  if (u < 0 || v < 0 || !((a >> u) & 1) || ((a >> v) & 1)) return false;
  int special = -1;
  for (int i = 0; i < c.colors(); ++i) {
    bool only_uv = true;
    for (auto [x, y] : cross_edges(c.graph(i), a)) {
      if ((x == u && y == v) || (x == v && y == u)) continue;
      only_uv = false;
      if (x != u && y != u && x != v && y != v) return false;  // off both stars
    }
    if (!only_uv) {
      if (special >= 0 && special != i) return false;
      special = i;
    }
  }
  return true;
}

bool check_no_r2m_fig1b(const GraphCollection& c, VertexSet a, int u, int u2, int v, int v2) {
  if (!even_equitable(c, a)) return false;
  if (u < 0 || u2 < 0 || v < 0 || v2 < 0 || u == u2 || v == v2) return false;
  if (!((a >> u) & 1) || !((a >> u2) & 1) || ((a >> v) & 1) || ((a >> v2) & 1)) return false;
  VertexSet b = full_set(c.n) & ~a;
  auto norm = [](int x, int y) { return std::pair(std::min(x, y), std::max(x, y)); };
  std::set<std::pair<int, int>> first = {norm(u, v), norm(u2, v2)};
  std::set<std::pair<int, int>> second = {norm(u, v2), norm(u2, v)};
  bool saw_first = false, saw_second = false;
  for (const Graph& g : c.graphs) {
    auto ce = cross_edges(g, a);
    std::set<std::pair<int, int>> got;
    for (auto [x, y] : ce) got.insert(norm(x, y));
    if (got.empty()) {
      if (!exact_two_cliques(g, a, b)) return false;
    } else if (got == first && !saw_first) {
      saw_first = true;
    } else if (got == second && !saw_second) {
      saw_second = true;
    } else {
      return false;
    }
  }
  return saw_first && saw_second;
}

bool check_hpath_hn10(const GraphCollection& c, VertexSet a) {
  const int n = c.n;
  if (n < 2 || c.colors() != n - 1) return false;
  if (popcount(a) != (n + 1) / 2) return false;
  VertexSet b = full_set(n) & ~a;
  if (!b) return false;
  for (const Graph& g : c.graphs)
    if (!no_cross(g, a, b)) return false;
  return true;
}

bool check_hpath_near_split(const GraphCollection& c, VertexSet a) {
  const int n = c.n;
  if (n < 4 || c.colors() != n - 1) return false;
  int want = n % 2 == 0 ? n / 2 + 1 : (n + 3) / 2;
  if (popcount(a) != want) return false;
  int budget = sparse_side_budget(c, a, nullptr);
  if (n % 2 == 0) return budget == 0;
  return budget >= 0;
}

bool check_witness(const GraphCollection& c, const ExtremalClass& cls) {
  switch (cls.tag) {
    case FamilyTag::HalfSplit: return check_half_split(c, cls.a_side);
    case FamilyTag::DominatingVertexTwoCliques:
      return check_dominating_vertex(c, cls.u, cls.a_side);
    case FamilyTag::HstSpanningOddT: return check_hst_spanning(c, cls.a_side, cls.t);
    case FamilyTag::NearSplitSparseB: return check_near_split_sparse_b(c, cls.a_side);
    case FamilyTag::NoR2mTwoCliquesOneFree: return check_no_r2m_two_cliques(c, cls.a_side);
    case FamilyTag::NoR2mStarThroughU: return check_no_r2m_star_u(c, cls.a_side, cls.u);
    case FamilyTag::NoR2mCrossPairFig1a: return check_no_r2m_fig1a(c, cls.a_side, cls.u, cls.v);
    case FamilyTag::NoR2mSwapPairFig1b:
      return check_no_r2m_fig1b(c, cls.a_side, cls.u, cls.u2, cls.v, cls.v2);
    case FamilyTag::HPathHn10: return check_hpath_hn10(c, cls.a_side);
    case FamilyTag::HPathNearSplit: return check_hpath_near_split(c, cls.a_side);
    case FamilyTag::Unknown: return false;
  }
  return false;
}

// --- first-principles kernels ---

bool kernel_independent_set(const GraphCollection& c, VertexSet a) {
  if (2 * popcount(a) <= c.n) return false;
  for (const Graph& g : c.graphs)
    if (!side_empty(g, a)) return false;
  return true;
}

bool kernel_cut_vertex(const GraphCollection& c, int u) {
  if (c.n < 3 || u < 0 || u >= c.n) return false;
  Graph uni = union_graph(c);
  return components(uni, full_set(c.n) & ~vbit(u)).size() >= 2;
}

bool kernel_parity_cycle(const GraphCollection& c, VertexSet a) {
  if (c.n % 2 != 0 || c.colors() != c.n || popcount(a) != c.n / 2) return false;
  int tc = 0, fc = 0;
  if (!hst_purity(c, a, &tc, &fc)) return false;
  if (fc > 0) return false;  // an empty color blocks trivially, not by parity
  return tc % 2 == 1;
}

bool kernel_parity_path(const GraphCollection& c, VertexSet a) {
  if (c.colors() != c.n - 1) return false;
  VertexSet b = full_set(c.n) & ~a;
  if (!a || !b) return false;
  for (const Graph& g : c.graphs)
    if (!no_cross(g, a, b)) return false;
  return true;
}

bool kernel_segment_count(const GraphCollection& c, VertexSet sparse, bool cycle) {
  int budget = sparse_side_budget(c, sparse, nullptr);
  if (budget < 0) return false;
  int s = popcount(sparse), o = c.n - s;
  return cycle ? s >= o + budget + 1 : s >= o + budget + 2;
}

bool kernel_no_r2m(const GraphCollection& c, VertexSet a) {
  if (c.n < 4 || c.n % 2 != 0 || c.colors() != c.n || popcount(a) != c.n / 2) return false;
  return !has_rainbow_two_matching(c, Partition::of(c.n, a));
}

}  // namespace

std::optional<ExtremalCertificate> certify_no_thc(const GraphCollection& c,
                                                  const ExtremalClass& cls) {
  if (cls.tag == FamilyTag::Unknown) throw std::domain_error("cannot certify Unknown");
  if (!check_witness(c, cls)) throw std::domain_error("class predicate fails on this collection");

  CertReason reason;
  bool ok = false;
  switch (cls.tag) {
    case FamilyTag::HalfSplit:
      reason = CertReason::IndependentSetTooLarge;
      ok = kernel_independent_set(c, cls.a_side);
      break;
    case FamilyTag::DominatingVertexTwoCliques:
      reason = CertReason::CutVertexArgument;
      ok = kernel_cut_vertex(c, cls.u);
      break;
    case FamilyTag::HstSpanningOddT:
      reason = CertReason::ParityOfCrossEdges;
      ok = kernel_parity_cycle(c, cls.a_side);
      break;
    case FamilyTag::NearSplitSparseB:
      reason = CertReason::SegmentCount;
      ok = kernel_segment_count(c, full_set(c.n) & ~cls.a_side, /*cycle=*/true);
      break;
    case FamilyTag::NoR2mTwoCliquesOneFree:
    case FamilyTag::NoR2mStarThroughU:
    case FamilyTag::NoR2mCrossPairFig1a:
    case FamilyTag::NoR2mSwapPairFig1b:
      reason = CertReason::NoTwoDisjointRainbowCrossEdges;
      ok = kernel_no_r2m(c, cls.a_side);
      break;
    case FamilyTag::HPathHn10:
      reason = CertReason::ParityOfCrossEdges;
      ok = kernel_parity_path(c, cls.a_side);
      break;
    case FamilyTag::HPathNearSplit:
      reason = CertReason::SegmentCount;
      ok = kernel_segment_count(c, cls.a_side, /*cycle=*/false);
      break;
    default:
      return std::nullopt;
  }
  if (!ok) return std::nullopt;
  return ExtremalCertificate{cls, reason};
}

namespace {

std::vector<VertexSet> dedup(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

ExtremalClass classify_cycle_families(const GraphCollection& c) {
  const int n = c.n;
  const Graph uni = union_graph(c);

  if (n % 2 == 1) {
    // (i)(a) half-split: side = color-universal independent set of size ceil(n/2).
    std::vector<VertexSet> cand;
    independent_sets(uni, (n + 1) / 2, 0, cand);
    for (VertexSet a : cand)
      if (check_half_split(c, a)) return {FamilyTag::HalfSplit, a};

    // (i)(b) dominating vertex over two cliques.
    for (int u = 0; u < n; ++u) {
      bool universal = true;
      for (const Graph& g : c.graphs)
        if (g.degree(u) != n - 1) universal = false;
      if (!universal) continue;
      auto comps = components(c.graph(0), full_set(n) & ~vbit(u));
      if (comps.size() != 2) continue;
      for (VertexSet a : {comps[0], comps[1]})
        if (check_dominating_vertex(c, u, a)) return {FamilyTag::DominatingVertexTwoCliques, a, u};
    }
    return {};
  }

  // (ii)(a) spanning H_{n-t}^t with t odd: any valid split keeps the first
  // nonempty color pure, so its components/bipartition guide the candidates.
  {
    const Graph* g0 = nullptr;
    for (const Graph& g : c.graphs)
      if (!g.empty()) {
        g0 = &g;
        break;
      }
    if (g0) {
      std::vector<VertexSet> cand = one_sided_candidates(*g0, n / 2);
      for (VertexSet a : bipartite_candidates(*g0, n / 2)) cand.push_back(a);
      for (VertexSet a : dedup(std::move(cand))) {
        int tc = 0, fc = 0;
        if (!hst_purity(c, a, &tc, &fc)) continue;
        int t = tc % 2 == 1 ? tc : (fc > 0 ? tc + 1 : -1);
        if (t >= 1 && check_hst_spanning(c, a, t)) {
          ExtremalClass cls{FamilyTag::HstSpanningOddT, a};
          cls.t = t;
          return cls;
        }
      }
    }
  }

  // (ii)(b) |A| = n/2 - 1 with a (near-)empty big side.
  {
    std::vector<VertexSet> bs;
    independent_sets(uni, n / 2 + 1, 0, bs);
    for (int skip = 0; skip < c.colors(); ++skip)
      independent_sets(union_graph_except(c, skip), n / 2 + 1, 0, bs);
    for (auto [u, v] : uni.edges()) {
      Graph relaxed = uni;
      relaxed.remove_edge(u, v);
      independent_sets(relaxed, n / 2 + 1, vbit(u) | vbit(v), bs);
    }
    for (VertexSet b : dedup(std::move(bs))) {
      VertexSet a = full_set(n) & ~b;
      if (check_near_split_sparse_b(c, a)) return {FamilyTag::NearSplitSparseB, a};
    }
  }

  // (ii)(c) no rainbow 2-matching across an equitable partition, in the
  // classification's bullet order.
  std::vector<VertexSet> pure_sides;  // sides of colors that are exactly 2K_{n/2}
  for (const Graph& g : c.graphs) {
    auto comps = components(g, full_set(n));
    if (comps.size() == 2 && popcount(comps[0]) == n / 2 &&
        exact_two_cliques(g, comps[0], comps[1]))
      pure_sides.push_back(std::min(comps[0], comps[1]));
  }
  pure_sides = dedup(std::move(pure_sides));

  for (VertexSet a : pure_sides)
    if (check_no_r2m_two_cliques(c, a)) return {FamilyTag::NoR2mTwoCliquesOneFree, a};

  for (int u = 0; u < n; ++u) {
    std::vector<Piece> pieces;
    for (VertexSet comp : components(uni, full_set(n) & ~vbit(u))) pieces.push_back({comp, 0});
    std::vector<VertexSet> sides;
    side_assignments(pieces, n / 2 - 1, sides);
    for (VertexSet rest : dedup(std::move(sides))) {
      VertexSet a = rest | vbit(u);
      if (check_no_r2m_star_u(c, a, u)) return {FamilyTag::NoR2mStarThroughU, a, u};
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      std::vector<Piece> pieces;
      for (VertexSet comp : components(uni, full_set(n) & ~vbit(u) & ~vbit(v)))
        pieces.push_back({comp, 0});
      std::vector<VertexSet> sides;
      side_assignments(pieces, n / 2 - 1, sides);
      for (VertexSet rest : dedup(std::move(sides))) {
        VertexSet a = rest | vbit(u);
        if (((a >> v) & 1)) continue;
        if (check_no_r2m_fig1a(c, a, u, v)) {
          ExtremalClass cls{FamilyTag::NoR2mCrossPairFig1a, a, u};
          cls.v = v;
          return cls;
        }
      }
    }
  }

  for (VertexSet a : pure_sides) {
    for (VertexSet side : {a, full_set(n) & ~a}) {
      // Recover the two swap colors and their endpoints.
      std::vector<std::vector<std::pair<int, int>>> crossing;
      for (const Graph& g : c.graphs) {
        auto ce = cross_edges(g, side);
        if (!ce.empty()) crossing.push_back(ce);
      }
      if (crossing.size() != 2 || crossing[0].size() != 2) continue;
      auto [x1, y1] = crossing[0][0];
      auto [x2, y2] = crossing[0][1];
      int u = ((side >> x1) & 1) ? x1 : y1;
      int v = ((side >> x1) & 1) ? y1 : x1;
      int u2 = ((side >> x2) & 1) ? x2 : y2;
      int v2 = ((side >> x2) & 1) ? y2 : x2;
      if (check_no_r2m_fig1b(c, side, u, u2, v, v2)) {
        ExtremalClass cls{FamilyTag::NoR2mSwapPairFig1b, side, u, u2};
        cls.v = v;
        cls.v2 = v2;
        return cls;
      }
    }
  }
  return {};
}

ExtremalClass classify_path_families(const GraphCollection& c) {
  const int n = c.n;
  const Graph uni = union_graph(c);

  for (VertexSet a : dedup(one_sided_candidates(uni, (n + 1) / 2)))
    if (check_hpath_hn10(c, a)) return {FamilyTag::HPathHn10, a};

  int want = n % 2 == 0 ? n / 2 + 1 : (n + 3) / 2;
  std::vector<VertexSet> as;
  independent_sets(uni, want, 0, as);
  if (n % 2 == 1) {
    for (int skip = 0; skip < c.colors(); ++skip)
      independent_sets(union_graph_except(c, skip), want, 0, as);
    for (auto [u, v] : uni.edges()) {
      Graph relaxed = uni;
      relaxed.remove_edge(u, v);
      independent_sets(relaxed, want, vbit(u) | vbit(v), as);
    }
  }
  for (VertexSet a : dedup(std::move(as)))
    if (check_hpath_near_split(c, a)) return {FamilyTag::HPathNearSplit, a};
  return {};
}

}  // namespace

ExtremalClass classify(const GraphCollection& c) {
  if (c.n >= 3 && c.colors() == c.n) return classify_cycle_families(c);
  if (c.n >= 2 && c.colors() == c.n - 1) return classify_path_families(c);
  return {};
}

std::vector<RainbowStar> extract_rainbow_stars(const GraphCollection& c, VertexSet y_side,
                                               VertexSet b_side, int t) {
  if (t == 0) return {};
  y_side &= full_set(c.n);
  b_side &= full_set(c.n);
  if (y_side & b_side) throw std::domain_error("Y and B must be disjoint");
  const int ny = popcount(y_side), nb = popcount(b_side), m = c.colors();
  if (t < 0 || t > ny) throw std::domain_error("need 0 <= t <= |Y|");
  if (7 * ny >= nb) throw std::domain_error("need 7|Y| < |B|");
  if (5 * nb > 3 * m) throw std::domain_error("need |B| <= (3/5)m");
  long long density = 0;
  for (const Graph& g : c.graphs) {
    VertexSet rest = y_side;
    while (rest) {
      int y = std::countr_zero(rest);
      rest &= rest - 1;
      density += popcount(g.neighbors(y) & b_side);
    }
  }
  if (density < static_cast<long long>(t) * nb * m)
    throw std::domain_error("edge density below t|B|m");

  auto rec = [&](auto&& self, VertexSet pool, int want) -> std::vector<RainbowStar> {
    if (want == 0) return {};
    // Center with spread: degree >= 4*want into B in at least 4*want colors.
    int center = -1;
    VertexSet rest = pool;
    while (rest && center < 0) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      int wide = 0;
      for (const Graph& g : c.graphs)
        if (popcount(g.neighbors(w) & b_side) >= 4 * want) ++wide;
      if (wide >= 4 * want) center = w;
    }
    if (center < 0) throw std::domain_error("no admissible star center");
    std::vector<RainbowStar> stars = self(self, pool & ~vbit(center), want - 1);

    std::uint64_t used_colors = 0;
    VertexSet used_leaves = 0;
    for (const RainbowStar& s : stars)
      for (int k = 0; k < 4; ++k) {
        used_colors |= std::uint64_t{1} << s.colors[k];
        used_leaves |= vbit(s.leaves[k]);
      }
    RainbowStar star;
    star.center = center;
    int filled = 0;
    for (int i = 0; i < m && filled < 4; ++i) {
      if ((used_colors >> i) & 1) continue;
      VertexSet opts = c.graph(i).neighbors(center) & b_side & ~used_leaves;
      if (popcount(c.graph(i).neighbors(center) & b_side) < 4 * want || !opts) continue;
      star.colors[static_cast<size_t>(filled)] = i;
      star.leaves[static_cast<size_t>(filled)] = std::countr_zero(opts);
      used_leaves |= vbit(std::countr_zero(opts));
      used_colors |= std::uint64_t{1} << i;
      ++filled;
    }
    if (filled < 4) throw std::domain_error("could not complete a star");
    stars.push_back(star);
    return stars;
  };
  return rec(rec, y_side, t);
}

GraphCollection single_graph_corollary_family(int n, CorollaryVariant variant) {
  Graph g(n);
  switch (variant) {
    case CorollaryVariant::OddConeTwoCliques: {
      if (n < 3 || n % 2 == 0) throw std::domain_error("variant needs odd n");
      FamilyParams p;
      return generate_thm3_family(FamilyTag::DominatingVertexTwoCliques, n, p);
    }
    case CorollaryVariant::OddSplitIndependent: {
      if (n < 3 || n % 2 == 0) throw std::domain_error("variant needs odd n");
      VertexSet a = full_set((n + 1) / 2);
      g = complete_bipartite(n, a);
      for (auto [x, y] : clique_on(n, full_set(n) & ~a).edges()) g.add_edge(x, y);
      return copies_of(g, n);
    }
    case CorollaryVariant::EvenConeTwoCliques: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("variant needs even n");
      VertexSet a = full_set(n / 2) & ~vbit(0);  // {1..n/2-1}
      VertexSet b = full_set(n) & ~full_set(n / 2);
      g = clique_on(n, a);
      for (auto [x, y] : clique_on(n, b).edges()) g.add_edge(x, y);
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      return copies_of(g, n);
    }
    case CorollaryVariant::EvenPairSplit: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("variant needs even n");
      VertexSet left = full_set(n / 2 + 1);
      g = complete_bipartite(n, left);
      for (auto [x, y] : clique_on(n, full_set(n) & ~left).edges()) g.add_edge(x, y);
      g.add_edge(0, 1);
      return copies_of(g, n);
    }
  }
  throw std::domain_error("bad corollary variant");
}

}  // namespace tgc
