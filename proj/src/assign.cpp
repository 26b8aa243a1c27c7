#include "tgc/assign.hpp"

#include <algorithm>

namespace tgc {

HostSubgraph path_host(int n, const std::vector<int>& vertices) {
  HostSubgraph h{n, {}};
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    h.edges.emplace_back(vertices[i], vertices[i + 1]);
  return h;
}

HostSubgraph cycle_host(int n, const std::vector<int>& vertices) {
  HostSubgraph h = path_host(n, vertices);
  if (vertices.size() >= 3) h.edges.emplace_back(vertices.back(), vertices.front());
  return h;
}

namespace {

void check_inputs(const HostSubgraph& h, const GraphCollection& c, AssignMode mode) {
  if (h.n != c.n) throw std::domain_error("host/collection dimension mismatch");
  for (auto [u, v] : h.edges)
    if (u < 0 || u >= h.n || v < 0 || v >= h.n || u == v)
      throw std::domain_error("bad host edge");
  if (mode == AssignMode::Transversal && h.edge_count() != c.colors())
    throw std::domain_error("transversal mode needs |E(H)| = m");
  if (mode == AssignMode::Rainbow && h.edge_count() > c.colors())
    throw std::domain_error("rainbow mode needs |E(H)| <= m");
}

std::vector<std::vector<int>> admissible_colors(const HostSubgraph& h, const GraphCollection& c) {
  std::vector<std::vector<int>> adm(h.edges.size());
  for (size_t e = 0; e < h.edges.size(); ++e)
    for (int i = 0; i < c.colors(); ++i)
      if (c.graph(i).has_edge(h.edges[e].first, h.edges[e].second)) adm[e].push_back(i);
  return adm;
}

struct Kuhn {
  const std::vector<std::vector<int>>& adm;
  std::vector<int> match_edge;   // color -> edge or -1
  std::vector<int> match_color;  // edge -> color or -1
  std::vector<int> stamp;
  int round = 0;

  Kuhn(const std::vector<std::vector<int>>& adm, int m)
      : adm(adm), match_edge(static_cast<size_t>(m), -1),
        match_color(adm.size(), -1), stamp(static_cast<size_t>(m), -1) {}

  bool augment(int e) {
    // Free colors first, then displacement: lowest admissible color wins.
    for (int col : adm[static_cast<size_t>(e)]) {
      if (stamp[static_cast<size_t>(col)] == round) continue;
      if (match_edge[static_cast<size_t>(col)] < 0) {
        stamp[static_cast<size_t>(col)] = round;
        match_edge[static_cast<size_t>(col)] = e;
        match_color[static_cast<size_t>(e)] = col;
        return true;
      }
    }
    for (int col : adm[static_cast<size_t>(e)]) {
      if (stamp[static_cast<size_t>(col)] == round) continue;
      stamp[static_cast<size_t>(col)] = round;
      if (augment(match_edge[static_cast<size_t>(col)])) {
        match_edge[static_cast<size_t>(col)] = e;
        match_color[static_cast<size_t>(e)] = col;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<ColorAssignment> find_assignment(const HostSubgraph& h, const GraphCollection& c,
                                               AssignMode mode) {
  check_inputs(h, c, mode);
  auto adm = admissible_colors(h, c);
  Kuhn k(adm, c.colors());
  for (int e = 0; e < h.edge_count(); ++e) {
    ++k.round;
    if (!k.augment(e)) return std::nullopt;
  }
  return ColorAssignment{mode, k.match_color};
}

std::optional<ColorAssignment> assignment_oracle(const HostSubgraph& h, const GraphCollection& c,
                                                 AssignMode mode) {
  check_inputs(h, c, mode);
  if (h.edge_count() > 9) throw std::domain_error("assignment_oracle bound is 9 edges");
  auto adm = admissible_colors(h, c);
  std::vector<int> chosen(h.edges.size(), -1);
  std::uint64_t used = 0;

  // Plain enumeration, edge by edge, colors ascending.
  auto rec = [&](auto&& self, size_t e) -> bool {
    if (e == h.edges.size()) return true;
    for (int col : adm[e]) {
      if (used & (std::uint64_t{1} << col)) continue;
      used |= std::uint64_t{1} << col;
      chosen[e] = col;
      if (self(self, e + 1)) return true;
      used &= ~(std::uint64_t{1} << col);
      chosen[e] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return ColorAssignment{mode, chosen};
}

bool validate_assignment(const HostSubgraph& h, const GraphCollection& c,
                         const ColorAssignment& a) {
  if (a.edge_color.size() != h.edges.size()) return false;
  std::uint64_t used = 0;
  for (size_t e = 0; e < h.edges.size(); ++e) {
    int col = a.edge_color[e];
    if (col < 0 || col >= c.colors()) return false;
    if (used & (std::uint64_t{1} << col)) return false;  // injectivity
    used |= std::uint64_t{1} << col;
    if (!c.graph(col).has_edge(h.edges[e].first, h.edges[e].second)) return false;
  }
  if (a.mode == AssignMode::Transversal) {
    if (h.edge_count() != c.colors()) return false;
    if (popcount(used) != c.colors()) return false;  // every color used once
  }
  return true;
}

}  // namespace tgc
