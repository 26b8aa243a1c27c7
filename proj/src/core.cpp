#include "tgc/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace tgc {

int popcount(VertexSet s) { return std::popcount(s); }

int Graph::degree(int v) const { return std::popcount(rows_[static_cast<size_t>(v)]); }

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet rest = rows_[static_cast<size_t>(u)] & ~(full_set(u + 1));
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complete_graph(int n) { return clique_on(n, full_set(n)); }

Graph clique_on(int n, VertexSet inside) {
  Graph g(n);
  inside &= full_set(n);
  VertexSet rest = inside;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    VertexSet others = rest;
    while (others) {
      int v = std::countr_zero(others);
      others &= others - 1;
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph complete_bipartite(int n, VertexSet a_side) {
  Graph g(n);
  a_side &= full_set(n);
  VertexSet b_side = full_set(n) & ~a_side;
  VertexSet rest = a_side;
  while (rest) {
    int u = std::countr_zero(rest);
    rest &= rest - 1;
    VertexSet others = b_side;
    while (others) {
      int v = std::countr_zero(others);
      others &= others - 1;
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph two_cliques(int n, VertexSet a_side) {
  Graph g = clique_on(n, a_side);
  Graph h = clique_on(n, full_set(n) & ~a_side);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  return g;
}

GraphCollection copies_of(const Graph& g, int m) {
  GraphCollection c;
  c.n = g.n();
  for (int i = 0; i < m; ++i) {
    c.color_ids.push_back(i);
    c.graphs.push_back(g);
  }
  return c;
}

void validate_collection(const GraphCollection& c) {
  if (c.n < 0 || c.n > kMaxVertices) throw std::domain_error("vertex count out of range");
  if (c.color_ids.size() != c.graphs.size()) throw std::domain_error("color/graph count mismatch");
  std::vector<int> ids = c.color_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::domain_error("duplicate color identifiers");
  for (const Graph& g : c.graphs)
    if (g.n() != c.n) throw std::domain_error("member graph has wrong vertex count");
}

bool Partition::equitable() const {
  int a = std::popcount(a_side), b = std::popcount(b_side);
  return a - b <= 1 && b - a <= 1;
}

int min_degree(const GraphCollection& c) {
  if (c.colors() == 0) throw std::domain_error("min_degree of empty collection");
  int d = c.n;
  for (const Graph& g : c.graphs)
    for (int v = 0; v < c.n; ++v) d = std::min(d, g.degree(v));
  return d;
}

Graph union_graph(const GraphCollection& c) { return union_graph_except(c, -1); }

Graph union_graph_except(const GraphCollection& c, int skip) {
  Graph u(c.n);
  for (int i = 0; i < c.colors(); ++i) {
    if (i == skip) continue;
    for (auto [x, y] : c.graph(i).edges()) u.add_edge(x, y);
  }
  return u;
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 0;

  // Next non-empty line after comment stripping; empty view at EOF.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view raw = text.substr(pos, eol - pos);
      pos = eol + (eol < text.size() ? 1 : 0);
      ++line;
      size_t hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
      size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
        size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
        if (j > i) tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }
};

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    throw TgcParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace

GraphCollection parse_tgc(std::string_view text) {
  Cursor cur{text};
  std::vector<std::string_view> tok;

  if (!cur.next(tok) || tok.size() != 2 || tok[0] != "tgc" || tok[1] != "1")
    throw TgcParseError(cur.line, "expected header 'tgc 1'");
  if (!cur.next(tok) || tok.size() != 2 || tok[0] != "n")
    throw TgcParseError(cur.line, "expected 'n <N>'");
  int n = parse_int(tok[1], cur.line, "vertex count");
  if (n > kMaxVertices) throw TgcParseError(cur.line, "vertex count exceeds 64");
  if (!cur.next(tok) || tok.size() != 2 || tok[0] != "m")
    throw TgcParseError(cur.line, "expected 'm <M>'");
  int m = parse_int(tok[1], cur.line, "color count");

  GraphCollection c;
  c.n = n;
  bool in_block = false;
  while (cur.next(tok)) {
    if (tok[0] == "c") {
      if (tok.size() != 2) throw TgcParseError(cur.line, "expected 'c <color>'");
      int id = parse_int(tok[1], cur.line, "color");
      for (int seen : c.color_ids)
        if (seen == id) throw TgcParseError(cur.line, "duplicate color block " + std::to_string(id));
      if (c.colors() == m) throw TgcParseError(cur.line, "more color blocks than declared");
      c.color_ids.push_back(id);
      c.graphs.emplace_back(n);
      in_block = true;
    } else {
      if (!in_block) throw TgcParseError(cur.line, "edge before first color block");
      if (tok.size() != 2) throw TgcParseError(cur.line, "expected '<u> <v>'");
      int u = parse_int(tok[0], cur.line, "vertex");
      int v = parse_int(tok[1], cur.line, "vertex");
      if (u >= n || v >= n) throw TgcParseError(cur.line, "vertex out of range");
      if (u == v) throw TgcParseError(cur.line, "loop edge");
      c.graphs.back().add_edge(std::min(u, v), std::max(u, v));
    }
  }
  if (c.colors() != m)
    throw TgcParseError(cur.line, "declared " + std::to_string(m) + " colors, found " +
                                      std::to_string(c.colors()));
  return c;
}

std::string serialize_tgc(const GraphCollection& c) {
  validate_collection(c);
  std::vector<int> order(c.graphs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return c.color_ids[static_cast<size_t>(a)] < c.color_ids[static_cast<size_t>(b)]; });

  std::ostringstream out;
  out << "tgc 1\n";
  out << "n " << c.n << "\n";
  out << "m " << c.colors() << "\n";
  for (int i : order) {
    out << "c " << c.color_ids[static_cast<size_t>(i)] << "\n";
    for (auto [u, v] : c.graph(i).edges()) out << u << " " << v << "\n";
  }
  return out.str();
}

}  // namespace tgc
