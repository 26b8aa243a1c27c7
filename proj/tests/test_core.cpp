#include "doctest.h"

#include "tgc/core.hpp"
#include "tgc/families.hpp"
#include "tgc/rng.hpp"

using namespace tgc;

namespace {

GraphCollection random_collection(Rng& rng, int n, int m) {
  GraphCollection c;
  c.n = n;
  for (int i = 0; i < m; ++i) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.coin()) g.add_edge(u, v);
    c.color_ids.push_back(i);
    c.graphs.push_back(g);
  }
  return c;
}

}  // namespace

TEST_CASE("min_degree basics") {
  GraphCollection empties = copies_of(Graph(4), 3);
  CHECK(min_degree(empties) == 0);

  CHECK(min_degree(generate_h_s_t(6, 0, 6)) == 3);  // six K_{3,3}
  CHECK(min_degree(generate_h_s_t(6, 6, 0)) == 2);  // six 2K_3

  GraphCollection none;
  none.n = 4;
  CHECK_THROWS_AS(min_degree(none), std::domain_error);
}

TEST_CASE("min_degree equals the brute-force double loop") {
  Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + rng.below(7);
    GraphCollection c = random_collection(rng, n, 1 + rng.below(5));
    int brute = n;
    for (int i = 0; i < c.colors(); ++i)
      for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int w = 0; w < n; ++w)
          if (c.graph(i).has_edge(v, w)) ++d;
        brute = std::min(brute, d);
      }
    CHECK(min_degree(c) == brute);
  }
}

TEST_CASE("adjacency stays symmetric and loop-free") {
  Rng rng(12);
  GraphCollection c = random_collection(rng, 9, 4);
  for (const Graph& g : c.graphs)
    for (int u = 0; u < c.n; ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      for (int v = 0; v < c.n; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
  CHECK_THROWS_AS(Graph(3).add_edge(1, 1), std::domain_error);
}

TEST_CASE("parse_tgc happy path") {
  GraphCollection c = parse_tgc("tgc 1\nn 2\nm 1\nc 0\n0 1\n");
  CHECK(c.n == 2);
  CHECK(c.colors() == 1);
  CHECK(c.graph(0).has_edge(0, 1));

  // comments, blank lines, duplicate edges, reversed endpoints
  GraphCollection d = parse_tgc("# header\ntgc 1\nn 3\nm 2\n\nc 0\n1 0\n0 1 # dup\nc 1\n");
  CHECK(d.graph(0).edge_count() == 1);
  CHECK(d.graph(1).edge_count() == 0);
}

TEST_CASE("parse_tgc error paths carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_tgc(text);
    } catch (const TgcParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("tgc 2\n") == 1);
  CHECK(line_of("tgc 1\nn 3\nm 1\nc 0\n0 3\n") == 5);   // vertex out of range
  CHECK(line_of("tgc 1\nn 3\nm 1\nc 0\n1 1\n") == 5);   // loop
  CHECK(line_of("tgc 1\nn 3\nm 2\nc 0\nc 0\n") == 5);   // duplicate color block
  CHECK(line_of("tgc 1\nn 3\nm 2\nc 0\n") == 4);        // missing block
  CHECK(line_of("tgc 1\nn 3\nm 1\n0 1\n") == 4);        // edge before block
}

TEST_CASE("serialize_tgc canonical output") {
  GraphCollection empty;
  empty.n = 3;
  CHECK(serialize_tgc(empty) == "tgc 1\nn 3\nm 0\n");

  Graph tri(3);
  tri.add_edge(2, 1);
  tri.add_edge(1, 0);
  tri.add_edge(0, 2);
  CHECK(serialize_tgc(copies_of(tri, 1)) == "tgc 1\nn 3\nm 1\nc 0\n0 1\n0 2\n1 2\n");
}

TEST_CASE("round trip is the identity on canonical text") {
  Rng rng(13);
  for (int round = 0; round < 1000; ++round) {
    int n = rng.below(9);
    GraphCollection c = random_collection(rng, n, rng.below(6));
    std::string text = serialize_tgc(c);
    GraphCollection back = parse_tgc(text);
    CHECK(back == c);
    CHECK(serialize_tgc(back) == text);  // idempotent
  }
}

TEST_CASE("blocks are canonicalized by color id") {
  GraphCollection c = parse_tgc("tgc 1\nn 2\nm 2\nc 5\n0 1\nc 2\n");
  CHECK(c.color_ids == std::vector<int>{5, 2});
  std::string text = serialize_tgc(c);
  CHECK(text == "tgc 1\nn 2\nm 2\nc 2\nc 5\n0 1\n");
  CHECK(serialize_tgc(parse_tgc(text)) == text);
}

TEST_CASE("partition helpers") {
  Partition p = Partition::of(5, vbit(0) | vbit(2) | vbit(4));
  CHECK(p.covers(5));
  CHECK(p.equitable());
  CHECK_FALSE(Partition::of(5, vbit(1)).equitable());
}
