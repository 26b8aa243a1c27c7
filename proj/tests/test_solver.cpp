#include "doctest.h"

#include <algorithm>
#include <atomic>

#include "tgc/families.hpp"
#include "tgc/harness.hpp"
#include "tgc/rng.hpp"
#include "tgc/solver.hpp"

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

Graph bowtie5() {  // K_1 v 2K_2 on {0..4}, cone at 0
  Graph g(5);
  for (int v = 1; v <= 4; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  return g;
}

GraphCollection permuted(const GraphCollection& c, const std::vector<int>& vperm,
                         const std::vector<int>& cperm) {
  GraphCollection out;
  out.n = c.n;
  for (int i = 0; i < c.colors(); ++i) {
    const Graph& src = c.graph(cperm[static_cast<size_t>(i)]);
    Graph g(c.n);
    for (auto [u, v] : src.edges())
      g.add_edge(vperm[static_cast<size_t>(u)], vperm[static_cast<size_t>(v)]);
    out.color_ids.push_back(i);
    out.graphs.push_back(g);
  }
  return out;
}

// Count (canonical cycle, bijection) pairs by full enumeration, independent of
// the subset DP inside the solver.
std::int64_t count_by_enumeration(const GraphCollection& c) {
  const int n = c.n;
  std::vector<int> rest;
  for (int v = 1; v < n; ++v) rest.push_back(v);
  std::int64_t total = 0;
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<int> cyc = {0};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    std::vector<int> colors(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = i;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (!c.graph(colors[static_cast<size_t>(i)]).has_edge(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % n)]))
          ok = false;
      if (ok) ++total;
    } while (std::next_permutation(colors.begin(), colors.end()));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

}  // namespace

TEST_CASE("complete graphs have a transversal Hamilton cycle") {
  GraphCollection c = copies_of(complete_graph(4), 4);
  auto w = find_transversal_hamilton_cycle(c);
  REQUIRE(w.has_value());
  CHECK(is_transversal_walk(*w, c));
  CHECK(find_assignment(w->host(4), c, AssignMode::Transversal).has_value());
}

TEST_CASE("half-split n=5 has no transversal Hamilton cycle") {
  CHECK_FALSE(find_transversal_hamilton_cycle(generate_half_split(5)).has_value());
}

TEST_CASE("H_5^1 at n=6 has no transversal Hamilton cycle") {
  CHECK_FALSE(find_transversal_hamilton_cycle(generate_h_s_t(6, 5, 1)).has_value());
}

TEST_CASE("hamilton path basics") {
  Graph k2(2);
  k2.add_edge(0, 1);
  auto w = find_transversal_hamilton_path(copies_of(k2, 1));
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<int>{0, 1});

  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(0, 3);
  GraphCollection three = copies_of(c4, 3);
  auto p = find_transversal_hamilton_path(three);
  REQUIRE(p.has_value());
  CHECK(is_transversal_walk(*p, three));
  CHECK(oracle_has_transversal_hamilton_path(three));

  CHECK_FALSE(find_transversal_hamilton_path(generate_thm3_family(FamilyTag::HPathHn10, 6),
                                             SolverLimits{})
                  .has_value());
}

TEST_CASE("path preconditions") {
  CHECK_THROWS_AS(find_transversal_hamilton_path(copies_of(complete_graph(4), 4)),
                  std::domain_error);
  CHECK_THROWS_AS(find_transversal_hamilton_cycle(copies_of(complete_graph(4), 3)),
                  std::domain_error);
  SolverLimits tight{3};
  CHECK_THROWS_AS(find_transversal_hamilton_cycle(copies_of(complete_graph(4), 4), tight),
                  std::domain_error);
}

TEST_CASE("longest rainbow cycle in the bowtie family") {
  // The exceptional family at the path threshold: no rainbow cycle of
  // length n-1 exists; the bowtie's longest cycle is a triangle.
  GraphCollection c = copies_of(bowtie5(), 5);
  auto w = find_longest_rainbow_cycle(c, 3);
  REQUIRE(w.has_value());
  CHECK(w->length() == 3);
  CHECK_FALSE(find_longest_rainbow_cycle(c, 4).has_value());
}

TEST_CASE("longest rainbow cycle edge cases") {
  CHECK_FALSE(find_longest_rainbow_cycle(copies_of(Graph(5), 5), 3).has_value());
  auto w = find_longest_rainbow_cycle(copies_of(complete_graph(4), 4), 3);
  REQUIRE(w.has_value());
  CHECK(w->length() == 4);
  CHECK_THROWS_AS(find_longest_rainbow_cycle(copies_of(complete_graph(4), 4), 2),
                  std::domain_error);
}

TEST_CASE("cycle counting") {
  CHECK(count_transversal_hamilton_cycles(copies_of(complete_graph(3), 3)) == 6);
  CHECK(count_transversal_hamilton_cycles(generate_half_split(5)) == 0);

  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(0, 3);
  GraphCollection four = copies_of(c4, 4);
  std::int64_t expect = count_by_enumeration(four);
  CHECK(expect == 24);  // one Hamilton cycle, every bijection valid
  CHECK(count_transversal_hamilton_cycles(four) == expect);

  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    GraphCollection c = random_collection(rng, 5, 5);
    CHECK(count_transversal_hamilton_cycles(c) == count_by_enumeration(c));
  }
}

TEST_CASE("solver matches the permutation oracle over the n=4 pool") {
  Rng rng(99);
  std::vector<Graph> pool;
  for (int i = 0; i < 50; ++i) {
    Graph g(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v)
        if (rng.coin()) g.add_edge(u, v);
    if (std::find(pool.begin(), pool.end(), g) == pool.end()) pool.push_back(g);
  }
  const int p = static_cast<int>(pool.size());

  std::atomic<int> path_mismatch{0};
  parallel_for(p * p * p, 0, [&](int idx) {
    GraphCollection c;
    c.n = 4;
    c.color_ids = {0, 1, 2};
    c.graphs = {pool[static_cast<size_t>(idx / (p * p))], pool[static_cast<size_t>((idx / p) % p)],
                pool[static_cast<size_t>(idx % p)]};
    if (find_transversal_hamilton_path(c).has_value() != oracle_has_transversal_hamilton_path(c))
      ++path_mismatch;
  });
  CHECK(path_mismatch.load() == 0);

  std::atomic<int> cycle_mismatch{0};
  parallel_for(p * p * p * p, 0, [&](int idx) {
    GraphCollection c;
    c.n = 4;
    c.color_ids = {0, 1, 2, 3};
    c.graphs = {pool[static_cast<size_t>(idx / (p * p * p))],
                pool[static_cast<size_t>((idx / (p * p)) % p)],
                pool[static_cast<size_t>((idx / p) % p)], pool[static_cast<size_t>(idx % p)]};
    if (find_transversal_hamilton_cycle(c).has_value() !=
        oracle_has_transversal_hamilton_cycle(c))
      ++cycle_mismatch;
  });
  CHECK(cycle_mismatch.load() == 0);
}

TEST_CASE("solver matches the permutation oracle on random n=5,6 instances") {
  std::atomic<int> mismatch{0};
  parallel_for(500, 0, [&](int i) {
    Rng rng(instance_seed(2024, i));
    int n = 5 + (i % 2);
    GraphCollection cyc = random_collection(rng, n, n);
    if (find_transversal_hamilton_cycle(cyc).has_value() !=
        oracle_has_transversal_hamilton_cycle(cyc))
      ++mismatch;
    GraphCollection pth = random_collection(rng, n, n - 1);
    if (find_transversal_hamilton_path(pth).has_value() !=
        oracle_has_transversal_hamilton_path(pth))
      ++mismatch;
  });
  CHECK(mismatch.load() == 0);
}

TEST_CASE("every returned walk re-validates") {
  Rng rng(31);
  for (int round = 0; round < 100; ++round) {
    int n = 4 + rng.below(3);
    GraphCollection c = random_collection(rng, n, n);
    if (auto w = find_transversal_hamilton_cycle(c)) {
      CHECK(is_transversal_walk(*w, c));
      CHECK(find_assignment(w->host(n), c, AssignMode::Transversal).has_value());
    }
  }
}

TEST_CASE("adding an edge never destroys a present verdict") {
  Rng rng(32);
  for (int round = 0; round < 60; ++round) {
    int n = 5;
    GraphCollection c = random_collection(rng, n, n);
    bool before = find_transversal_hamilton_cycle(c).has_value();
    int i = rng.below(n);
    int u = rng.below(n), v = (u + 1 + rng.below(n - 1)) % n;
    c.graphs[static_cast<size_t>(i)].add_edge(std::min(u, v), std::max(u, v));
    if (before) CHECK(find_transversal_hamilton_cycle(c).has_value());
  }
}

TEST_CASE("relabeling vertices and colors preserves the verdict") {
  Rng rng(33);
  for (int round = 0; round < 60; ++round) {
    int n = 5 + rng.below(2);
    GraphCollection c = random_collection(rng, n, n);
    std::vector<int> vperm(static_cast<size_t>(n)), cperm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vperm[static_cast<size_t>(i)] = cperm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(vperm[static_cast<size_t>(i)], vperm[static_cast<size_t>(rng.below(i + 1))]);
      std::swap(cperm[static_cast<size_t>(i)], cperm[static_cast<size_t>(rng.below(i + 1))]);
    }
    CHECK(find_transversal_hamilton_cycle(c).has_value() ==
          find_transversal_hamilton_cycle(permuted(c, vperm, cperm)).has_value());
  }
}
