#include "doctest.h"

#include "tgc/construct.hpp"
#include "tgc/families.hpp"
#include "tgc/harness.hpp"
#include "tgc/rng.hpp"
#include "tgc/solver.hpp"

using namespace tgc;

namespace {

const std::vector<FamilyTag> kEvenCycleTags = {
    FamilyTag::HstSpanningOddT, FamilyTag::NearSplitSparseB, FamilyTag::NoR2mTwoCliquesOneFree,
    FamilyTag::NoR2mStarThroughU, FamilyTag::NoR2mCrossPairFig1a, FamilyTag::NoR2mSwapPairFig1b};

bool is_path_tag(FamilyTag tag) {
  return tag == FamilyTag::HPathHn10 || tag == FamilyTag::HPathNearSplit;
}

}  // namespace

TEST_CASE("generate_h_s_t shapes") {
  GraphCollection c = generate_h_s_t(6, 6, 0);
  CHECK(c.colors() == 6);
  for (const Graph& g : c.graphs) CHECK(g.edge_count() == 6);  // two K_3

  CHECK_FALSE(find_transversal_hamilton_cycle(generate_h_s_t(6, 5, 1)).has_value());
  CHECK(find_transversal_hamilton_cycle(generate_h_s_t(6, 4, 2)).has_value());
  CHECK_THROWS_AS(generate_h_s_t(6, 4, 1), std::domain_error);
}

TEST_CASE("generate_half_split shapes and fills") {
  GraphCollection c = generate_half_split(5);
  CHECK(min_degree(c) == 2);  // ceil(n/2 - 1)
  CHECK_FALSE(find_transversal_hamilton_cycle(c).has_value());

  GraphCollection empty_b = generate_half_split(5, Fill::Empty);
  CHECK_FALSE(find_transversal_hamilton_cycle(empty_b).has_value());

  GraphCollection random_b = generate_half_split(7, Fill::Random, 99);
  CHECK(classify(random_b).tag == FamilyTag::HalfSplit);

  CHECK_THROWS_AS(generate_half_split(4), std::domain_error);
}

TEST_CASE("theorem-3 generators are non-Hamiltonian and hit the degree bound") {
  for (int n : {6, 8}) {
    for (FamilyTag tag : kEvenCycleTags) {
      GraphCollection c = generate_thm3_family(tag, n);
      CAPTURE(family_tag_name(tag));
      CAPTURE(n);
      CHECK(min_degree(c) >= (n - 1) / 2);
      CHECK_FALSE(find_transversal_hamilton_cycle(c).has_value());
    }
  }
  for (int n : {5, 7}) {
    for (FamilyTag tag : {FamilyTag::HalfSplit, FamilyTag::DominatingVertexTwoCliques}) {
      GraphCollection c = generate_thm3_family(tag, n);
      CHECK(min_degree(c) >= (n - 1) / 2);
      CHECK_FALSE(find_transversal_hamilton_cycle(c).has_value());
    }
  }
  for (int n : {6, 7}) {
    for (FamilyTag tag : {FamilyTag::HPathHn10, FamilyTag::HPathNearSplit}) {
      GraphCollection c = generate_thm3_family(tag, n);
      CHECK(min_degree(c) >= (n - 3 + 1) / 2);
      CHECK_FALSE(find_transversal_hamilton_path(c).has_value());
    }
  }
  CHECK_THROWS_AS(generate_thm3_family(FamilyTag::HalfSplit, 6), std::domain_error);
  CHECK_THROWS_AS(generate_thm3_family(FamilyTag::NearSplitSparseB, 7), std::domain_error);
}

TEST_CASE("has_rainbow_two_matching") {
  // All cross edges through one vertex: any two cross edges intersect.
  GraphCollection star = generate_thm3_family(FamilyTag::NoR2mStarThroughU, 6);
  Partition p = Partition::of(6, full_set(3));
  CHECK_FALSE(has_rainbow_two_matching(star, p));

  GraphCollection fig1b = generate_thm3_family(FamilyTag::NoR2mSwapPairFig1b, 6);
  CHECK_FALSE(has_rainbow_two_matching(fig1b, p));
  // Brute confirmation: every disjoint cross pair is monochromatic.
  for (int i = 0; i < fig1b.colors(); ++i)
    for (int j = 0; j < fig1b.colors(); ++j) {
      if (i == j) continue;
      for (auto [u1, v1] : fig1b.graph(i).edges())
        for (auto [u2, v2] : fig1b.graph(j).edges()) {
          bool cross1 = ((p.a_side >> u1) & 1) != ((p.a_side >> v1) & 1);
          bool cross2 = ((p.a_side >> u2) & 1) != ((p.a_side >> v2) & 1);
          bool disjoint = u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2;
          CHECK_FALSE((cross1 && cross2 && disjoint));
        }
    }

  GraphCollection two = generate_h_s_t(6, 4, 2);
  CHECK(has_rainbow_two_matching(two, p));
}

TEST_CASE("certificates verify and imply solver absence") {
  struct Case {
    FamilyTag tag;
    int n;
    CertReason reason;
  };
  std::vector<Case> cases = {
      {FamilyTag::HalfSplit, 5, CertReason::IndependentSetTooLarge},
      {FamilyTag::HalfSplit, 7, CertReason::IndependentSetTooLarge},
      {FamilyTag::DominatingVertexTwoCliques, 5, CertReason::CutVertexArgument},
      {FamilyTag::DominatingVertexTwoCliques, 7, CertReason::CutVertexArgument},
      {FamilyTag::HstSpanningOddT, 6, CertReason::ParityOfCrossEdges},
      {FamilyTag::HstSpanningOddT, 8, CertReason::ParityOfCrossEdges},
      {FamilyTag::NearSplitSparseB, 6, CertReason::SegmentCount},
      {FamilyTag::NearSplitSparseB, 8, CertReason::SegmentCount},
      {FamilyTag::NoR2mTwoCliquesOneFree, 6, CertReason::NoTwoDisjointRainbowCrossEdges},
      {FamilyTag::NoR2mStarThroughU, 6, CertReason::NoTwoDisjointRainbowCrossEdges},
      {FamilyTag::NoR2mCrossPairFig1a, 8, CertReason::NoTwoDisjointRainbowCrossEdges},
      {FamilyTag::NoR2mSwapPairFig1b, 8, CertReason::NoTwoDisjointRainbowCrossEdges},
      {FamilyTag::HPathHn10, 6, CertReason::ParityOfCrossEdges},
      {FamilyTag::HPathNearSplit, 7, CertReason::SegmentCount},
  };
  for (const Case& k : cases) {
    CAPTURE(family_tag_name(k.tag));
    CAPTURE(k.n);
    GraphCollection c = generate_thm3_family(k.tag, k.n);
    ExtremalClass cls = classify(c);
    REQUIRE(cls.tag == k.tag);
    auto cert = certify_no_thc(c, cls);
    REQUIRE(cert.has_value());
    CHECK(cert->reason == k.reason);
    if (is_path_tag(k.tag)) CHECK_FALSE(find_transversal_hamilton_path(c).has_value());
    else CHECK_FALSE(find_transversal_hamilton_cycle(c).has_value());
  }
}

TEST_CASE("certify refuses a wrong witness") {
  GraphCollection c = copies_of(complete_graph(6), 6);
  ExtremalClass bogus{FamilyTag::HalfSplit, full_set(3)};
  CHECK_THROWS_AS(certify_no_thc(c, bogus), std::domain_error);
  ExtremalClass unknown;
  CHECK_THROWS_AS(certify_no_thc(c, unknown), std::domain_error);
}

TEST_CASE("classifier round trips") {
  for (int n : {5, 7, 9}) {
    CHECK(classify(generate_thm3_family(FamilyTag::HalfSplit, n)).tag == FamilyTag::HalfSplit);
    CHECK(classify(generate_thm3_family(FamilyTag::DominatingVertexTwoCliques, n)).tag ==
          FamilyTag::DominatingVertexTwoCliques);
  }
  for (int n : {6, 8, 10}) {
    for (FamilyTag tag : kEvenCycleTags) {
      CAPTURE(family_tag_name(tag));
      CAPTURE(n);
      CHECK(classify(generate_thm3_family(tag, n)).tag == tag);
    }
  }
  for (int n : {6, 7, 8, 9}) {
    CHECK(classify(generate_thm3_family(FamilyTag::HPathHn10, n)).tag == FamilyTag::HPathHn10);
    CHECK(classify(generate_thm3_family(FamilyTag::HPathNearSplit, n)).tag ==
          FamilyTag::HPathNearSplit);
  }
  ExtremalClass hst = classify(generate_h_s_t(8, 5, 3));
  CHECK(hst.tag == FamilyTag::HstSpanningOddT);
  CHECK(hst.t == 3);
  CHECK(classify(copies_of(complete_graph(8), 8)).tag == FamilyTag::Unknown);
}

TEST_CASE("near-miss collections classify as Unknown") {
  // One missing cross edge breaks the half-split predicate.
  GraphCollection hs = generate_half_split(7);
  hs.graphs[3].remove_edge(0, 4);
  CHECK(classify(hs).tag == FamilyTag::Unknown);

  // One edge between the two cliques breaks the dominating-vertex shape.
  GraphCollection dom = generate_thm3_family(FamilyTag::DominatingVertexTwoCliques, 7);
  dom.graphs[0].add_edge(1, 4);
  CHECK(classify(dom).tag == FamilyTag::Unknown);

  // A within-side edge in a bipartite color kills purity, and the remaining
  // cross structure admits a rainbow 2-matching.
  FamilyParams p;
  p.t = 3;
  GraphCollection hst = generate_thm3_family(FamilyTag::HstSpanningOddT, 8, p);
  hst.graphs[7].add_edge(0, 1);
  CHECK(classify(hst).tag == FamilyTag::Unknown);
}

TEST_CASE("classifier survives vertex and color relabeling") {
  Rng rng(606);
  for (FamilyTag tag : {FamilyTag::HalfSplit, FamilyTag::HstSpanningOddT,
                        FamilyTag::NearSplitSparseB, FamilyTag::NoR2mSwapPairFig1b}) {
    int n = tag == FamilyTag::HalfSplit ? 7 : 8;
    GraphCollection c = generate_thm3_family(tag, n);
    std::vector<int> vperm(static_cast<size_t>(n)), cperm(static_cast<size_t>(c.colors()));
    for (size_t i = 0; i < vperm.size(); ++i) vperm[i] = static_cast<int>(i);
    for (size_t i = 0; i < cperm.size(); ++i) cperm[i] = static_cast<int>(i);
    for (int i = n - 1; i > 0; --i)
      std::swap(vperm[static_cast<size_t>(i)], vperm[static_cast<size_t>(rng.below(i + 1))]);
    for (int i = c.colors() - 1; i > 0; --i)
      std::swap(cperm[static_cast<size_t>(i)], cperm[static_cast<size_t>(rng.below(i + 1))]);
    GraphCollection shuffled;
    shuffled.n = n;
    for (int i = 0; i < c.colors(); ++i) {
      Graph g(n);
      for (auto [u, v] : c.graph(cperm[static_cast<size_t>(i)]).edges())
        g.add_edge(vperm[static_cast<size_t>(u)], vperm[static_cast<size_t>(v)]);
      shuffled.color_ids.push_back(i);
      shuffled.graphs.push_back(g);
    }
    CAPTURE(family_tag_name(tag));
    CHECK(classify(shuffled).tag == tag);
  }
}

TEST_CASE("parity exactness over H_{n-t}^t") {
  for (int n : {4, 6, 8}) {
    for (int t = 1; t <= n; ++t) {
      GraphCollection c = generate_h_s_t(n, n - t, t);
      bool absent = !find_transversal_hamilton_cycle(c).has_value();
      CAPTURE(n);
      CAPTURE(t);
      CHECK(absent == (t % 2 == 1));
      ExtremalClass cls = classify(c);
      bool parity_cert = false;
      if (cls.tag == FamilyTag::HstSpanningOddT) {
        auto cert = certify_no_thc(c, cls);
        parity_cert = cert && cert->reason == CertReason::ParityOfCrossEdges;
      }
      CHECK(parity_cert == (t % 2 == 1));
    }
    // t = 0 is blocked by disconnection, not parity. At n = 4 the collection
    // degenerately matches the earlier-listed near-split family (a one-vertex
    // side next to a clique pair); from n = 6 it lands on all-two-cliques.
    GraphCollection c0 = generate_h_s_t(n, n, 0);
    CHECK_FALSE(find_transversal_hamilton_cycle(c0).has_value());
    ExtremalClass cls0 = classify(c0);
    if (n == 4) {
      CHECK(cls0.tag == FamilyTag::NearSplitSparseB);
    } else {
      CHECK(cls0.tag == FamilyTag::NoR2mTwoCliquesOneFree);
    }
    auto cert0 = certify_no_thc(c0, cls0);
    REQUIRE(cert0.has_value());
  }
}

TEST_CASE("rainbow star extraction") {
  // Dense single-center instance: any 4 colors and 4 leaves work.
  {
    int n = 9;  // Y = {0}, B = {1..8}
    VertexSet y = vbit(0), b = full_set(9) & ~vbit(0);
    Graph g(n);
    for (int w = 1; w < n; ++w) g.add_edge(0, w);
    GraphCollection c = copies_of(g, 14);
    auto stars = extract_rainbow_stars(c, y, b, 1);
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].center == 0);
    CHECK(extract_rainbow_stars(c, y, b, 0).empty());
  }
  // Hypothesis failures refuse.
  {
    GraphCollection c = copies_of(Graph(9), 14);
    CHECK_THROWS_AS(extract_rainbow_stars(c, vbit(0), full_set(9) & ~vbit(0), 1),
                    std::domain_error);
    CHECK_THROWS_AS(extract_rainbow_stars(c, full_set(2), full_set(9) & ~full_set(2), 1),
                    std::domain_error);  // 7|Y| >= |B|
  }
}

TEST_CASE("rainbow star extraction on random admissible instances") {
  for (int t = 1; t <= 3; ++t) {
    for (int round = 0; round < 20; ++round) {
      int ny = t + 2, nb = 7 * ny + 1;
      int m = (5 * nb + 2) / 3;
      int n = ny + nb;
      REQUIRE(n <= kMaxVertices);
      Rng rng(instance_seed(8100 + t, round));
      VertexSet y = full_set(ny), b = full_set(n) & ~y;
      GraphCollection c;
      c.n = n;
      long long density = 0;
      for (int i = 0; i < m; ++i) {
        Graph g(n);
        for (int yy = 0; yy < ny; ++yy)
          for (int bb = ny; bb < n; ++bb)
            if (rng.below(8) != 0) {  // p = 7/8
              g.add_edge(yy, bb);
              ++density;
            }
        c.color_ids.push_back(i);
        c.graphs.push_back(g);
      }
      // Repair to the density hypothesis if the sample fell short.
      for (int i = 0; density < static_cast<long long>(t) * nb * m && i < m; ++i)
        for (int yy = 0; yy < ny && density < static_cast<long long>(t) * nb * m; ++yy)
          for (int bb = ny; bb < n; ++bb)
            if (!c.graphs[static_cast<size_t>(i)].has_edge(yy, bb)) {
              c.graphs[static_cast<size_t>(i)].add_edge(yy, bb);
              ++density;
            }
      auto stars = extract_rainbow_stars(c, y, b, t);
      REQUIRE(static_cast<int>(stars.size()) == t);
      VertexSet used_vertices = 0;
      std::uint64_t used_colors = 0;
      for (const RainbowStar& s : stars) {
        CHECK(((y >> s.center) & 1) == 1);
        CHECK(((used_vertices >> s.center) & 1) == 0);
        used_vertices |= vbit(s.center);
        for (int k = 0; k < 4; ++k) {
          CHECK(((b >> s.leaves[static_cast<size_t>(k)]) & 1) == 1);
          CHECK(((used_vertices >> s.leaves[static_cast<size_t>(k)]) & 1) == 0);
          used_vertices |= vbit(s.leaves[static_cast<size_t>(k)]);
          CHECK(((used_colors >> s.colors[static_cast<size_t>(k)]) & 1) == 0);
          used_colors |= std::uint64_t{1} << s.colors[static_cast<size_t>(k)];
          CHECK(c.graph(s.colors[static_cast<size_t>(k)])
                    .has_edge(s.center, s.leaves[static_cast<size_t>(k)]));
        }
      }
    }
  }
}

TEST_CASE("single-graph corollary families") {
  for (auto [n, variant] : std::vector<std::pair<int, CorollaryVariant>>{
           {7, CorollaryVariant::OddConeTwoCliques},
           {7, CorollaryVariant::OddSplitIndependent},
           {8, CorollaryVariant::EvenConeTwoCliques},
           {8, CorollaryVariant::EvenPairSplit}}) {
    GraphCollection c = single_graph_corollary_family(n, variant);
    CAPTURE(n);
    CHECK(c.colors() == n);
    CHECK(min_degree(c) >= (n - 1) / 2);
    CHECK_FALSE(find_transversal_hamilton_cycle(c).has_value());
  }
  CHECK_THROWS_AS(single_graph_corollary_family(8, CorollaryVariant::OddConeTwoCliques),
                  std::domain_error);
  CHECK_THROWS_AS(single_graph_corollary_family(7, CorollaryVariant::EvenPairSplit),
                  std::domain_error);
}
