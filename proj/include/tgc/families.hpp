#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tgc/core.hpp"

// Extremal families: generators for every collection in the Hamilton-cycle
// and Hamilton-path classifications, a structure-guided classifier, and
// machine-checkable non-Hamiltonicity certificates whose reasons are
// re-verified from first principles.

namespace tgc {

enum class FamilyTag {
  Unknown,
  HalfSplit,                  // odd n: independent side of size ceil(n/2), complete cross
  DominatingVertexTwoCliques, // odd n: universal vertex over two cliques
  HstSpanningOddT,            // even n: spanning collection of H_{n-t}^t, t odd
  NearSplitSparseB,           // even n: |A| = n/2-1, big side (near-)empty in all colors
  NoR2mTwoCliquesOneFree,     // even n, no rainbow 2-matching across an equitable split:
  NoR2mStarThroughU,          //   the four cross-structure shapes
  NoR2mCrossPairFig1a,
  NoR2mSwapPairFig1b,
  HPathHn10,                  // m = n-1: spanning collection of H_{n-1}^0
  HPathNearSplit,             // m = n-1: oversized (near-)independent side
};

const char* family_tag_name(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_name(std::string_view name);

struct ExtremalClass {
  FamilyTag tag = FamilyTag::Unknown;
  VertexSet a_side = 0;       // the distinguished side (meaning depends on tag)
  int u = -1, u2 = -1;        // distinguished vertices, when the tag has them
  int v = -1, v2 = -1;
  int exceptional_color = -1; // color exempt from the structural constraint
  int t = -1;                 // bipartite-type color count for HstSpanningOddT
};

enum class CertReason {
  IndependentSetTooLarge,
  CutVertexArgument,
  ParityOfCrossEdges,
  SegmentCount,
  NoTwoDisjointRainbowCrossEdges,
};

const char* cert_reason_name(CertReason r);

struct ExtremalCertificate {
  ExtremalClass cls;
  CertReason reason = CertReason::IndependentSetTooLarge;
};

enum class Fill { Empty, Complete, Random };

struct FamilyParams {
  Fill fill = Fill::Complete;  // policy for the parts the theorem leaves free
  std::uint64_t seed = 0;      // used by Fill::Random
  int t = -1;                  // HstSpanningOddT
  int exceptional_color = -1;  // -1 = none (tags with an exempt color)
  int u = -1, u2 = -1, v = -1, v2 = -1;  // -1 = canonical defaults
};

// s copies of K_ceil(n/2) u K_floor(n/2) followed by t copies of
// K_{ceil(n/2),floor(n/2)} on A = {0..ceil(n/2)-1}; s + t = n >= 2.
GraphCollection generate_h_s_t(int n, int s, int t);

// Odd n >= 3: G[A] empty in every color, complete cross, G[B] per fill.
GraphCollection generate_half_split(int n, Fill fill = Fill::Complete, std::uint64_t seed = 0);

GraphCollection generate_thm3_family(FamilyTag tag, int n, const FamilyParams& params = {});

// Two vertex-disjoint cross edges realizable in two distinct colors.
bool has_rainbow_two_matching(const GraphCollection& c, const Partition& p);

// Verifies the class predicate (domain error if it fails), then re-verifies
// the matching first-principles reason for non-Hamiltonicity.
std::optional<ExtremalCertificate> certify_no_thc(const GraphCollection& c,
                                                  const ExtremalClass& cls);

// Tests each family predicate in the classification's listed order over
// structure-guided partition candidates; Unknown when nothing verifies.
ExtremalClass classify(const GraphCollection& c);

struct RainbowStar {
  int center = -1;
  std::array<int, 4> leaves{};
  std::array<int, 4> colors{};
};

// t vertex- and color-disjoint rainbow stars S_5 with centers in y_side and
// leaves in b_side, built by induction on the center of largest color spread.
// Needs 7|Y| < |B| <= (3/5)m and sum_i |E(G_i[Y,B])| >= t |B| m; t <= |Y|.
std::vector<RainbowStar> extract_rainbow_stars(const GraphCollection& c, VertexSet y_side,
                                               VertexSet b_side, int t);

enum class CorollaryVariant {
  OddConeTwoCliques,    // K_1 v (K_{(n-1)/2} u K_{(n-1)/2}), n odd
  OddSplitIndependent,  // ((n+1)/2)K_1 v K_{(n-1)/2}, n odd
  EvenConeTwoCliques,   // K_1 v (K_{n/2-1} u K_{n/2}), n even
  EvenPairSplit,        // (K_2 u (n/2-1)K_1) v K_{n/2-1}, n even
};

// n copies of the named single graph.
GraphCollection single_graph_corollary_family(int n, CorollaryVariant variant);

}  // namespace tgc
