#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlift/coloring.hpp"

namespace hyperlift {

enum class RBehaviorTag { Complete, Void, Neutral };

std::string to_string(RBehaviorTag tag);

/// Classification of a graph by the edge-count parity of its induced
/// r-vertex subgraphs, with one witness subset per parity seen.
struct RBehavior {
  RBehaviorTag tag = RBehaviorTag::Neutral;
  std::optional<VertexSet> witness_odd;
  std::optional<VertexSet> witness_even;
};

enum class SearchMode { Induced, Contains };

/// A located pattern: an m-vertex set, the color searched, and for
/// clique-minus-edge hits the one r-subset that breaks the clique.
struct PatternHit {
  VertexSet vertices;
  FieldElement color = 0;
  std::optional<VertexSet> missing;
};

/// Per-color counts of the r-subsets of S; counts sum to C(|S|, r).
std::vector<std::uint64_t> induced_color_counts(const HyperedgeColoring& f,
                                                const VertexSet& S);

/// Scans all induced r-subsets of a 2-uniform F_2 coloring: Complete when
/// every induced edge count is odd, Void when every count is even,
/// Neutral otherwise (with one witness of each parity). Requires 2 < r <= n.
RBehavior classify_r_behavior(const HyperedgeColoring& g, int r);

/// Backtracking search for an m-set whose r-subsets all have the given
/// color. Vertices are tried in increasing order and a partial set is
/// extended only while every r-subset seen so far matches, so the returned
/// witness is the lexicographically least one. Requires r <= m <= n.
std::optional<PatternHit> find_mono_clique(const HyperedgeColoring& f,
                                           FieldElement color, int m);

/// Search for K_m^(r) minus one hyperedge. Induced mode: exactly
/// C(m,r)-1 of the m-set's r-subsets carry the color (the exception is
/// recorded as `missing`). Contains mode: at least C(m,r)-1 do, so a full
/// clique also qualifies. Requires r < m <= n.
std::optional<PatternHit> find_clique_minus_edge(const HyperedgeColoring& f,
                                                 FieldElement color, int m,
                                                 SearchMode mode);

/// Connected components of the hypergraph on S whose hyperedges are the
/// c-colored r-subsets of S. Vertices in no such hyperedge count as
/// singleton components. Requires |S| >= r.
std::uint64_t mono_components(const HyperedgeColoring& f, const VertexSet& S,
                              FieldElement c);

/// Named generators:
///   complete(n)        all-ones graph, q=2
///   bipartite(s,t)     1 exactly on cross pairs, q=2
///   clique_union(s,t)  1 exactly on within-part pairs, q=2
///   pentagon           3-colored K_5 (q=3): 5-cycle in color 1, rest 2
///   paley(p)           q=2, 1 iff the difference is a quadratic residue;
///                      p prime, p = 1 (mod 4)
///   gf16_3coloring     3-colored K_16 (q=3) on GF(16); edge {x,y} colored
///                      by the coset of x-y in the cubic-residue partition
///                      of GF(16)*; checked mono-triangle-free on build
HyperedgeColoring generate_family(const std::string& family,
                                  const std::map<std::string, long>& params = {});

}  // namespace hyperlift
