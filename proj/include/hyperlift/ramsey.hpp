#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlift/coloring.hpp"
#include "hyperlift/structure.hpp"

namespace hyperlift {

enum class Pattern { Clique, CliqueMinusEdge };

/// One forbidden pattern: color `color` must contain no (m, pattern, mode)
/// occurrence.
struct AvoidTarget {
  FieldElement color = 0;
  Pattern pattern = Pattern::Clique;
  int m = 0;
  SearchMode mode = SearchMode::Contains;
};

struct AvoidanceSpec {
  std::vector<AvoidTarget> targets;
};

/// A coloring together with the avoidance spec it was checked against,
/// the lower-bound statement it implies, and any violations found.
/// verified is true exactly when violations is empty.
struct Certificate {
  HyperedgeColoring coloring;
  AvoidanceSpec spec;
  std::string statement;
  bool verified = false;
  std::vector<PatternHit> violations;
};

/// Lifts a 3-colored graph (2-uniform, q=3) to a 3-colored 3-uniform
/// coloring. A triangle using at most two distinct edge colors maps to the
/// unique color that appears an odd number of times; a rainbow triangle
/// maps to `rainbow_color`.
HyperedgeColoring lift_3coloring(const HyperedgeColoring& f,
                                 FieldElement rainbow_color = 0);

/// Blows a 3-uniform 3-coloring of order b up to `copies` blocks of b
/// vertices each (block i occupies the contiguous index range
/// [i*b, (i+1)*b)). Hyperedges inside one block inherit the base color;
/// hyperedges meeting exactly two blocks get color 3; hyperedges meeting
/// three blocks get color 4. The result is stored with q=5 (labels only).
/// Requires copies >= 3.
HyperedgeColoring blowup_5color(const HyperedgeColoring& base, int copies);

/// Runs the search for every target; targets larger than the coloring are
/// vacuously avoided. Deterministic.
Certificate verify_avoidance(const HyperedgeColoring& f, const AvoidanceSpec& spec);

/// Full pipeline from an explicit 3-colored graph base: re-checks that the
/// base avoids a monochromatic K_{s_i} in color i (BaseCheckError names
/// the violating clique otherwise), lifts, blows up, and verifies against
/// the derived targets
///   {0: K_{2s1-1}-e contains, 1: K_{2s2-1}, 2: K_{2s3-1},
///    3: K_5, 4: K_{copies+1}-e contains}.
Certificate certify_from_base(const HyperedgeColoring& base,
                              const std::array<int, 3>& clique_sizes, int copies,
                              FieldElement rainbow_color = 0);

/// certify_from_base for a named generator family ("pentagon" or
/// "gf16_3coloring", both with clique sizes {3,3,3}).
Certificate certify_bound(const std::string& base_family, int copies,
                          FieldElement rainbow_color = 0);

/// Target list grammar: comma-separated
/// `<color>:<clique|cliqueminus>:<m>[:induced|:contains]`; the mode suffix
/// applies to cliqueminus only and defaults to contains.
AvoidanceSpec parse_avoidance_spec(std::string_view text);
std::string format_avoidance_spec(const AvoidanceSpec& spec);

/// Statement implied by avoiding `spec` on a coloring of order n:
/// "R(...; r) > n", targets listed in color order.
std::string bound_statement(const AvoidanceSpec& spec, int n, int r);

/// Coloring in canonical text form plus a trailing
/// `# CERT statement=... verified=... targets=...` comment line.
std::string write_certificate(const Certificate& cert);

/// Parses a serialized certificate; violations come back empty and
/// `verified` is the stored flag (re-verify with verify_avoidance).
Certificate read_certificate(std::string_view text);

}  // namespace hyperlift
