#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlift/field.hpp"
#include "hyperlift/subsets.hpp"

namespace hyperlift {

/// Hard cap on the number of stored hyperedge values per coloring.
inline constexpr std::uint64_t kMaxColoringValues = 5'000'000;

/// An F_q coloring of the hyperedges of K_n^(r): one field value per
/// r-subset of {0..n-1}, stored in colex order of the subset.
///
/// A graph is the 2-uniform case; an F_2 graph coloring uses value 1 for
/// "edge present". Colorings of the same shape (n, r, q) form a vector
/// space of dimension C(n,r).
struct HyperedgeColoring {
  int n = 0;  ///< vertex count, r <= n <= 64
  int r = 0;  ///< uniformity, r >= 2
  int q = 0;  ///< prime field order
  std::vector<FieldElement> values;  ///< length C(n,r), each < q

  /// All-zero coloring; validates the shape.
  static HyperedgeColoring zero(int n, int r, int q);

  std::uint64_t size() const { return values.size(); }

  FieldElement at(std::uint64_t idx) const { return values.at(idx); }

  /// Value on the hyperedge e (|e| must equal r, e within [0,n)).
  FieldElement value_at(const VertexSet& e) const;
  void set_value(const VertexSet& e, FieldElement v);

  bool same_shape(const HyperedgeColoring& o) const {
    return n == o.n && r == o.r && q == o.q;
  }
  bool is_zero() const;

  friend bool operator==(const HyperedgeColoring&, const HyperedgeColoring&) = default;
};

HyperedgeColoring constant_coloring(int n, int r, int q, FieldElement c);

/// 1 on the single hyperedge e, 0 elsewhere.
HyperedgeColoring basis_coloring(int n, int r, int q, const VertexSet& e);

/// alpha * a + b, componentwise in F_q. Shapes must match.
HyperedgeColoring vs_combine(const HyperedgeColoring& a, const HyperedgeColoring& b,
                             FieldElement alpha);

/// 0 <-> 1 swap on every hyperedge; defined for two-colorings (q = 2) only.
HyperedgeColoring complement(const HyperedgeColoring& f);

/// Sum of all hyperedge values in F_q.
FieldElement total_sum(const HyperedgeColoring& f);

/// Number of hyperedges on which f and g differ. Shapes must match.
std::uint64_t hamming_distance(const HyperedgeColoring& f, const HyperedgeColoring& g);

/// Uniform random coloring, deterministic for a given generator state.
HyperedgeColoring random_coloring(int n, int r, int q, std::mt19937_64& rng);

/// Canonical text form:
///   HEC 1
///   n=<n> r=<r> q=<q>
///   values in colex order, base 10, 20 per line, final newline.
std::string write_coloring(const HyperedgeColoring& f);

/// Parses the text form. Tolerates arbitrary whitespace and `#` comment
/// lines; rejects malformed headers, wrong value counts, and values >= q
/// with a ParseError naming line and column.
HyperedgeColoring read_coloring(std::string_view text);

HyperedgeColoring read_coloring_file(const std::filesystem::path& path);
void write_coloring_file(const HyperedgeColoring& f, const std::filesystem::path& path);

}  // namespace hyperlift
