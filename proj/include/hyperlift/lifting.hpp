#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlift/coloring.hpp"
#include "hyperlift/linalg.hpp"

namespace hyperlift {

/// Row-count limit when a lift is materialized as a matrix.
inline constexpr std::uint64_t kDefaultMaxLiftRows = 200'000;

/// Span-size budget for exhaustive kernel enumeration.
inline constexpr std::uint64_t kDefaultSpanBudget = 1ull << 20;

/// Identifies one lifting map: the linear map sending an s-uniform F_q
/// coloring f of K_n to the r-uniform coloring whose value on a hyperedge
/// e is the sum of f over all s-subsets of e.
struct LiftSpec {
  int q = 0;
  int n = 0;
  int s = 0;
  int r = 0;

  /// Requires q prime and 2 <= s < r <= n <= 64.
  void validate() const;
};

/// Rank/kernel data of a lift matrix.
struct KernelSummary {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;  ///< rank + kernel_dim = C(n,s)
  std::vector<HyperedgeColoring> kernel_basis;  ///< s-uniform; each lifts to zero
  std::uint64_t preimage_count = 0;             ///< q^kernel_dim
};

/// Applies the lift directly, streaming over the s-subsets of each
/// r-subset; no matrix is materialized.
HyperedgeColoring apply_lift(const LiftSpec& spec, const HyperedgeColoring& f);

/// The C(n,r) x C(n,s) matrix M with M[colex(e)][colex(e')] = 1 iff
/// e' is a subset of e; apply_lift(f) = M * f.
ModMatrix lift_matrix(const LiftSpec& spec,
                      std::uint64_t max_rows = kDefaultMaxLiftRows);

/// Row-reduces the lift matrix. Rows are bit-packed words for q = 2 and
/// byte vectors for odd primes; pivoting is first-nonzero in column order,
/// so the output is deterministic. Every kernel basis vector is verified
/// to lift to the zero coloring before it is returned.
KernelSummary rank_kernel(const LiftSpec& spec,
                          std::uint64_t max_rows = kDefaultMaxLiftRows);

/// If g is in the image, returns the particular preimage with all free
/// variables set to 0; otherwise nothing.
std::optional<HyperedgeColoring> solve_preimage(
    const LiftSpec& spec, const HyperedgeColoring& g,
    std::uint64_t max_rows = kDefaultMaxLiftRows);

/// 0 if g is not in the image, q^kernel_dim otherwise.
std::uint64_t preimage_count(const LiftSpec& spec, const HyperedgeColoring& g,
                             std::uint64_t max_rows = kDefaultMaxLiftRows);

/// Minimum Hamming weight over all nonzero kernel vectors, by exhaustive
/// enumeration of the kernel span. Rejects spans larger than `budget`
/// with a ResourceError; throws std::domain_error when the kernel is
/// trivial. For s = r-1 the result is at least n-r+2.
std::uint64_t min_kernel_weight(const LiftSpec& spec,
                                std::uint64_t budget = kDefaultSpanBudget,
                                std::uint64_t max_rows = kDefaultMaxLiftRows);

}  // namespace hyperlift
