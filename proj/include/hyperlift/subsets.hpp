#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace hyperlift {

/// A set of vertex indices, kept strictly increasing.
using VertexSet = std::vector<int>;

/// Widest n for which C(n,k) is computed exactly in 64 bits.
inline constexpr int kMaxBinomialN = 64;

/// C(n,k), exact. Returns 0 for k > n. Arguments outside
/// [0, kMaxBinomialN] are rejected with std::out_of_range.
std::uint64_t binom(int n, int k);

bool is_strictly_increasing(const VertexSet& s);

/// Rank of a nonempty set in the colex order of all |s|-sets:
/// rank(s) = sum_i C(s[i], i+1). Independent of any ambient n.
std::uint64_t colex_rank(const VertexSet& s);

/// Inverse of colex_rank for k-element sets (greedy, largest element first).
VertexSet colex_unrank(std::uint64_t idx, int k);

/// (C(u,2) + C(r-u,2)) mod 2 for 0 <= u < r.
int pair_parity(int u, int r);

/// Advances a strictly increasing selection out of [0, n) to its colex
/// successor. Returns false when `pos` was the last selection.
bool next_colex_selection(std::vector<int>& pos, int n);

namespace detail {
template <class Fn>
bool invoke_subset_fn(Fn&& fn, const VertexSet& s) {
  if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const VertexSet&>>) {
    fn(s);
    return true;
  } else {
    return static_cast<bool>(fn(s));
  }
}
}  // namespace detail

/// Calls fn for every k-subset of {0..n-1} in colex order. fn may return
/// void, or bool where false stops the iteration.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k <= 0) throw std::invalid_argument("subset size must be positive");
  if (k > n) return;
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
  do {
    if (!detail::invoke_subset_fn(fn, pos)) return;
  } while (next_colex_selection(pos, n));
}

/// Calls fn for every k-subset of `superset`, in colex order of positions.
/// Yields nothing when k > |superset|.
template <class Fn>
void for_each_subset(const VertexSet& superset, int k, Fn&& fn) {
  const int m = static_cast<int>(superset.size());
  if (k <= 0) throw std::invalid_argument("subset size must be positive");
  if (k > m) return;
  VertexSet cur(static_cast<std::size_t>(k));
  for_each_k_subset(m, k, [&](const VertexSet& pos) {
    for (int i = 0; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = superset[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
    return detail::invoke_subset_fn(fn, cur);
  });
}

/// Materialized form of for_each_subset.
std::vector<VertexSet> subsets_of(const VertexSet& superset, int k);

}  // namespace hyperlift
