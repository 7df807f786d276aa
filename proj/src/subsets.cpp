#include "hyperlift/subsets.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hyperlift {

namespace {

// Pascal table up to kMaxBinomialN; every entry fits in 64 bits.
const std::array<std::array<std::uint64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxBinomialN + 1>, kMaxBinomialN + 1> t{};
    for (int n = 0; n <= kMaxBinomialN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binom(int n, int k) {
  if (n < 0 || k < 0 || n > kMaxBinomialN || k > kMaxBinomialN)
    throw std::out_of_range("binom: arguments must lie in [0, " +
                            std::to_string(kMaxBinomialN) + "]");
  if (k > n) return 0;
  return pascal()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool is_strictly_increasing(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

std::uint64_t colex_rank(const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("colex_rank: set must be nonempty");
  if (s.front() < 0 || !is_strictly_increasing(s))
    throw std::invalid_argument("colex_rank: set must be strictly increasing and nonnegative");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    rank += binom(s[i], static_cast<int>(i) + 1);
  return rank;
}

VertexSet colex_unrank(std::uint64_t idx, int k) {
  if (k <= 0) throw std::invalid_argument("colex_unrank: k must be positive");
  VertexSet out(static_cast<std::size_t>(k));
  std::uint64_t rem = idx;
  for (int i = k; i >= 1; --i) {
    int m = i - 1;
    while (m + 1 <= kMaxBinomialN && binom(m + 1, i) <= rem) ++m;
    out[static_cast<std::size_t>(i - 1)] = m;
    rem -= binom(m, i);
  }
  if (rem != 0 || !is_strictly_increasing(out) || colex_rank(out) != idx)
    throw std::out_of_range("colex_unrank: index exceeds the supported element range");
  return out;
}

int pair_parity(int u, int r) {
  if (u < 0 || r <= 0 || u >= r)
    throw std::out_of_range("pair_parity: requires 0 <= u < r");
  return static_cast<int>((binom(u, 2) + binom(r - u, 2)) & 1u);
}

bool next_colex_selection(std::vector<int>& pos, int n) {
  const int k = static_cast<int>(pos.size());
  for (int i = 0; i < k; ++i) {
    const int limit = (i + 1 < k) ? pos[static_cast<std::size_t>(i + 1)] : n;
    if (pos[static_cast<std::size_t>(i)] + 1 < limit) {
      ++pos[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) pos[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  return false;
}

std::vector<VertexSet> subsets_of(const VertexSet& superset, int k) {
  std::vector<VertexSet> out;
  for_each_subset(superset, k, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

}  // namespace hyperlift
