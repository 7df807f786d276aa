#include "hyperlift/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hyperlift/field.hpp"

namespace hyperlift {

namespace {

void validate_vertex_subset(const HyperedgeColoring& f, const VertexSet& S) {
  if (S.empty() || !is_strictly_increasing(S) || S.front() < 0 || S.back() >= f.n)
    throw std::invalid_argument("vertex subset must be strictly increasing within [0, n)");
}

// Shared backtracking over ascending vertices. `misses_allowed` is 0 for
// plain cliques and 1 for clique-minus-edge.
struct CliqueSearch {
  const HyperedgeColoring& f;
  FieldElement color;
  int m;
  int misses_allowed;

  std::vector<int> chosen;
  int misses = 0;
  VertexSet missed_subset;
  std::optional<PatternHit> hit;
  bool want_exact_misses = false;  // induced mode: exactly misses_allowed

  explicit CliqueSearch(const HyperedgeColoring& f_, FieldElement c, int m_,
                        int allowed)
      : f(f_), color(c), m(m_), misses_allowed(allowed) {
    chosen.reserve(static_cast<std::size_t>(m));
  }

  // Counts the off-color r-subsets introduced by appending v; false when
  // the budget would be exceeded.
  bool try_extend(int v, int& added, VertexSet& added_miss) {
    added = 0;
    const int have = static_cast<int>(chosen.size());
    if (have + 1 < f.r) return true;
    std::vector<int> p(static_cast<std::size_t>(f.r - 1));
    std::iota(p.begin(), p.end(), 0);
    do {
      std::uint64_t idx = 0;
      for (int j = 0; j < f.r - 1; ++j)
        idx += binom(chosen[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])], j + 1);
      idx += binom(v, f.r);
      if (f.values[idx] != color) {
        if (misses + added + 1 > misses_allowed) return false;
        ++added;
        added_miss.clear();
        for (int j = 0; j < f.r - 1; ++j)
          added_miss.push_back(chosen[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])]);
        added_miss.push_back(v);
      }
    } while (next_colex_selection(p, have));
    return true;
  }

  bool run(int start) {
    if (static_cast<int>(chosen.size()) == m) {
      if (want_exact_misses && misses != misses_allowed) return false;
      PatternHit h;
      h.vertices = chosen;
      h.color = color;
      if (misses == 1) h.missing = missed_subset;
      hit = std::move(h);
      return true;
    }
    const int need = m - static_cast<int>(chosen.size());
    for (int v = start; v <= f.n - need; ++v) {
      int added = 0;
      VertexSet added_miss;
      if (!try_extend(v, added, added_miss)) continue;
      chosen.push_back(v);
      misses += added;
      VertexSet saved;
      if (added) {
        saved = missed_subset;
        missed_subset = added_miss;
      }
      if (run(v + 1)) return true;
      if (added) missed_subset = saved;
      misses -= added;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::string to_string(RBehaviorTag tag) {
  switch (tag) {
    case RBehaviorTag::Complete: return "complete";
    case RBehaviorTag::Void: return "void";
    case RBehaviorTag::Neutral: return "neutral";
  }
  return "?";
}

std::vector<std::uint64_t> induced_color_counts(const HyperedgeColoring& f,
                                                const VertexSet& S) {
  validate_vertex_subset(f, S);
  if (static_cast<int>(S.size()) < f.r)
    throw std::invalid_argument("subset smaller than the uniformity");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(f.q), 0);
  for_each_subset(S, f.r, [&](const VertexSet& e) {
    ++counts[f.values[colex_rank(e)]];
  });
  return counts;
}

RBehavior classify_r_behavior(const HyperedgeColoring& g, int r) {
  if (g.r != 2 || g.q != 2)
    throw std::invalid_argument("classification applies to 2-uniform F_2 colorings");
  if (r <= 2 || r > g.n)
    throw std::invalid_argument("classification requires 2 < r <= n");
  RBehavior out;
  for_each_k_subset(g.n, r, [&](const VertexSet& S) {
    std::uint64_t ones = 0;
    for (std::size_t i = 0; i + 1 < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j)
        ones += g.values[static_cast<std::uint64_t>(S[i]) + binom(S[j], 2)];
    if (ones & 1) {
      if (!out.witness_odd) out.witness_odd = S;
    } else {
      if (!out.witness_even) out.witness_even = S;
    }
    return !(out.witness_odd && out.witness_even);
  });
  if (out.witness_odd && out.witness_even)
    out.tag = RBehaviorTag::Neutral;
  else if (out.witness_odd)
    out.tag = RBehaviorTag::Complete;
  else
    out.tag = RBehaviorTag::Void;
  return out;
}

std::optional<PatternHit> find_mono_clique(const HyperedgeColoring& f,
                                           FieldElement color, int m) {
  if (color >= f.q) throw std::invalid_argument("color out of range");
  if (m < f.r || m > f.n)
    throw std::invalid_argument("clique size must satisfy r <= m <= n");
  CliqueSearch search(f, color, m, 0);
  search.run(0);
  return search.hit;
}

std::optional<PatternHit> find_clique_minus_edge(const HyperedgeColoring& f,
                                                 FieldElement color, int m,
                                                 SearchMode mode) {
  if (color >= f.q) throw std::invalid_argument("color out of range");
  if (m <= f.r || m > f.n)
    throw std::invalid_argument("clique-minus-edge size must satisfy r < m <= n");
  CliqueSearch search(f, color, m, 1);
  search.want_exact_misses = (mode == SearchMode::Induced);
  search.run(0);
  return search.hit;
}

std::uint64_t mono_components(const HyperedgeColoring& f, const VertexSet& S,
                              FieldElement c) {
  validate_vertex_subset(f, S);
  if (static_cast<int>(S.size()) < f.r)
    throw std::invalid_argument("subset smaller than the uniformity");
  if (c >= f.q) throw std::invalid_argument("color out of range");

  std::vector<int> parent(S.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  const int k = static_cast<int>(S.size());
  std::vector<int> pos(static_cast<std::size_t>(f.r));
  std::iota(pos.begin(), pos.end(), 0);
  do {
    std::uint64_t idx = 0;
    for (int j = 0; j < f.r; ++j)
      idx += binom(S[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])], j + 1);
    if (f.values[idx] == c) {
      const int root = find(pos[0]);
      for (int j = 1; j < f.r; ++j)
        parent[static_cast<std::size_t>(find(pos[static_cast<std::size_t>(j)]))] = root;
    }
  } while (next_colex_selection(pos, k));

  std::uint64_t components = 0;
  for (int i = 0; i < k; ++i)
    if (find(i) == i) ++components;
  return components;
}

namespace {

long take_param(const std::map<std::string, long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing family parameter '" + key + "'");
  return it->second;
}

void expect_keys(const std::map<std::string, long>& params,
                 std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : params) {
    (void)v;
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* s) { return k == s; }) == keys.end())
      throw std::invalid_argument("unknown family parameter '" + k + "'");
  }
}

HyperedgeColoring two_part_graph(long s, long t, bool cross_colored) {
  if (s < 1 || t < 1) throw std::invalid_argument("part sizes must be positive");
  const long n = s + t;
  if (n < 2 || n > kMaxBinomialN) throw std::invalid_argument("order out of range");
  auto g = HyperedgeColoring::zero(static_cast<int>(n), 2, 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool cross = (u < s) != (v < s);
      if (cross == cross_colored) g.set_value({u, v}, 1);
    }
  return g;
}

HyperedgeColoring pentagon_coloring() {
  auto g = HyperedgeColoring::zero(5, 2, 3);
  std::fill(g.values.begin(), g.values.end(), 2);
  for (int i = 0; i < 5; ++i) {
    int a = i, b = (i + 1) % 5;
    if (a > b) std::swap(a, b);
    g.set_value({a, b}, 1);
  }
  return g;
}

HyperedgeColoring paley_coloring(long p) {
  if (p < 5 || p > kMaxBinomialN || !is_prime(static_cast<int>(p)) || p % 4 != 1)
    throw std::invalid_argument("paley requires a prime p = 1 (mod 4), 5 <= p <= 64");
  std::vector<bool> residue(static_cast<std::size_t>(p), false);
  for (long x = 1; x < p; ++x) residue[static_cast<std::size_t>(x * x % p)] = true;
  auto g = HyperedgeColoring::zero(static_cast<int>(p), 2, 2);
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (residue[static_cast<std::size_t>(v - u)]) g.set_value({u, v}, 1);
  return g;
}

HyperedgeColoring gf16_coloring() {
  auto g = HyperedgeColoring::zero(16, 2, 3);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      const auto diff = static_cast<std::uint8_t>(u ^ v);
      g.set_value({u, v}, static_cast<FieldElement>(gf16_log(diff) % 3));
    }
  for (FieldElement c = 0; c < 3; ++c)
    if (find_mono_clique(g, c, 3))
      throw std::logic_error("gf16_3coloring generator produced a monochromatic triangle");
  return g;
}

}  // namespace

HyperedgeColoring generate_family(const std::string& family,
                                  const std::map<std::string, long>& params) {
  if (family == "complete") {
    expect_keys(params, {"n"});
    const long n = take_param(params, "n");
    if (n < 2 || n > kMaxBinomialN) throw std::invalid_argument("order out of range");
    return constant_coloring(static_cast<int>(n), 2, 2, 1);
  }
  if (family == "bipartite") {
    expect_keys(params, {"s", "t"});
    return two_part_graph(take_param(params, "s"), take_param(params, "t"), true);
  }
  if (family == "clique_union") {
    expect_keys(params, {"s", "t"});
    return two_part_graph(take_param(params, "s"), take_param(params, "t"), false);
  }
  if (family == "pentagon") {
    expect_keys(params, {});
    return pentagon_coloring();
  }
  if (family == "paley") {
    expect_keys(params, {"p"});
    return paley_coloring(take_param(params, "p"));
  }
  if (family == "gf16_3coloring") {
    expect_keys(params, {});
    return gf16_coloring();
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace hyperlift
