#include "hyperlift/suites.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hyperlift/lifting.hpp"
#include "hyperlift/ramsey.hpp"
#include "hyperlift/structure.hpp"

namespace hyperlift {

namespace {

struct Ctx {
  std::uint64_t checks = 0;
  bool ok = true;
  std::string fail;
  std::string extra;

  void require(bool cond, const std::string& msg) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      fail = msg;
    }
  }
  template <class MsgFn>
  void require_lazy(bool cond, MsgFn&& fn) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      fail = fn();
    }
  }
  void report(const std::string& token) {
    if (!extra.empty()) extra += ' ';
    extra += token;
  }
};

std::mt19937_64 suite_rng(const SuiteOptions& opts, std::uint64_t salt) {
  return std::mt19937_64(opts.seed * 0x9E3779B97F4A7C15ull + salt);
}

HyperedgeColoring coloring_from_mask(int n, int r, std::uint64_t mask) {
  auto f = HyperedgeColoring::zero(n, r, 2);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = static_cast<FieldElement>(mask >> i & 1u);
  return f;
}

// ---- preimage: the (2,3) lift over F_2 is 2^(n-1)-to-one ----------------

void suite_preimage(Ctx& c, const SuiteOptions&) {
  for (int n = 4; n <= 8; ++n) {
    const LiftSpec spec{2, n, 2, 3};
    const auto ks = rank_kernel(spec);
    c.require(ks.kernel_dim == static_cast<std::size_t>(n - 1),
              "kernel dimension at n=" + std::to_string(n));
    c.require(ks.preimage_count == (1ull << (n - 1)),
              "preimage count at n=" + std::to_string(n));
    c.require(ks.rank + ks.kernel_dim == binom(n, 2),
              "rank + kernel != C(n,2) at n=" + std::to_string(n));
  }
  // Brute-force census of all images at n = 4 and 5.
  for (int n = 4; n <= 5; ++n) {
    const LiftSpec spec{2, n, 2, 3};
    const int edges = static_cast<int>(binom(n, 2));
    std::set<std::uint64_t> images;
    std::uint64_t zero_preimages = 0;
    for (std::uint64_t mask = 0; mask < (1ull << edges); ++mask) {
      const auto g = apply_lift(spec, coloring_from_mask(n, 2, mask));
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < g.values.size(); ++i)
        key |= static_cast<std::uint64_t>(g.values[i]) << i;
      images.insert(key);
      if (key == 0) ++zero_preimages;
    }
    c.require(images.size() == (1ull << (edges - (n - 1))),
              "distinct image count at n=" + std::to_string(n));
    c.require(zero_preimages == (1ull << (n - 1)),
              "zero-image preimage count at n=" + std::to_string(n));
  }
}

// ---- min_distance: colorings with equal (r-1,r) lifts differ in >= n-r+2 --

// Scans every F_2 source coloring in Gray-code order, maintaining the image
// by toggling the target hyperedges above the flipped source hyperedge.
std::uint64_t brute_min_kernel_weight(const LiftSpec& spec) {
  const int dim = static_cast<int>(binom(spec.n, spec.s));
  std::vector<std::vector<std::uint32_t>> above(static_cast<std::size_t>(dim));
  std::vector<int> e(static_cast<std::size_t>(spec.s));
  std::iota(e.begin(), e.end(), 0);
  do {
    auto& rows = above[colex_rank(e)];
    for_each_k_subset(spec.n, spec.r, [&](const VertexSet& sup) {
      if (std::includes(sup.begin(), sup.end(), e.begin(), e.end()))
        rows.push_back(static_cast<std::uint32_t>(colex_rank(sup)));
    });
  } while (next_colex_selection(e, spec.n));

  std::vector<std::uint8_t> image(binom(spec.n, spec.r), 0);
  std::int64_t nonzero = 0;
  std::uint64_t best = UINT64_MAX;
  std::uint64_t prev = 0;
  for (std::uint64_t t = 1; t < (1ull << dim); ++t) {
    const std::uint64_t mask = t ^ (t >> 1);
    const int flipped = std::countr_zero(mask ^ prev);
    for (const auto row : above[static_cast<std::size_t>(flipped)])
      nonzero += (image[row] ^= 1u) ? 1 : -1;
    prev = mask;
    if (nonzero == 0)
      best = std::min<std::uint64_t>(best, std::popcount(mask));
  }
  return best;
}

void suite_min_distance(Ctx& c, const SuiteOptions&) {
  for (int n : {5, 6, 7}) {
    const auto w = min_kernel_weight({2, n, 2, 3});
    c.require(w >= static_cast<std::uint64_t>(n - 1),
              "weight below n-1 at n=" + std::to_string(n));
    if (n == 5) c.require(w == 4, "n=5 weight is not the optimal 4");
  }
  const auto w34 = min_kernel_weight({2, 6, 3, 4});
  c.require(w34 >= 4, "(3,4) n=6 weight below 4");

  // Independent oracle: scan every source coloring that lifts to zero.
  c.require(brute_min_kernel_weight({2, 5, 2, 3}) == min_kernel_weight({2, 5, 2, 3}),
            "oracle disagrees at (2,3) n=5");
  c.require(brute_min_kernel_weight({2, 6, 2, 3}) == min_kernel_weight({2, 6, 2, 3}),
            "oracle disagrees at (2,3) n=6");
  c.require(brute_min_kernel_weight({2, 6, 3, 4}) == w34,
            "oracle disagrees at (3,4) n=6");

  // The bound holds for any prime field; exact q=3 values are reported.
  for (int n : {5, 6}) {
    const auto w3 = min_kernel_weight({3, n, 2, 3});
    c.require(w3 >= static_cast<std::uint64_t>(n - 1),
              "q=3 weight below n-1 at n=" + std::to_string(n));
    c.report("q3_w_n" + std::to_string(n) + "=" + std::to_string(w3));
  }
}

// ---- sum laws ------------------------------------------------------------

constexpr int kSumConfigs[4][3] = {{4, 2, 3}, {5, 2, 3}, {6, 2, 4}, {7, 3, 4}};

void suite_sum_field(Ctx& c, const SuiteOptions& opts) {
  auto rng = suite_rng(opts, 3);
  for (const auto& cfg : kSumConfigs) {
    const int n = cfg[0], s = cfg[1], r = cfg[2];
    for (int q : {2, 3}) {
      const bool divides = binom(n - s, r - s) % static_cast<std::uint64_t>(q) == 0;
      for (int i = 0; i < 200; ++i) {
        const auto f = random_coloring(n, s, q, rng);
        const auto g = apply_lift({q, n, s, r}, f);
        if (divides)
          c.require_lazy(total_sum(g) == 0, [&] {
            return "nonzero image sum at n=" + std::to_string(n) +
                   " q=" + std::to_string(q);
          });
      }
    }
  }
}

void suite_sum_f2(Ctx& c, const SuiteOptions& opts) {
  auto rng = suite_rng(opts, 4);
  for (const auto& cfg : kSumConfigs) {
    const int n = cfg[0], s = cfg[1], r = cfg[2];
    const bool odd = binom(n - s, r - s) % 2 == 1;
    for (int i = 0; i < 200; ++i) {
      const auto f = random_coloring(n, s, 2, rng);
      const auto g = apply_lift({2, n, s, r}, f);
      c.require_lazy(total_sum(g) == (odd ? total_sum(f) : 0), [&] {
        return "sum relation failed at (n,s,r)=(" + std::to_string(n) + "," +
               std::to_string(s) + "," + std::to_string(r) + ")";
      });
    }
  }
}

// ---- complement ----------------------------------------------------------

void suite_complement(Ctx& c, const SuiteOptions& opts) {
  auto rng = suite_rng(opts, 5);
  const int n_max = std::max(5, std::min(8, opts.n_max));
  constexpr int kPairs[3][2] = {{2, 3}, {2, 4}, {3, 4}};
  for (const auto& sr : kPairs) {
    const int s = sr[0], r = sr[1];
    const bool odd = binom(r, s) % 2 == 1;
    for (int i = 0; i < 200; ++i) {
      const int n = r + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - r + 1));
      const LiftSpec spec{2, n, s, r};
      const auto f = random_coloring(n, s, 2, rng);
      const auto lifted_comp = apply_lift(spec, complement(f));
      const auto expected = odd ? complement(apply_lift(spec, f)) : apply_lift(spec, f);
      c.require_lazy(lifted_comp == expected, [&] {
        return "complement law failed at (s,r)=(" + std::to_string(s) + "," +
               std::to_string(r) + ") n=" + std::to_string(n);
      });
    }
  }
}

// ---- components ----------------------------------------------------------

// Monochromatic color of g on S, or -1 when S is not monochromatic.
int mono_color_on(const HyperedgeColoring& g, const VertexSet& S) {
  int color = -1;
  bool mono = true;
  for_each_subset(S, g.r, [&](const VertexSet& e) {
    const int v = g.values[colex_rank(e)];
    if (color < 0)
      color = v;
    else if (v != color)
      mono = false;
    return mono;
  });
  return mono ? color : -1;
}

// The 1-colored graph on S is a disjoint union of at most two complete graphs.
bool union_of_at_most_two_cliques(const HyperedgeColoring& f, const VertexSet& S) {
  const int k = static_cast<int>(S.size());
  std::vector<int> parent(S.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto edge = [&](int i, int j) {
    return f.values[static_cast<std::uint64_t>(S[static_cast<std::size_t>(i)]) +
                    binom(S[static_cast<std::size_t>(j)], 2)];
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (edge(i, j) == 1) parent[static_cast<std::size_t>(find(j))] = find(i);
  std::set<int> roots;
  for (int i = 0; i < k; ++i) roots.insert(find(i));
  if (roots.size() > 2) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (find(i) == find(j) && edge(i, j) != 1) return false;
  return true;
}

void suite_components(Ctx& c, const SuiteOptions& opts) {
  std::uint64_t alt1 = 0, alt0 = 0;
  for (int n = 3; n <= std::min(6, opts.n_max); ++n) {
    const LiftSpec spec{2, n, 2, 3};
    const int edges = static_cast<int>(binom(n, 2));
    for (std::uint64_t mask = 0; mask < (1ull << edges); ++mask) {
      const auto f = coloring_from_mask(n, 2, mask);
      const auto g = apply_lift(spec, f);
      for (int k = 3; k <= n; ++k) {
        for_each_k_subset(n, k, [&](const VertexSet& S) {
          const int color = mono_color_on(g, S);
          if (color < 0) return;
          c.require_lazy(
              mono_components(f, S, static_cast<FieldElement>(color)) <= 2,
              [&] { return "more than 2 components at n=" + std::to_string(n); });
          if (color == 1)
            c.require_lazy(union_of_at_most_two_cliques(f, S), [&] {
              return "1-colored graph not a union of <=2 cliques at n=" +
                     std::to_string(n);
            });
          // Fixed-color readings, reported only.
          if (mono_components(f, S, 1) > 2) ++alt1;
          if (mono_components(f, S, 0) > 2) ++alt0;
        });
      }
    }
  }

  auto rng = suite_rng(opts, 6);
  for (int n : {7, 8}) {
    if (n > opts.n_max) continue;
    const LiftSpec spec{2, n, 4, 5};
    for (int i = 0; i < 200; ++i) {
      const auto f = random_coloring(n, 4, 2, rng);
      const auto g = apply_lift(spec, f);
      for (int k = 5; k <= n; ++k) {
        for_each_k_subset(n, k, [&](const VertexSet& S) {
          const int color = mono_color_on(g, S);
          if (color < 0) return;
          c.require_lazy(
              mono_components(f, S, static_cast<FieldElement>(color)) <= 4,
              [&] { return "more than 4 components at r=5, n=" + std::to_string(n); });
        });
      }
    }
  }
  c.report("fixed_c1_violations=" + std::to_string(alt1));
  c.report("fixed_c0_violations=" + std::to_string(alt0));
}

// ---- clique minus edge never occurs induced in an (r-1,r) image -----------

void suite_clique_minus_edge(Ctx& c, const SuiteOptions& opts) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto g = apply_lift({2, 4, 2, 3}, coloring_from_mask(4, 2, mask));
    for (FieldElement color = 0; color < 2; ++color)
      c.require_lazy(!find_clique_minus_edge(g, color, 4, SearchMode::Induced),
                     [&] { return "induced K_4-e in an n=4 image"; });
  }
  auto rng = suite_rng(opts, 7);
  constexpr int kUniformities[2] = {3, 5};
  for (int r : kUniformities) {
    const int n = 7;
    if (n > opts.n_max) continue;
    const LiftSpec spec{2, n, r - 1, r};
    for (int i = 0; i < 500; ++i) {
      const auto g = apply_lift(spec, random_coloring(n, r - 1, 2, rng));
      for (int m = r + 1; m <= n; ++m)
        for (FieldElement color = 0; color < 2; ++color)
          c.require_lazy(!find_clique_minus_edge(g, color, m, SearchMode::Induced),
                         [&] {
                           return "induced K_" + std::to_string(m) + "-e at r=" +
                                  std::to_string(r);
                         });
    }
  }
}

// ---- bipartite graphs have only even induced edge counts at odd r ---------

void suite_bipartite_void(Ctx& c, const SuiteOptions&) {
  for (int s = 1; s <= 4; ++s) {
    for (int t = s; s + t <= 9; ++t) {
      const auto g = generate_family("bipartite", {{"s", s}, {"t", t}});
      for (int r = 3; r <= s + t; r += 2) {
        const auto b = classify_r_behavior(g, r);
        c.require_lazy(b.tag == RBehaviorTag::Void, [&] {
          return "bipartite(" + std::to_string(s) + "," + std::to_string(t) +
                 ") not void at r=" + std::to_string(r);
        });
      }
    }
  }
}

// ---- pair parity ----------------------------------------------------------

void suite_pair_parity(Ctx& c, const SuiteOptions&) {
  for (int r = 1; r <= 20; ++r) {
    for (int u = 0; u < r; ++u) {
      const int direct = static_cast<int>((binom(u, 2) + binom(r - u, 2)) % 2);
      const int got = pair_parity(u, r);
      c.require_lazy(got == direct,
                     [&] { return "parity mismatch at u=" + std::to_string(u) +
                                  " r=" + std::to_string(r); });
      if (r % 4 == 0)
        c.require_lazy(got == u % 2, [&] {
          return "r=0 (mod 4) case failed at u=" + std::to_string(u);
        });
      if (r % 4 == 2)
        c.require_lazy(got == (u + 1) % 2, [&] {
          return "r=2 (mod 4) case failed at u=" + std::to_string(u);
        });
    }
  }
}

// ---- two-clique union trichotomy -------------------------------------------

void suite_two_clique(Ctx& c, const SuiteOptions&) {
  for (int s = 1; s <= 4; ++s) {
    for (int t = s; s + t <= 9; ++t) {
      const auto g = generate_family("clique_union", {{"s", s}, {"t", t}});
      for (int r = 3; r < s + t; ++r) {
        const auto b = classify_r_behavior(g, r);
        const RBehaviorTag expected = (r % 2 == 0)  ? RBehaviorTag::Neutral
                                      : (r % 4 == 1) ? RBehaviorTag::Void
                                                     : RBehaviorTag::Complete;
        c.require_lazy(b.tag == expected, [&] {
          return "clique_union(" + std::to_string(s) + "," + std::to_string(t) +
                 ") misclassified at r=" + std::to_string(r) + ": got " +
                 to_string(b.tag);
        });
        if (b.tag == RBehaviorTag::Neutral)
          c.require(b.witness_odd && b.witness_even, "neutral result lacks witnesses");
      }
    }
  }
}

// ---- rainbow lift consistency ----------------------------------------------

HyperedgeColoring merge_to_f2(const HyperedgeColoring& f, FieldElement target,
                              bool equal_means_one) {
  auto m = HyperedgeColoring::zero(f.n, f.r, 2);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const bool eq = f.values[i] == target;
    m.values[i] = static_cast<FieldElement>((eq == equal_means_one) ? 1 : 0);
  }
  return m;
}

void suite_rainbow_lift(Ctx& c, const SuiteOptions& opts) {
  auto rng = suite_rng(opts, 8);
  const int n_max = std::max(4, std::min(8, opts.n_max));
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 3));
    const auto f = random_coloring(n, 2, 3, rng);
    const auto l = lift_3coloring(f, 0);
    const LiftSpec spec{2, n, 2, 3};
    // Color 0 of the lift coincides with the zero set of the merged
    // two-coloring lift (0 vs everything else).
    const auto g0 = apply_lift(spec, merge_to_f2(f, 0, false));
    for (std::size_t e = 0; e < l.values.size(); ++e)
      c.require_lazy((l.values[e] == 0) == (g0.values[e] == 0),
                     [&] { return "color-0 set mismatch at n=" + std::to_string(n); });
    // Colors 1 and 2 are subsets of the corresponding merged lifts.
    for (FieldElement color = 1; color <= 2; ++color) {
      const auto gc = apply_lift(spec, merge_to_f2(f, color, true));
      for (std::size_t e = 0; e < l.values.size(); ++e)
        if (l.values[e] == color)
          c.require_lazy(gc.values[e] == 1, [&] {
            return "color-" + std::to_string(color) + " set not a subset at n=" +
                   std::to_string(n);
          });
    }
  }

  // Mono-triangle-free bases lift to colorings without the matching
  // 5-vertex patterns.
  for (const char* family : {"pentagon", "gf16_3coloring"}) {
    const auto base = generate_family(family);
    for (FieldElement color = 0; color < 3; ++color)
      c.require_lazy(!find_mono_clique(base, color, 3),
                     [&] { return std::string(family) + " base has a mono triangle"; });
    const auto lifted = lift_3coloring(base, 0);
    for (FieldElement color = 1; color <= 2; ++color)
      c.require_lazy(!find_mono_clique(lifted, color, 5), [&] {
        return std::string(family) + " lift has a mono K_5 in color " +
               std::to_string(color);
      });
    c.require_lazy(!find_clique_minus_edge(lifted, 0, 5, SearchMode::Contains),
                   [&] { return std::string(family) + " lift has a K_5-e in color 0"; });
  }
}

// ---- blow-up certificates ---------------------------------------------------

void check_blowup_rules(Ctx& c, const HyperedgeColoring& base,
                        const HyperedgeColoring& blown, int copies) {
  const int b = base.n;
  for_each_k_subset(blown.n, 3, [&](const VertexSet& t) {
    const int b0 = t[0] / b, b1 = t[1] / b, b2 = t[2] / b;
    const FieldElement v = blown.values[colex_rank(t)];
    if (b0 == b1 && b1 == b2) {
      const FieldElement expected =
          base.value_at({t[0] - b0 * b, t[1] - b1 * b, t[2] - b2 * b});
      c.require_lazy(v == expected, [&] { return "within-block color mismatch"; });
    } else if (b0 != b1 && b1 != b2 && b0 != b2) {
      c.require_lazy(v == 4, [&] { return "three-block hyperedge not color 4"; });
    } else {
      c.require_lazy(v == 3, [&] { return "two-block hyperedge not color 3"; });
    }
  });
  (void)copies;
}

void suite_blowup_pentagon(Ctx& c, const SuiteOptions&) {
  const auto base = lift_3coloring(generate_family("pentagon"), 0);
  bool rejected = false;
  try {
    blowup_5color(base, 2);
  } catch (const std::domain_error&) {
    rejected = true;
  }
  c.require(rejected, "blow-up accepted fewer than 3 copies");

  const auto blown = blowup_5color(base, 3);
  c.require(blown.n == 15 && blown.q == 5, "blow-up shape");
  check_blowup_rules(c, base, blown, 3);

  // Cross-block colors depend only on the block pattern, never on base values.
  auto perturbed = base;
  perturbed.values[0] = static_cast<FieldElement>((perturbed.values[0] + 1) % 3);
  const auto blown2 = blowup_5color(perturbed, 3);
  for (std::size_t i = 0; i < blown.values.size(); ++i)
    if (blown.values[i] >= 3)
      c.require_lazy(blown2.values[i] == blown.values[i],
                     [&] { return "cross-block color changed with the base"; });

  const auto cert = certify_bound("pentagon", 3);
  c.require(cert.verified, "pentagon certificate not verified");
  c.require(cert.statement ==
                "R(K_5^(3)-e, K_5^(3), K_5^(3), K_5^(3), K_4^(3)-e; 3) > 15",
            "pentagon certificate statement: " + cert.statement);

  const auto parsed = read_certificate(write_certificate(cert));
  c.require(parsed.statement == cert.statement && parsed.verified,
            "certificate round trip");
  const auto recheck = verify_avoidance(parsed.coloring, parsed.spec);
  c.require(recheck.verified == cert.verified, "re-verification of serialized certificate");
}

void suite_blowup_gf16(Ctx& c, const SuiteOptions&) {
  const auto base = generate_family("gf16_3coloring");
  c.require(base.n == 16 && base.q == 3, "gf16 base shape");
  const auto counts = induced_color_counts(base, [] {
    VertexSet all(16);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  c.require(counts[0] == 40 && counts[1] == 40 && counts[2] == 40,
            "gf16 color classes are not balanced");
  for (FieldElement color = 0; color < 3; ++color)
    c.require_lazy(!find_mono_clique(base, color, 3), [&] {
      return "gf16 base has a mono triangle in color " + std::to_string(color);
    });

  const auto cert = certify_bound("gf16_3coloring", 3);
  c.require(cert.verified, "gf16 certificate not verified");
  c.require(cert.statement ==
                "R(K_5^(3)-e, K_5^(3), K_5^(3), K_5^(3), K_4^(3)-e; 3) > 48",
            "gf16 certificate statement: " + cert.statement);
}

struct SuiteEntry {
  const char* name;
  void (*fn)(Ctx&, const SuiteOptions&);
};

constexpr SuiteEntry kSuites[] = {
    {"preimage", suite_preimage},
    {"min_distance", suite_min_distance},
    {"sum_field", suite_sum_field},
    {"sum_f2", suite_sum_f2},
    {"complement", suite_complement},
    {"components", suite_components},
    {"clique_minus_edge", suite_clique_minus_edge},
    {"bipartite_void", suite_bipartite_void},
    {"pair_parity", suite_pair_parity},
    {"two_clique", suite_two_clique},
    {"rainbow_lift", suite_rainbow_lift},
    {"blowup_pentagon", suite_blowup_pentagon},
    {"blowup_gf16", suite_blowup_gf16},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& entry : kSuites) {
    if (name != entry.name) continue;
    Ctx ctx;
    entry.fn(ctx, opts);
    SuiteResult res;
    res.name = name;
    res.passed = ctx.ok;
    res.checks = ctx.checks;
    res.detail = ctx.ok ? ctx.extra : ("failed: " + ctx.fail);
    return res;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& entry : kSuites) out.push_back(run_suite(entry.name, opts));
  return out;
}

std::string format_suite_table(const std::vector<SuiteResult>& results) {
  std::string out;
  std::size_t failures = 0;
  for (const auto& r : results) {
    std::string line = r.name;
    if (line.size() < 18) line.append(18 - line.size(), ' ');
    line += r.passed ? " PASS" : " FAIL";
    line += " checks=" + std::to_string(r.checks);
    if (!r.detail.empty()) line += " " + r.detail;
    out += line + "\n";
    if (!r.passed) ++failures;
  }
  out += "result=" + std::string(failures == 0 ? "PASS" : "FAIL") +
         " suites=" + std::to_string(results.size()) +
         " failures=" + std::to_string(failures) + "\n";
  return out;
}

}  // namespace hyperlift
