#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "hyperlift/errors.hpp"
#include "hyperlift/lifting.hpp"

using namespace hyperlift;

namespace {

HyperedgeColoring clique_indicator(int n, const std::vector<VertexSet>& cliques) {
  auto f = HyperedgeColoring::zero(n, 2, 2);
  for (const auto& c : cliques)
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) f.set_value({c[i], c[j]}, 1);
  return f;
}

HyperedgeColoring from_mask(int n, int r, std::uint64_t mask) {
  auto f = HyperedgeColoring::zero(n, r, 2);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = static_cast<FieldElement>(mask >> i & 1u);
  return f;
}

HyperedgeColoring mat_apply(const ModMatrix& m, const HyperedgeColoring& f,
                            const LiftSpec& spec) {
  auto g = HyperedgeColoring::zero(spec.n, spec.r, spec.q);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      acc = (acc + m.get(i, j) * f.values[j]) % static_cast<unsigned>(spec.q);
    g.values[i] = static_cast<FieldElement>(acc);
  }
  return g;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(LiftSpec({2, 5, 3, 3}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LiftSpec({2, 5, 1, 3}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LiftSpec({2, 3, 2, 4}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LiftSpec({4, 5, 2, 3}).validate(), std::invalid_argument);
  CHECK_NOTHROW(LiftSpec({2, 5, 2, 3}).validate());
  CHECK_THROWS_AS(apply_lift({2, 5, 2, 3}, HyperedgeColoring::zero(5, 3, 2)),
                  std::invalid_argument);
}

TEST_CASE("both disjoint-clique colorings lift to the all-ones K_5^(3)") {
  const LiftSpec spec{2, 5, 2, 3};
  const auto ones = constant_coloring(5, 3, 2, 1);
  CHECK(apply_lift(spec, clique_indicator(5, {{1, 2, 3, 4}})) == ones);
  CHECK(apply_lift(spec, clique_indicator(5, {{0, 1}, {2, 3, 4}})) == ones);
}

TEST_CASE("lift of zero is zero") {
  CHECK(apply_lift({2, 6, 2, 4}, HyperedgeColoring::zero(6, 2, 2)).is_zero());
  CHECK(apply_lift({3, 6, 3, 4}, HyperedgeColoring::zero(6, 3, 3)).is_zero());
}

TEST_CASE("lift of a basis edge marks exactly the containing triples") {
  const auto g = apply_lift({3, 4, 2, 3}, basis_coloring(4, 2, 3, {0, 1}));
  CHECK(g.value_at({0, 1, 2}) == 1);
  CHECK(g.value_at({0, 1, 3}) == 1);
  CHECK(g.value_at({0, 2, 3}) == 0);
  CHECK(g.value_at({1, 2, 3}) == 0);
}

TEST_CASE("lift is linear") {
  std::mt19937_64 rng(21);
  for (int q : {2, 3, 5}) {
    const LiftSpec spec{q, 7, 2, 3};
    for (int i = 0; i < 20; ++i) {
      const auto a = random_coloring(7, 2, q, rng);
      const auto b = random_coloring(7, 2, q, rng);
      const auto alpha = static_cast<FieldElement>(rng() % static_cast<std::uint64_t>(q));
      CHECK(apply_lift(spec, vs_combine(a, b, alpha)) ==
            vs_combine(apply_lift(spec, a), apply_lift(spec, b), alpha));
    }
  }
}

TEST_CASE("matrix of the n=3 lift is the all-ones row") {
  const auto m = lift_matrix({2, 3, 2, 3});
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(m.get(0, j) == 1);
}

TEST_CASE("matrix row and column sums") {
  for (auto [q, n, s, r] : {std::tuple{2, 7, 2, 3}, {3, 6, 2, 4}, {5, 7, 3, 4}}) {
    const LiftSpec spec{q, n, s, r};
    const auto m = lift_matrix(spec);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::uint64_t row_sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) row_sum += m.get(i, j);
      CHECK(row_sum == binom(r, s));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::uint64_t col_sum = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) col_sum += m.get(i, j);
      CHECK(col_sum == binom(n - s, r - s));
    }
  }
}

TEST_CASE("matrix and streaming lift agree") {
  std::mt19937_64 rng(22);
  for (auto [q, n, s, r] :
       {std::tuple{2, 8, 2, 3}, {3, 8, 2, 3}, {5, 10, 2, 3}, {2, 8, 2, 4}, {3, 9, 3, 5}}) {
    const LiftSpec spec{q, n, s, r};
    REQUIRE(binom(n, r) <= 500);
    const auto m = lift_matrix(spec);
    for (int i = 0; i < 10; ++i) {
      const auto f = random_coloring(n, s, q, rng);
      CHECK(apply_lift(spec, f) == mat_apply(m, f, spec));
    }
  }
}

TEST_CASE("matrix size limit") {
  CHECK_THROWS_AS(lift_matrix({2, 40, 2, 5}), ResourceError);  // C(40,5) = 658008
  CHECK_THROWS_AS(rank_kernel({2, 20, 2, 3}, 100), ResourceError);
}

TEST_CASE("rank and kernel of the (2,3) lift over F_2") {
  const auto k5 = rank_kernel({2, 5, 2, 3});
  CHECK(k5.rank == 6);
  CHECK(k5.kernel_dim == 4);
  CHECK(k5.preimage_count == 16);
  CHECK(k5.kernel_basis.size() == 4);

  const auto k6 = rank_kernel({2, 6, 2, 3});
  CHECK(k6.kernel_dim == 5);
  CHECK(k6.preimage_count == 32);

  for (auto [q, n, s, r] : {std::tuple{2, 7, 2, 3}, {3, 6, 2, 3}, {2, 6, 3, 4}}) {
    const auto ks = rank_kernel({q, n, s, r});
    CHECK(ks.rank + ks.kernel_dim == binom(n, s));
    for (const auto& v : ks.kernel_basis)
      CHECK(apply_lift({q, n, s, r}, v).is_zero());
  }
}

TEST_CASE("brute-force image census at n=4 matches the kernel dimension") {
  const LiftSpec spec{2, 4, 2, 3};
  const auto ks = rank_kernel(spec);
  std::set<std::uint64_t> images;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto g = apply_lift(spec, from_mask(4, 2, mask));
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
      key |= static_cast<std::uint64_t>(g.values[i]) << i;
    images.insert(key);
  }
  CHECK(images.size() == (1ull << (6 - ks.kernel_dim)));
}

TEST_CASE("membership and fiber size match an exhaustive census at n=4") {
  const LiftSpec spec{2, 4, 2, 3};
  // Count the preimages of every possible target directly.
  std::map<std::uint64_t, std::uint64_t> fiber;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto g = apply_lift(spec, from_mask(4, 2, mask));
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
      key |= static_cast<std::uint64_t>(g.values[i]) << i;
    ++fiber[key];
  }
  for (std::uint64_t key = 0; key < 16; ++key) {
    const auto g = from_mask(4, 3, key);
    const auto f = solve_preimage(spec, g);
    const auto it = fiber.find(key);
    if (it == fiber.end()) {
      CHECK(!f.has_value());
      CHECK(preimage_count(spec, g) == 0);
    } else {
      REQUIRE(f.has_value());
      CHECK(apply_lift(spec, *f) == g);
      CHECK(it->second == 8);  // every fiber has 2^(n-1) elements
      CHECK(preimage_count(spec, g) == 8);
    }
  }
}

TEST_CASE("solve_preimage finds a preimage of the all-ones K_5^(3)") {
  const LiftSpec spec{2, 5, 2, 3};
  const auto ones = constant_coloring(5, 3, 2, 1);
  const auto f = solve_preimage(spec, ones);
  REQUIRE(f.has_value());
  CHECK(apply_lift(spec, *f) == ones);

  // The full preimage set is the particular solution plus the kernel span.
  const auto ks = rank_kernel(spec);
  std::set<std::vector<FieldElement>> preimages;
  for (std::uint64_t mask = 0; mask < (1ull << ks.kernel_dim); ++mask) {
    auto v = *f;
    for (std::size_t b = 0; b < ks.kernel_dim; ++b)
      if (mask >> b & 1u) v = vs_combine(v, ks.kernel_basis[b], 1);
    CHECK(apply_lift(spec, v) == ones);
    preimages.insert(v.values);
  }
  CHECK(preimages.size() == 16);
}

TEST_CASE("a single triple of K_4^(3) has no preimage") {
  // Its total sum is 1, but every image sums to zero since C(2,1) is even.
  const LiftSpec spec{2, 4, 2, 3};
  const auto g = basis_coloring(4, 3, 2, {0, 1, 2});
  CHECK(total_sum(g) == 1);
  CHECK(!solve_preimage(spec, g).has_value());
  CHECK(preimage_count(spec, g) == 0);
}

TEST_CASE("solve_preimage of zero is the zero coloring") {
  const LiftSpec spec{2, 6, 2, 3};
  const auto f = solve_preimage(spec, HyperedgeColoring::zero(6, 3, 2));
  REQUIRE(f.has_value());
  CHECK(f->is_zero());  // free variables pinned to zero

  // Determinism: repeated solves return the identical coloring.
  const auto ones = constant_coloring(6, 3, 2, 1);
  const auto a = solve_preimage(spec, ones);
  const auto b = solve_preimage(spec, ones);
  REQUIRE(a.has_value());
  CHECK(*a == *b);
}

TEST_CASE("preimage counts") {
  const LiftSpec spec{2, 5, 2, 3};
  CHECK(preimage_count(spec, constant_coloring(5, 3, 2, 1)) == 16);
  CHECK(preimage_count({2, 7, 2, 3}, HyperedgeColoring::zero(7, 3, 2)) == 64);
}

TEST_CASE("solve_preimage over an odd prime field") {
  std::mt19937_64 rng(23);
  const LiftSpec spec{3, 6, 2, 3};
  for (int i = 0; i < 10; ++i) {
    const auto f = random_coloring(6, 2, 3, rng);
    const auto g = apply_lift(spec, f);
    const auto back = solve_preimage(spec, g);
    REQUIRE(back.has_value());
    CHECK(apply_lift(spec, *back) == g);
  }
}

TEST_CASE("minimum kernel weight") {
  CHECK(min_kernel_weight({2, 5, 2, 3}) == 4);

  // Independent oracle: scan every source that lifts to zero.
  auto brute = [](const LiftSpec& spec) {
    const int dim = static_cast<int>(binom(spec.n, spec.s));
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t mask = 1; mask < (1ull << dim); ++mask)
      if (apply_lift(spec, from_mask(spec.n, spec.s, mask)).is_zero())
        best = std::min<std::uint64_t>(best, std::popcount(mask));
    return best;
  };
  CHECK(min_kernel_weight({2, 5, 2, 3}) == brute({2, 5, 2, 3}));
  const auto w6 = min_kernel_weight({2, 6, 2, 3});
  CHECK(w6 >= 5);
  CHECK(w6 == brute({2, 6, 2, 3}));

  // (3,4) at n=6: the bound n-r+2 = 4 must hold; the exhaustive scan of
  // that span lives in the min_distance suite.
  CHECK(min_kernel_weight({2, 6, 3, 4}) >= 4);
}

TEST_CASE("kernel span budget") {
  CHECK_THROWS_AS(min_kernel_weight({2, 6, 2, 3}, 8), ResourceError);
}

TEST_CASE("image sums vanish when q divides C(n-s, r-s)") {
  std::mt19937_64 rng(24);
  for (auto [q, n, s, r] : {std::tuple{2, 4, 2, 3}, {3, 5, 2, 3}, {2, 6, 2, 4}, {3, 6, 2, 4}}) {
    REQUIRE(binom(n - s, r - s) % static_cast<std::uint64_t>(q) == 0);
    for (int i = 0; i < 25; ++i) {
      const auto f = random_coloring(n, s, q, rng);
      CHECK(total_sum(apply_lift({q, n, s, r}, f)) == 0);
    }
  }
  // Odd case over F_2: the sum is preserved.
  for (int i = 0; i < 25; ++i) {
    const auto f = random_coloring(5, 2, 2, rng);
    CHECK(total_sum(apply_lift({2, 5, 2, 3}, f)) == total_sum(f));
  }
}

TEST_CASE("complement law branches on the parity of C(r,s)") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 25; ++i) {
    const auto f = random_coloring(7, 2, 2, rng);
    const LiftSpec odd{2, 7, 2, 3};  // C(3,2) = 3
    CHECK(apply_lift(odd, complement(f)) == complement(apply_lift(odd, f)));
    const LiftSpec even{2, 7, 2, 4};  // C(4,2) = 6
    CHECK(apply_lift(even, complement(f)) == apply_lift(even, f));
  }
  for (int i = 0; i < 25; ++i) {
    const auto f = random_coloring(7, 3, 2, rng);
    const LiftSpec even{2, 7, 3, 4};  // C(4,3) = 4
    CHECK(apply_lift(even, complement(f)) == apply_lift(even, f));
  }
}
