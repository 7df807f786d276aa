#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyperlift/coloring.hpp"
#include "hyperlift/errors.hpp"
#include "hyperlift/linalg.hpp"

using namespace hyperlift;

namespace {

// 2-uniform F_2 indicator of the union of cliques on the given vertex sets.
HyperedgeColoring clique_indicator(int n, const std::vector<VertexSet>& cliques) {
  auto f = HyperedgeColoring::zero(n, 2, 2);
  for (const auto& c : cliques)
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) f.set_value({c[i], c[j]}, 1);
  return f;
}

}  // namespace

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(HyperedgeColoring::zero(3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(HyperedgeColoring::zero(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(HyperedgeColoring::zero(5, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(HyperedgeColoring::zero(65, 2, 2), std::invalid_argument);
}

TEST_CASE("constant and basis colorings") {
  const auto zeros = constant_coloring(5, 3, 2, 0);
  CHECK(zeros.size() == 10);
  CHECK(zeros.is_zero());

  const auto ones = constant_coloring(5, 3, 2, 1);
  CHECK(ones.size() == 10);
  CHECK(total_sum(ones) == 0);  // ten ones over F_2

  const auto twos = constant_coloring(4, 2, 3, 2);
  CHECK(twos.size() == 6);
  for (auto v : twos.values) CHECK(v == 2);
  CHECK_THROWS_AS(constant_coloring(4, 2, 3, 3), std::invalid_argument);

  const auto b1 = basis_coloring(4, 2, 2, {0, 1});
  CHECK(b1.values[0] == 1);
  CHECK(hamming_distance(b1, HyperedgeColoring::zero(4, 2, 2)) == 1);

  const auto b2 = basis_coloring(4, 3, 3, {1, 2, 3});
  CHECK(b2.values[3] == 1);
  CHECK(total_sum(b2) == 1);
  CHECK_THROWS_AS(basis_coloring(4, 3, 3, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(basis_coloring(4, 3, 3, {1, 2, 4}), std::invalid_argument);
}

TEST_CASE("basis colorings are independent") {
  for (int q : {2, 3}) {
    for (int n = 4; n <= 8; ++n) {
      for (int r = 2; r <= std::min(n, 4); ++r) {
        const auto dim = binom(n, r);
        ModMatrix m(dim, dim, q);
        for (std::uint64_t i = 0; i < dim; ++i) {
          const auto b = basis_coloring(n, r, q, colex_unrank(i, r));
          for (std::uint64_t j = 0; j < dim; ++j) m.set(i, j, b.values[j]);
        }
        CHECK(row_reduce(m).rank == dim);
      }
    }
  }
}

TEST_CASE("vs_combine satisfies the vector space laws") {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 5}) {
    const PrimeField F(q);
    const auto zero = HyperedgeColoring::zero(6, 3, q);
    auto add = [](const HyperedgeColoring& x, const HyperedgeColoring& y) {
      return vs_combine(x, y, 1);
    };
    auto scal = [&](FieldElement alpha, const HyperedgeColoring& x) {
      return vs_combine(x, zero, alpha);
    };
    for (int round = 0; round < 5; ++round) {
      const auto a = random_coloring(6, 3, q, rng);
      const auto b = random_coloring(6, 3, q, rng);
      const auto c = random_coloring(6, 3, q, rng);
      CHECK(add(a, b) == add(b, a));
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(scal(1, a) == a);
      CHECK(scal(0, a) == zero);
      for (int alpha = 0; alpha < q; ++alpha) {
        const auto e = static_cast<FieldElement>(alpha);
        CHECK(scal(e, add(a, b)) == add(scal(e, a), scal(e, b)));
        for (int beta = 0; beta < q; ++beta) {
          const auto eb = static_cast<FieldElement>(beta);
          CHECK(scal(e, scal(eb, a)) == scal(F.mul(e, eb), a));
        }
      }
    }
  }
  std::mt19937_64 rng2(11);
  const auto a2 = random_coloring(6, 3, 2, rng2);
  CHECK(vs_combine(a2, a2, 1).is_zero());
  CHECK_THROWS_AS(vs_combine(a2, HyperedgeColoring::zero(5, 3, 2), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(vs_combine(a2, a2, 2), std::invalid_argument);
}

TEST_CASE("complement") {
  const auto zeros = HyperedgeColoring::zero(5, 3, 2);
  const auto ones = constant_coloring(5, 3, 2, 1);
  CHECK(complement(zeros) == ones);

  std::mt19937_64 rng(12);
  const auto f = random_coloring(7, 3, 2, rng);
  CHECK(complement(complement(f)) == f);
  CHECK(hamming_distance(f, complement(f)) == binom(7, 3));
  CHECK_THROWS_AS(complement(random_coloring(5, 2, 3, rng)), std::domain_error);

  // Complement of the K_4 indicator on 5 vertices: exactly the 4 edges at
  // vertex 0.
  const auto k4 = clique_indicator(5, {{1, 2, 3, 4}});
  const auto co = complement(k4);
  std::uint64_t edges = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (co.value_at({u, v})) {
        CHECK(u == 0);
        ++edges;
      }
  CHECK(edges == 4);
}

TEST_CASE("total_sum") {
  CHECK(total_sum(HyperedgeColoring::zero(5, 3, 2)) == 0);
  CHECK(total_sum(constant_coloring(5, 3, 2, 1)) == 0);
  CHECK(total_sum(basis_coloring(5, 3, 2, {0, 1, 2})) == 1);

  std::mt19937_64 rng(13);
  for (int q : {2, 3, 5}) {
    const PrimeField F(q);
    const auto a = random_coloring(6, 3, q, rng);
    const auto b = random_coloring(6, 3, q, rng);
    for (int alpha = 0; alpha < q; ++alpha) {
      const auto e = static_cast<FieldElement>(alpha);
      CHECK(total_sum(vs_combine(a, b, e)) ==
            F.add(F.mul(e, total_sum(a)), total_sum(b)));
    }
  }
}

TEST_CASE("hamming distance") {
  std::mt19937_64 rng(14);
  const auto f = random_coloring(6, 3, 3, rng);
  CHECK(hamming_distance(f, f) == 0);

  // The two disjoint-clique preimages of the all-ones K_5^(3) differ in
  // exactly 4 edges.
  const auto a = clique_indicator(5, {{1, 2, 3, 4}});
  const auto b = clique_indicator(5, {{0, 1}, {2, 3, 4}});
  CHECK(hamming_distance(a, b) == 4);
}

TEST_CASE("coloring text round-trips") {
  const auto zeros = HyperedgeColoring::zero(5, 3, 2);
  CHECK(read_coloring(write_coloring(zeros)) == zeros);

  std::mt19937_64 rng(15);
  for (auto [n, r, q] : {std::tuple{7, 3, 2}, {6, 2, 3}, {9, 4, 5}, {25, 2, 2}}) {
    const auto f = random_coloring(n, r, q, rng);
    const auto text = write_coloring(f);
    CHECK(read_coloring(text) == f);
    CHECK(write_coloring(read_coloring(text)) == text);
  }
}

TEST_CASE("canonical layout: 20 values per line") {
  auto f = HyperedgeColoring::zero(7, 3, 2);  // 35 values
  f.values[20] = 1;
  const auto text = write_coloring(f);
  CHECK(text ==
        "HEC 1\n"
        "n=7 r=3 q=2\n"
        "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
        "1 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
}

TEST_CASE("reader tolerates whitespace and comments") {
  const auto f = read_coloring(
      "# a comment\n"
      "  HEC   1  \n"
      "n=5 r=3 q=2\n"
      "# another comment\n"
      "0 1 0\n\n 1\t0 0\n"
      "0 0 1 1\n");
  CHECK(f.n == 5);
  CHECK(f.values[1] == 1);
  CHECK(f.values[3] == 1);
}

TEST_CASE("reader accepts CRLF line endings") {
  const auto f = read_coloring("HEC 1\r\nn=3 r=2 q=2\r\n0 1 1\r\n");
  CHECK(f.n == 3);
  CHECK(f.values == std::vector<FieldElement>{0, 1, 1});
}

TEST_CASE("reader rejects malformed inputs with positions") {
  CHECK_THROWS_AS(read_coloring(""), ParseError);
  CHECK_THROWS_AS(read_coloring("HEX 1\nn=5 r=3 q=2\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 2\nn=5 r=3 q=2\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 q=2 r=3\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=six\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=2 r=3 q=2\n0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=4\n"), ParseError);

  // 10 values required for (5,3)
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=2\n0 0 0 0 0 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=2\n0 0 0 0 0 0 0 0 0 0 0\n"),
                  ParseError);
  // value out of field range
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=2\n0 0 0 2 0 0 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(read_coloring("HEC 1\nn=5 r=3 q=2\n0 0 0 -1 0 0 0 0 0 0\n"), ParseError);

  try {
    read_coloring("HEC 1\nn=5 r=3 q=2\n0 0 0\n0 2 0 0 0 0 0\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("value_at addresses hyperedges by colex rank") {
  auto f = HyperedgeColoring::zero(5, 3, 3);
  f.set_value({1, 2, 4}, 2);
  CHECK(f.value_at({1, 2, 4}) == 2);
  CHECK(f.values[colex_rank({1, 2, 4})] == 2);
  CHECK_THROWS_AS(f.value_at({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(f.value_at({1, 2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(f.set_value({1, 2, 4}, 3), std::invalid_argument);
}
