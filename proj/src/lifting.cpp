#include "hyperlift/lifting.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperlift/errors.hpp"

namespace hyperlift {

namespace {

std::uint64_t checked_pow(int q, std::size_t e) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (acc > UINT64_MAX / static_cast<std::uint64_t>(q))
      throw std::overflow_error("q^kernel_dim exceeds the 64-bit range");
    acc *= static_cast<std::uint64_t>(q);
  }
  return acc;
}

void check_rows(const LiftSpec& spec, std::uint64_t max_rows) {
  const std::uint64_t rows = binom(spec.n, spec.r);
  if (rows > max_rows)
    throw ResourceError("lift matrix has " + std::to_string(rows) +
                        " rows, above the limit of " + std::to_string(max_rows));
}

void check_source(const LiftSpec& spec, const HyperedgeColoring& f) {
  if (f.n != spec.n || f.r != spec.s || f.q != spec.q)
    throw std::invalid_argument("coloring shape does not match the lift spec source");
}

void check_target(const LiftSpec& spec, const HyperedgeColoring& g) {
  if (g.n != spec.n || g.r != spec.r || g.q != spec.q)
    throw std::invalid_argument("coloring shape does not match the lift spec target");
}

// Enumerates the nonzero entries of the lift matrix: fn(row, col) for every
// pair (e, e') with e' an s-subset of e, rows and columns in colex order.
template <class Fn>
void for_each_lift_entry(const LiftSpec& spec, Fn&& fn) {
  std::vector<int> e(static_cast<std::size_t>(spec.r));
  std::iota(e.begin(), e.end(), 0);
  std::vector<int> p(static_cast<std::size_t>(spec.s));
  std::uint64_t row = 0;
  do {
    std::iota(p.begin(), p.end(), 0);
    do {
      std::uint64_t col = 0;
      for (int j = 0; j < spec.s; ++j)
        col += binom(e[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])], j + 1);
      fn(row, col);
    } while (next_colex_selection(p, spec.r));
    ++row;
  } while (next_colex_selection(e, spec.n));
}

template <class Matrix>
Matrix build_lift(const LiftSpec& spec, Matrix m) {
  for_each_lift_entry(spec, [&](std::uint64_t row, std::uint64_t col) {
    m.set(row, col, 1);
  });
  return m;
}

template <class Matrix>
KernelSummary kernel_from_reduced(const Matrix& m, const RrefSummary& rr,
                                  const LiftSpec& spec) {
  KernelSummary ks;
  ks.rank = rr.rank;
  const std::size_t cols = binom(spec.n, spec.s);
  ks.kernel_dim = cols - rr.rank;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (rr.col_pivot_row[fc] >= 0) continue;
    auto v = HyperedgeColoring::zero(spec.n, spec.s, spec.q);
    v.values[fc] = 1;
    for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr) {
      const auto pc = static_cast<std::size_t>(rr.pivot_cols[pr]);
      const FieldElement mv = m.get(pr, fc);
      if (mv)
        v.values[pc] = static_cast<FieldElement>((spec.q - mv) % spec.q);
    }
    if (!apply_lift(spec, v).is_zero())
      throw std::logic_error("kernel basis vector failed its lift-to-zero check");
    ks.kernel_basis.push_back(std::move(v));
  }
  ks.preimage_count = checked_pow(spec.q, ks.kernel_dim);
  return ks;
}

// Solves M f = g through an augmented reduction; nullopt when inconsistent.
template <class Matrix>
std::optional<HyperedgeColoring> solve_from(Matrix m, const LiftSpec& spec,
                                            const HyperedgeColoring& g) {
  const std::size_t aug = m.cols() - 1;
  for (std::size_t i = 0; i < g.values.size(); ++i)
    if (g.values[i]) m.set(i, aug, g.values[i]);
  const RrefSummary rr = row_reduce(m);
  if (rr.col_pivot_row[aug] >= 0) return std::nullopt;
  auto f = HyperedgeColoring::zero(spec.n, spec.s, spec.q);
  for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
    f.values[static_cast<std::size_t>(rr.pivot_cols[pr])] = m.get(pr, aug);
  return f;
}

}  // namespace

void LiftSpec::validate() const {
  PrimeField check(q);
  (void)check;
  if (!(2 <= s && s < r && r <= n))
    throw std::invalid_argument("lift spec requires 2 <= s < r <= n");
  if (n > kMaxBinomialN)
    throw std::invalid_argument("lift spec requires n <= " +
                                std::to_string(kMaxBinomialN));
}

HyperedgeColoring apply_lift(const LiftSpec& spec, const HyperedgeColoring& f) {
  spec.validate();
  check_source(spec, f);
  auto g = HyperedgeColoring::zero(spec.n, spec.r, spec.q);
  std::vector<int> e(static_cast<std::size_t>(spec.r));
  std::iota(e.begin(), e.end(), 0);
  std::vector<int> p(static_cast<std::size_t>(spec.s));
  std::uint64_t row = 0;
  do {
    std::uint64_t acc = 0;
    std::iota(p.begin(), p.end(), 0);
    do {
      std::uint64_t col = 0;
      for (int j = 0; j < spec.s; ++j)
        col += binom(e[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])], j + 1);
      acc += f.values[col];
      if (acc >= (1ull << 60)) acc %= static_cast<std::uint64_t>(spec.q);
    } while (next_colex_selection(p, spec.r));
    g.values[row++] = static_cast<FieldElement>(acc % static_cast<std::uint64_t>(spec.q));
  } while (next_colex_selection(e, spec.n));
  return g;
}

ModMatrix lift_matrix(const LiftSpec& spec, std::uint64_t max_rows) {
  spec.validate();
  check_rows(spec, max_rows);
  return build_lift(spec, ModMatrix(binom(spec.n, spec.r), binom(spec.n, spec.s), spec.q));
}

KernelSummary rank_kernel(const LiftSpec& spec, std::uint64_t max_rows) {
  spec.validate();
  check_rows(spec, max_rows);
  const std::size_t rows = binom(spec.n, spec.r);
  const std::size_t cols = binom(spec.n, spec.s);
  if (spec.q == 2) {
    auto m = build_lift(spec, Gf2Matrix(rows, cols));
    const auto rr = row_reduce(m);
    return kernel_from_reduced(m, rr, spec);
  }
  auto m = build_lift(spec, ModMatrix(rows, cols, spec.q));
  const auto rr = row_reduce(m);
  return kernel_from_reduced(m, rr, spec);
}

std::optional<HyperedgeColoring> solve_preimage(const LiftSpec& spec,
                                                const HyperedgeColoring& g,
                                                std::uint64_t max_rows) {
  spec.validate();
  check_target(spec, g);
  check_rows(spec, max_rows);
  const std::size_t rows = binom(spec.n, spec.r);
  const std::size_t cols = binom(spec.n, spec.s);
  std::optional<HyperedgeColoring> f;
  if (spec.q == 2)
    f = solve_from(build_lift(spec, Gf2Matrix(rows, cols + 1)), spec, g);
  else
    f = solve_from(build_lift(spec, ModMatrix(rows, cols + 1, spec.q)), spec, g);
  if (f && apply_lift(spec, *f) != g)
    throw std::logic_error("preimage failed its verification lift");
  return f;
}

std::uint64_t preimage_count(const LiftSpec& spec, const HyperedgeColoring& g,
                             std::uint64_t max_rows) {
  if (!solve_preimage(spec, g, max_rows)) return 0;
  return rank_kernel(spec, max_rows).preimage_count;
}

std::uint64_t min_kernel_weight(const LiftSpec& spec, std::uint64_t budget,
                                std::uint64_t max_rows) {
  const KernelSummary ks = rank_kernel(spec, max_rows);
  if (ks.kernel_dim == 0)
    throw std::domain_error("the lift is injective: no nonzero kernel vectors");

  // Span size q^dim, with an early bail instead of overflow.
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < ks.kernel_dim; ++i) {
    if (span > budget / static_cast<std::uint64_t>(spec.q)) {
      span = budget + 1;
      break;
    }
    span *= static_cast<std::uint64_t>(spec.q);
  }
  if (span > budget)
    throw ResourceError(
        "kernel span of q^" + std::to_string(ks.kernel_dim) +
        " vectors exceeds the budget of " + std::to_string(budget) +
        "; raise the budget or reduce n");

  const std::size_t dim = binom(spec.n, spec.s);
  std::vector<FieldElement> current(dim, 0);
  std::vector<int> digits(ks.kernel_dim, 0);
  std::uint64_t best = UINT64_MAX;
  auto add_basis = [&](std::size_t b) {
    const auto& v = ks.kernel_basis[b].values;
    for (std::size_t j = 0; j < dim; ++j)
      current[j] = static_cast<FieldElement>((current[j] + v[j]) % spec.q);
  };
  for (std::uint64_t step = 1; step < span; ++step) {
    // Odometer increment; a wrapping digit has added q copies of its basis
    // vector, which cancel mod q.
    std::size_t d = 0;
    for (;;) {
      add_basis(d);
      if (++digits[d] < spec.q) break;
      digits[d] = 0;
      ++d;
    }
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < dim; ++j) w += current[j] != 0;
    if (w < best) best = w;
  }
  return best;
}

}  // namespace hyperlift
