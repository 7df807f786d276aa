#include "hyperlift/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hyperlift {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int q) : q_(q) {
  if (q < 2 || q > 251 || !is_prime(q))
    throw std::invalid_argument("field order must be a prime in [2, 251], got " +
                                std::to_string(q));
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  std::uint64_t base = a % q_;
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % static_cast<std::uint64_t>(q_);
    base = base * base % static_cast<std::uint64_t>(q_);
    e >>= 1;
  }
  return static_cast<FieldElement>(acc);
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b) {
  unsigned acc = 0;
  const unsigned aa = a & 0xFu;
  const unsigned bb = b & 0xFu;
  for (int i = 0; i < 4; ++i)
    if (bb >> i & 1u) acc ^= aa << i;
  for (int i = 7; i >= 4; --i)
    if (acc >> i & 1u) acc ^= 0b10011u << (i - 4);  // x^4 + x + 1
  return static_cast<std::uint8_t>(acc & 0xFu);
}

namespace {

struct Gf16Tables {
  std::array<std::uint8_t, 15> exp{};
  std::array<int, 16> log{};
  Gf16Tables() {
    log.fill(-1);
    std::uint8_t v = 1;
    for (int k = 0; k < 15; ++k) {
      exp[static_cast<std::size_t>(k)] = v;
      log[v] = k;
      v = gf16_mul(v, 2);
    }
  }
};

const Gf16Tables& gf16_tables() {
  static const Gf16Tables t;
  return t;
}

}  // namespace

std::uint8_t gf16_exp(int k) {
  int m = k % 15;
  if (m < 0) m += 15;
  return gf16_tables().exp[static_cast<std::size_t>(m)];
}

int gf16_log(std::uint8_t a) {
  if ((a & 0xFu) == 0) throw std::domain_error("log of zero in GF(16)");
  return gf16_tables().log[a & 0xFu];
}

}  // namespace hyperlift
