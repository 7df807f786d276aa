#pragma once

#include <cstdint>

namespace hyperlift {

using FieldElement = std::uint8_t;

bool is_prime(int q);

/// Arithmetic in the prime field F_q, 2 <= q <= 251.
class PrimeField {
 public:
  explicit PrimeField(int q);

  int order() const { return q_; }

  FieldElement add(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>((a + b) % q_);
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>((a + q_ - b % q_) % q_);
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>((static_cast<int>(a) * b) % q_);
  }
  FieldElement neg(FieldElement a) const {
    return static_cast<FieldElement>((q_ - a % q_) % q_);
  }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Multiplicative inverse; throws std::domain_error on 0.
  FieldElement inv(FieldElement a) const;

 private:
  int q_;
};

/// GF(16) product with elements as bit polynomials reduced by x^4 + x + 1.
std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b);

/// k-th power of the generator 2 (= x), k taken mod 15.
std::uint8_t gf16_exp(int k);

/// Discrete log base 2 of a nonzero element; throws std::domain_error on 0.
int gf16_log(std::uint8_t a);

}  // namespace hyperlift
