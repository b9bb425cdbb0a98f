#pragma once

#include <cstdint>

namespace epset {

// Splits a period against the base: period = coprime_part * base_part, where
// coprime_part is the greatest divisor of the period coprime with the base.
struct Decomposition {
  std::uint64_t period;
  std::uint64_t base;
  std::uint64_t coprime_part;  // k
  std::uint64_t base_part;     // d; every prime factor divides the base
  std::uint64_t exponent;      // j: least j with d | b^j
  std::uint64_t order;         // psi: multiplicative order of b modulo k (1 when k = 1)

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Periods are capped at 2^31.
inline constexpr std::uint64_t kMaxPeriod = std::uint64_t{1} << 31;

Decomposition decompose(std::uint64_t period, std::uint64_t base);

// The unique n < period with n = s (mod k) and n = t (mod d).
std::uint64_t crt_pair(std::uint64_t s, std::uint64_t t, const Decomposition& dec);

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);

}  // namespace epset
