#include "epset/modular.hpp"

#include <numeric>
#include <string>

#include "epset/errors.hpp"

namespace epset {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}

Decomposition decompose(std::uint64_t period, std::uint64_t base) {
  if (period == 0) throw PreconditionError("period must be positive");
  if (period > kMaxPeriod) throw PreconditionError("period " + std::to_string(period) + " exceeds 2^31");
  if (base < 2) throw PreconditionError("base must be at least 2");

  Decomposition dec{period, base, period, 1, 0, 1};
  for (std::uint64_t g = std::gcd(dec.coprime_part, base); g > 1; g = std::gcd(dec.coprime_part, base)) {
    dec.coprime_part /= g;
    dec.base_part *= g;
  }
  for (std::uint64_t x = 1 % dec.base_part; x != 0; x = mul_mod(x, base, dec.base_part)) ++dec.exponent;
  if (dec.coprime_part > 1) {
    std::uint64_t x = base % dec.coprime_part;
    for (dec.order = 1; x != 1; ++dec.order) x = mul_mod(x, base, dec.coprime_part);
  }
  return dec;
}

namespace {

// Inverse of x modulo m, gcd(x, m) = 1.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(x % m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((t0 % mm) + mm) % mm);
}

}  // namespace

std::uint64_t crt_pair(std::uint64_t s, std::uint64_t t, const Decomposition& dec) {
  const std::uint64_t k = dec.coprime_part, d = dec.base_part;
  if (s >= k) throw PreconditionError("residue " + std::to_string(s) + " not below k=" + std::to_string(k));
  if (t >= d) throw PreconditionError("residue " + std::to_string(t) + " not below d=" + std::to_string(d));
  if (std::gcd(k, d) != 1) throw PreconditionError("k and d are not coprime");
  // n = s + k * x with k * x = t - s (mod d).
  std::uint64_t diff = (t + d - s % d) % d;
  std::uint64_t x = mul_mod(diff, inverse_mod(k % d, d), d);
  return s + k * x;
}

}  // namespace epset
