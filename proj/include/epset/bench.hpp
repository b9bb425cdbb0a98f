#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "epset/dfa.hpp"

namespace epset {

enum class BenchFamily { Mod, Eventually };

// Random instance of roughly n states. Mod: A_{R,p,b} with p = k * b^2,
// k coprime with b. Eventually: the same periodic part xor a mismatch set
// with maximum 63, scaled so the product has about n states.
Dfa bench_instance(BenchFamily family, std::size_t n, unsigned base, std::uint64_t seed);

struct BenchRow {
  std::size_t n;           // requested size
  std::size_t states;      // actual state count of the instance
  double median_seconds;   // full decide() pipeline
};

std::vector<BenchRow> run_bench(BenchFamily family, std::span<const std::size_t> sizes, unsigned base,
                                unsigned repeats);

// Least-squares slope of log(time) against log(n).
double loglog_slope(std::span<const BenchRow> rows);

void write_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace epset
