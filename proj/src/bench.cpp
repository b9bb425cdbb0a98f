#include "epset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "epset/builders.hpp"
#include "epset/decide.hpp"
#include "epset/errors.hpp"

namespace epset {

namespace {

PeriodicParameter random_periodic_part(std::size_t target_states, unsigned base, std::mt19937_64& rng) {
  const Value d = Value{base} * base;
  Value k = std::max<Value>(1, target_states / d);
  while (std::gcd<Value, Value>(k, base) != 1) ++k;
  PeriodicParameter param;
  param.period = k * d;
  std::bernoulli_distribution coin(0.5);
  for (Value r = 0; r < param.period; ++r)
    if (coin(rng)) param.remainders.push_back(r);
  return param;
}

}  // namespace

Dfa bench_instance(BenchFamily family, std::size_t n, unsigned base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (family == BenchFamily::Mod) return build_eventually_periodic_automaton(random_periodic_part(n, base, rng), base);
  constexpr Value kTop = 63;
  PeriodicParameter param = random_periodic_part(std::max<std::size_t>(1, n / (kTop + 2)), base, rng);
  std::bernoulli_distribution coin(0.5);
  for (Value v = 0; v < kTop; ++v)
    if (coin(rng)) param.mismatches.push_back(v);
  param.mismatches.push_back(kTop);
  return build_eventually_periodic_automaton(param, base);
}

std::vector<BenchRow> run_bench(BenchFamily family, std::span<const std::size_t> sizes, unsigned base,
                                unsigned repeats) {
  if (repeats == 0) throw PreconditionError("--repeats must be positive");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw PreconditionError("--sizes must be ascending");
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    Dfa instance = bench_instance(family, n, base, 0x5eed + n);
    std::vector<double> times;
    for (unsigned r = 0; r < repeats; ++r) {
      auto start = std::chrono::steady_clock::now();
      Decision d = decide(instance);
      auto stop = std::chrono::steady_clock::now();
      if (!d.periodic()) throw ContractError("bench instance was not recognised as periodic");
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    double median = times.size() % 2 ? times[times.size() / 2]
                                     : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    rows.push_back({n, instance.num_states(), median});
  }
  return rows;
}

double loglog_slope(std::span<const BenchRow> rows) {
  if (rows.size() < 2) throw PreconditionError("slope needs at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    double x = std::log(static_cast<double>(r.states)), y = std::log(r.median_seconds);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  double n = static_cast<double>(rows.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,states,median_seconds\n";
  for (const BenchRow& r : rows) out << r.n << ',' << r.states << ',' << r.median_seconds << '\n';
}

}  // namespace epset
