#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epset/builders.hpp"
#include "epset/dfa.hpp"

// Brute-force reference implementations. Test and CLI use only; the decision
// pipeline never calls into this header.
namespace epset::oracle {

// bits[v] is set iff the automaton accepts rep(v), for v in [0, n_max].
struct ValueTable {
  std::vector<bool> bits;
  Value n_max = 0;

  bool operator[](Value v) const { return bits[static_cast<std::size_t>(v)]; }
};

inline constexpr Value kMaxTableSize = 10'000'000;
inline constexpr Value kDefaultPeriodBox = 256;
inline constexpr Value kDefaultThresholdBox = 10'000;
inline constexpr Value kDefaultValueBox = 100'000;

ValueTable enumerate_membership(const Dfa& a, Value n_max);

struct EventualPeriod {
  Value period;
  Value threshold;
  friend bool operator==(const EventualPeriod&, const EventualPeriod&) = default;
};

// Smallest p <= p_max, then smallest N <= n_max, with bit(v) == bit(v + p)
// for N <= v <= table.n_max - p. nullopt only certifies the searched box.
std::optional<EventualPeriod> find_eventual_period(const ValueTable& table, Value p_max, Value n_max);

// Proper parameter by exhaustive smallest-period search over the default box.
PeriodicParameter proper_parameter_oracle(const ValueTable& table);

}  // namespace epset::oracle
