#pragma once

#include <optional>
#include <vector>

#include "epset/dfa.hpp"

namespace epset {

// Denotes S = (R + pN) xor I. The proper parameter of S is the one with the
// smallest positive period; finite sets use (1, {}, S).
struct PeriodicParameter {
  Value period = 1;
  std::vector<Value> remainders;  // sorted, each < period
  std::vector<Value> mismatches;  // sorted, finite

  bool contains(Value v) const;

  friend bool operator==(const PeriodicParameter&, const PeriodicParameter&) = default;
};

// States Z/pZ, initial 0, n --a--> (n*b + a) mod p, finals R. With R left
// unset the finals are empty and marked unspecified.
Dfa build_mod_automaton(Value period, const std::optional<std::vector<Value>>& remainders, unsigned base);

// States 0..max(I) plus an absorbing sink (the last state), initial 0,
// i --a--> i*b + a while that stays <= max(I). Accepts exactly val^-1(I).
Dfa build_mismatch_automaton(const std::vector<Value>& mismatches, unsigned base);

// Product automaton accepting the words accepted by exactly one operand.
// State (x, y) has index x * |Q_B| + y.
Dfa xor_product(const Dfa& a, const Dfa& b);

Dfa build_eventually_periodic_automaton(const PeriodicParameter& param, unsigned base);

}  // namespace epset
