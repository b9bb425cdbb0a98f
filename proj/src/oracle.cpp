#include "epset/oracle.hpp"

#include <algorithm>
#include <string>

#include "epset/errors.hpp"

namespace epset::oracle {

ValueTable enumerate_membership(const Dfa& a, Value n_max) {
  if (n_max > kMaxTableSize)
    throw ResourceError("value table of " + std::to_string(n_max) + " entries exceeds " + std::to_string(kMaxTableSize));
  const unsigned b = a.base();
  ValueTable table{std::vector<bool>(static_cast<std::size_t>(n_max) + 1), n_max};
  // rep(v) = rep(v / b) followed by the digit v mod b, for v >= 1.
  std::vector<State> state(static_cast<std::size_t>(n_max) + 1);
  state[0] = a.initial();
  table.bits[0] = a.is_final(a.initial());
  for (Value v = 1; v <= n_max; ++v) {
    State from = v < b ? a.initial() : state[v / b];
    State s = from == kNoState ? kNoState : a.next(from, static_cast<Digit>(v % b));
    state[v] = s;
    table.bits[v] = s != kNoState && a.is_final(s);
  }
  return table;
}

std::optional<EventualPeriod> find_eventual_period(const ValueTable& table, Value p_max, Value n_max) {
  if (p_max == 0) throw PreconditionError("p_max must be positive");
  if (table.n_max < n_max + 2 * p_max)
    throw PreconditionError("value table too short for box p <= " + std::to_string(p_max) + ", N <= " + std::to_string(n_max));
  for (Value p = 1; p <= p_max; ++p) {
    // Threshold = one past the last violation.
    Value threshold = 0;
    for (Value v = table.n_max - p + 1; v-- > 0;) {
      if (table[v] != table[v + p]) {
        threshold = v + 1;
        break;
      }
    }
    if (threshold <= n_max) return EventualPeriod{p, threshold};
  }
  return std::nullopt;
}

PeriodicParameter proper_parameter_oracle(const ValueTable& table) {
  Value n_box = std::min(kDefaultThresholdBox, table.n_max > 2 * kDefaultPeriodBox ? table.n_max - 2 * kDefaultPeriodBox : 0);
  auto found = find_eventual_period(table, kDefaultPeriodBox, n_box);
  if (!found) throw PreconditionError("no eventual period within the oracle box");
  PeriodicParameter out;
  out.period = found->period;
  for (Value v = found->threshold; v < found->threshold + found->period; ++v)
    if (table[v]) out.remainders.push_back(v % found->period);
  std::sort(out.remainders.begin(), out.remainders.end());
  for (Value v = 0; v < found->threshold; ++v)
    if (table[v] != std::binary_search(out.remainders.begin(), out.remainders.end(), v % found->period))
      out.mismatches.push_back(v);
  return out;
}

}  // namespace epset::oracle
