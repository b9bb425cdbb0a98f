#include "epset/builders.hpp"

#include <algorithm>
#include <string>

#include "epset/errors.hpp"
#include "epset/modular.hpp"

namespace epset {

bool PeriodicParameter::contains(Value v) const {
  bool periodic = std::binary_search(remainders.begin(), remainders.end(), v % period);
  bool mismatch = std::binary_search(mismatches.begin(), mismatches.end(), v);
  return periodic != mismatch;
}

Dfa build_mod_automaton(Value period, const std::optional<std::vector<Value>>& remainders, unsigned base) {
  if (period == 0) throw PreconditionError("period must be positive");
  if (period > kMaxPeriod) throw PreconditionError("period " + std::to_string(period) + " exceeds 2^31");
  Dfa a(base, static_cast<std::size_t>(period), 0);
  for (Value n = 0; n < period; ++n)
    for (Digit d = 0; d < base; ++d)
      a.set_transition(static_cast<State>(n), d, static_cast<State>((mul_mod(n, base, period) + d) % period));
  if (remainders) {
    for (Value r : *remainders) {
      if (r >= period) throw PreconditionError("remainder " + std::to_string(r) + " not below period " + std::to_string(period));
      a.set_final(static_cast<State>(r));
    }
  } else {
    a.set_finals_unspecified(true);
  }
  return a;
}

Dfa build_mismatch_automaton(const std::vector<Value>& mismatches, unsigned base) {
  if (mismatches.empty()) throw PreconditionError("mismatch set must be non-empty");
  const Value top = *std::max_element(mismatches.begin(), mismatches.end());
  if (top + 2 >= kNoState) throw ResourceError("largest mismatch too big for an explicit automaton");
  const State sink = static_cast<State>(top + 1);
  Dfa a(base, top + 2, 0);
  for (Value i = 0; i <= top; ++i) {
    for (Digit d = 0; d < base; ++d) {
      Value next = i * base + d;
      a.set_transition(static_cast<State>(i), d, next <= top ? static_cast<State>(next) : sink);
    }
  }
  for (Digit d = 0; d < base; ++d) a.set_transition(sink, d, sink);
  for (Value v : mismatches) a.set_final(static_cast<State>(v));
  return a;
}

Dfa xor_product(const Dfa& a, const Dfa& b) {
  if (a.base() != b.base()) throw PreconditionError("xor_product: bases differ");
  if (!a.is_complete() || !b.is_complete()) throw PreconditionError("xor_product requires complete operands");
  const std::size_t nb = b.num_states();
  const std::size_t n = a.num_states() * nb;
  if (n >= kNoState) throw ResourceError("product automaton too large");
  auto id = [nb](State x, State y) { return static_cast<State>(x * nb + y); };
  Dfa out(a.base(), n, id(a.initial(), b.initial()));
  for (State x = 0; x < a.num_states(); ++x) {
    for (State y = 0; y < nb; ++y) {
      out.set_final(id(x, y), a.is_final(x) != b.is_final(y));
      for (Digit d = 0; d < a.base(); ++d) out.set_transition(id(x, y), d, id(a.next(x, d), b.next(y, d)));
    }
  }
  return out;
}

Dfa build_eventually_periodic_automaton(const PeriodicParameter& param, unsigned base) {
  Dfa periodic = build_mod_automaton(param.period, param.remainders, base);
  if (param.mismatches.empty()) return periodic;
  return xor_product(periodic, build_mismatch_automaton(param.mismatches, base));
}

}  // namespace epset
