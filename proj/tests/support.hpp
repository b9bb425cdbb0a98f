#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "epset/builders.hpp"
#include "epset/dfa.hpp"
#include "epset/oracle.hpp"

namespace epset::testing {

inline Dfa random_complete_dfa(std::size_t n, unsigned base, std::mt19937_64& rng) {
  Dfa a(base, n, 0);
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::bernoulli_distribution coin(0.5);
  for (State s = 0; s < n; ++s) {
    a.set_final(s, coin(rng));
    for (Digit d = 0; d < base; ++d) a.set_transition(s, d, pick(rng));
  }
  return a;
}

// Partial automaton: each transition is present with probability `density`.
inline Dfa random_partial_dfa(std::size_t n, unsigned base, double density, std::mt19937_64& rng) {
  Dfa a(base, n, 0);
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::bernoulli_distribution coin(0.5), present(density);
  for (State s = 0; s < n; ++s) {
    a.set_final(s, coin(rng));
    for (Digit d = 0; d < base; ++d)
      if (present(rng)) a.set_transition(s, d, pick(rng));
  }
  return a;
}

// Same automaton with states permuted; the initial state moves too.
inline Dfa shuffled(const Dfa& a, std::mt19937_64& rng) {
  std::vector<State> perm(a.num_states());
  std::iota(perm.begin(), perm.end(), State{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Dfa out(a.base(), a.num_states(), perm[a.initial()]);
  for (State s = 0; s < a.num_states(); ++s) {
    out.set_final(perm[s], a.is_final(s));
    for (Digit d = 0; d < a.base(); ++d)
      if (State t = a.next(s, d); t != kNoState) out.set_transition(perm[s], d, perm[t]);
  }
  return out;
}

inline Word random_word(std::size_t max_len, unsigned base, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Digit> digit(0, base - 1);
  Word w(len(rng));
  for (Digit& d : w) d = digit(rng);
  return w;
}

// 0*10*: the powers of the base.
inline Dfa powers_of_base_dfa(unsigned base) {
  Dfa a(base, 3, 0);
  const State start = 0, one = 1, sink = 2;
  a.set_final(one);
  for (Digit d = 0; d < base; ++d) {
    a.set_transition(start, d, d == 0 ? start : d == 1 ? one : sink);
    a.set_transition(one, d, d == 0 ? one : sink);
    a.set_transition(sink, d, sink);
  }
  return a;
}

// Binary representations with an even number of 1s (the Thue-Morse set).
inline Dfa even_ones_dfa() {
  Dfa a(2, 2, 0);
  a.set_final(0);
  a.set_transition(0, 0, 0);
  a.set_transition(0, 1, 1);
  a.set_transition(1, 0, 1);
  a.set_transition(1, 1, 0);
  return a;
}

struct RandomParameterSpec {
  Value max_period;
  Value max_mismatch;  // mismatches drawn from [0, max_mismatch]
  bool impure;
};

// Random parameter that is certified proper: the brute-force oracle must
// recover exactly the same triple from the built automaton.
inline PeriodicParameter random_proper_parameter(const RandomParameterSpec& spec, unsigned base, std::mt19937_64& rng) {
  std::uniform_int_distribution<Value> period(1, spec.max_period);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    PeriodicParameter p;
    p.period = period(rng);
    for (Value r = 0; r < p.period; ++r)
      if (coin(rng)) p.remainders.push_back(r);
    if (spec.impure) {
      std::uniform_int_distribution<Value> count(1, 5), value(0, spec.max_mismatch);
      for (Value i = count(rng); i > 0; --i) p.mismatches.push_back(value(rng));
      std::sort(p.mismatches.begin(), p.mismatches.end());
      p.mismatches.erase(std::unique(p.mismatches.begin(), p.mismatches.end()), p.mismatches.end());
    }
    auto table = oracle::enumerate_membership(build_eventually_periodic_automaton(p, base), oracle::kDefaultValueBox);
    if (oracle::proper_parameter_oracle(table) == p) return p;
  }
}

}  // namespace epset::testing
