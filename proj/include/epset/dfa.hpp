#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace epset {

using State = std::uint32_t;
using Digit = std::uint32_t;
using Value = std::uint64_t;

inline constexpr State kNoState = std::numeric_limits<State>::max();

// Digits, most significant first. The empty word has value 0.
using Word = std::vector<Digit>;

// Deterministic automaton over the digit alphabet {0..b-1}.
//
// States are dense ids 0..n-1 and the transition table is a flat n*b array;
// a missing transition is stored as kNoState. Algorithms take a Dfa by const
// reference and never mutate it.
class Dfa {
 public:
  Dfa(unsigned base, std::size_t num_states, State initial = 0);

  unsigned base() const noexcept { return base_; }
  std::size_t num_states() const noexcept { return final_.size(); }
  State initial() const noexcept { return initial_; }

  State next(State s, Digit a) const { return delta_[index(s, a)]; }
  bool is_final(State s) const { return final_.at(s) != 0; }
  std::vector<State> finals() const;

  // Row of successors of `s`, one entry per digit.
  std::span<const State> successors(State s) const {
    return {delta_.data() + static_cast<std::size_t>(s) * base_, base_};
  }
  std::span<const State> table() const noexcept { return delta_; }

  void set_initial(State s);
  void set_final(State s, bool final = true);
  void set_transition(State src, Digit a, State dst);
  State add_state();

  // Finals carry no meaning (the "A_{?,p,b}" automata). Only recorded for
  // output; every algorithm ignores finality of such automata anyway.
  bool finals_unspecified() const noexcept { return finals_unspecified_; }
  void set_finals_unspecified(bool v) noexcept { finals_unspecified_ = v; }

  bool is_complete() const noexcept;

  // Returns kNoState when the run falls off a missing transition.
  State run(std::span<const Digit> word, State from) const;
  State run(std::span<const Digit> word) const { return run(word, initial_); }
  bool accepts(std::span<const Digit> word) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t index(State s, Digit a) const;

  unsigned base_;
  State initial_;
  std::vector<State> delta_;
  std::vector<std::uint8_t> final_;
  bool finals_unspecified_ = false;
};

Value value_of(std::span<const Digit> word, unsigned base);
Word repr_of(Value n, unsigned base);

// Routes missing transitions to one fresh non-final sink. Complete inputs are
// returned unchanged.
Dfa complete(const Dfa& a);

// Drops unreachable states, keeping the relative order of the others.
Dfa trim_accessible(const Dfa& a);

// Renumbers states in breadth-first order from the initial state, digits
// visited in increasing order. Unreachable states are dropped.
Dfa canonicalize(const Dfa& a);

struct Minimization {
  Dfa dfa;
  // Minimisation morphism: state of the input -> state of `dfa`.
  std::vector<State> state_map;
};

// Hopcroft partition refinement, O(b n log n). The result is canonical
// (see canonicalize). Requires a complete, accessible input.
Minimization minimize(const Dfa& a);

// On a minimal automaton: the initial state loops on 0, i.e. L = 0*L.
bool is_by_value(const Dfa& a_min);

// Bijection preserving initial state, transitions and finality, found by a
// parallel traversal from the initial states.
bool isomorphic(const Dfa& a, const Dfa& b);

}  // namespace epset
