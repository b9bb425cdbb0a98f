#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epset/dfa.hpp"

namespace epset {

struct Component {
  std::vector<State> states;  // sorted
  bool nontrivial;            // contains a cycle
};

// Tarjan decomposition; components come out in reverse topological order
// (a component precedes every component that can reach it).
std::vector<Component> sccs(const Dfa& a);

// States lying on a cycle of the digit-0 successor function. Sorted.
std::vector<State> zero_circuit_states(const Dfa& a);

// Partition of the states into ultimate-equivalence classes. Classes are
// numbered by their smallest member. index_of_class[c] is the least m such
// that all members reach the same state on every word of length >= m
// (0 for singletons).
struct UltEqPartition {
  std::vector<std::size_t> class_of;
  std::size_t num_classes = 0;
  std::vector<std::size_t> index_of_class;

  friend bool operator==(const UltEqPartition&, const UltEqPartition&) = default;
};

// Reference algorithm on the pair graph, O(b n^2). Refuses n > 4000.
inline constexpr std::size_t kMaxPairGraphStates = 4000;
UltEqPartition ult_eq_pairgraph(const Dfa& a);

// Merges 1-ultimately-equivalent classes round by round until nothing
// changes; only classes whose successors were relabelled are revisited.
UltEqPartition ult_eq_merge(const Dfa& a);

// Least m with s.u = t.u for all |u| >= m; nullopt stands for infinity.
std::optional<std::size_t> ult_index(const Dfa& a, State s, State t);

// Total map Q_A -> Q_M preserving the initial state and every transition
// (finality is not constrained).
struct PseudoMorphism {
  std::vector<State> map;
};

// Breadth-first traversal of `a` carrying the synchronised state of `m`.
// Returns nullopt when a revisit contradicts an earlier assignment.
std::optional<PseudoMorphism> find_pseudo_morphism(const Dfa& a, const Dfa& m);

}  // namespace epset
