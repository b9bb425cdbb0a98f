#include "epset/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "epset/errors.hpp"
#include "tarjan.hpp"

namespace epset {

namespace {

struct TransitionGraph {
  const Dfa& a;
  std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(a.num_states()); }
  std::uint32_t degree(std::uint32_t) const { return a.base(); }
  std::uint32_t successor(std::uint32_t v, std::uint32_t i) const { return a.next(v, i); }
};

void require_complete(const Dfa& a, const char* what) {
  if (!a.is_complete()) throw PreconditionError(std::string(what) + " requires a complete automaton");
}

}  // namespace

std::vector<Component> sccs(const Dfa& a) {
  auto res = detail::tarjan(TransitionGraph{a});
  std::vector<Component> out(res.count);
  for (std::uint32_t c = 0; c < res.count; ++c) {
    out[c].states.assign(res.order.begin() + res.first[c], res.order.begin() + res.first[c + 1]);
    std::sort(out[c].states.begin(), out[c].states.end());
    out[c].nontrivial = res.nontrivial[c] != 0;
  }
  return out;
}

std::vector<State> zero_circuit_states(const Dfa& a) {
  require_complete(a, "zero_circuit_states");
  const std::size_t n = a.num_states();
  // 0 = unvisited, 1 = on the current walk, 2 = settled.
  std::vector<std::uint8_t> colour(n, 0);
  std::vector<State> walk, out;
  for (State start = 0; start < n; ++start) {
    if (colour[start]) continue;
    walk.clear();
    State s = start;
    while (colour[s] == 0) {
      colour[s] = 1;
      walk.push_back(s);
      s = a.next(s, 0);
    }
    if (colour[s] == 1) {
      auto it = std::find(walk.begin(), walk.end(), s);
      out.insert(out.end(), it, walk.end());
    }
    for (State w : walk) colour[w] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Pair graph restricted to unordered pairs {s, t}, s < t. A pair reaches a
// cycle in the ordered-pair graph iff it reaches one here.
struct PairGraph {
  const Dfa& a;

  static std::uint32_t id(State s, State t) {
    if (s > t) std::swap(s, t);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) * (t - 1) / 2 + s);
  }
  static std::pair<State, State> decode(std::uint32_t v) {
    auto t = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * v)) / 2.0);
    while (t * (t - 1) / 2 > v) --t;
    while ((t + 1) * t / 2 <= v) ++t;
    return {static_cast<State>(v - t * (t - 1) / 2), static_cast<State>(t)};
  }

  std::uint32_t num_vertices() const {
    std::uint64_t n = a.num_states();
    return static_cast<std::uint32_t>(n * (n - 1) / 2);
  }
  std::uint32_t degree(std::uint32_t) const { return a.base(); }
  std::uint32_t successor(std::uint32_t v, std::uint32_t digit) const {
    auto [s, t] = decode(v);
    State x = a.next(s, digit), y = a.next(t, digit);
    return x == y ? detail::kNoVertex : id(x, y);
  }
};

}  // namespace

UltEqPartition ult_eq_pairgraph(const Dfa& a) {
  require_complete(a, "ult_eq_pairgraph");
  const std::size_t n = a.num_states();
  if (n > kMaxPairGraphStates)
    throw ResourceError("pair graph refused: " + std::to_string(n) + " states exceeds " + std::to_string(kMaxPairGraphStates));

  PairGraph g{a};
  auto res = detail::tarjan(g);

  // Components complete sinks first, so successors are settled before use.
  constexpr std::size_t kInfinite = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(g.num_vertices(), 0);
  for (std::uint32_t c = 0; c < res.count; ++c) {
    bool bad = res.nontrivial[c] != 0;
    for (std::uint32_t i = res.first[c]; i < res.first[c + 1] && !bad; ++i) {
      std::uint32_t v = res.order[i];
      for (Digit d = 0; d < a.base() && !bad; ++d) {
        std::uint32_t w = g.successor(v, d);
        bad = w != detail::kNoVertex && index[w] == kInfinite;
      }
    }
    for (std::uint32_t i = res.first[c]; i < res.first[c + 1]; ++i) {
      std::uint32_t v = res.order[i];
      if (bad) {
        index[v] = kInfinite;
        continue;
      }
      std::size_t best = 0;
      for (Digit d = 0; d < a.base(); ++d) {
        std::uint32_t w = g.successor(v, d);
        if (w != detail::kNoVertex) best = std::max(best, index[w]);
      }
      index[v] = best + 1;
    }
  }

  auto pair_index = [&](State s, State t) { return s == t ? std::size_t{0} : index[PairGraph::id(s, t)]; };

  UltEqPartition out;
  out.class_of.assign(n, 0);
  for (State s = 0; s < n; ++s) {
    State t = 0;
    while (t < s && pair_index(t, s) == kInfinite) ++t;
    if (t == s) {
      out.class_of[s] = out.num_classes++;
      out.index_of_class.push_back(0);
    } else {
      out.class_of[s] = out.class_of[t];
    }
  }
  for (State s = 0; s < n; ++s)
    for (State t = 0; t < s; ++t)
      if (out.class_of[s] == out.class_of[t]) {
        auto& slot = out.index_of_class[out.class_of[s]];
        slot = std::max(slot, pair_index(s, t));
      }
  return out;
}

namespace {

// Class signatures live in a flat array; the hash set stores class roots and
// hashes/compares them through that array.
struct SignatureTable {
  const std::vector<State>* sig;
  unsigned width;

  std::size_t hash(State root) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    const State* row = sig->data() + static_cast<std::size_t>(root) * width;
    for (unsigned i = 0; i < width; ++i) h = (h ^ row[i]) * 0x100000001b3ULL;
    return h;
  }
  bool equal(State x, State y) const {
    const State* rx = sig->data() + static_cast<std::size_t>(x) * width;
    const State* ry = sig->data() + static_cast<std::size_t>(y) * width;
    return std::equal(rx, rx + width, ry);
  }
};

}  // namespace

UltEqPartition ult_eq_merge(const Dfa& a) {
  require_complete(a, "ult_eq_merge");
  const std::size_t n = a.num_states();
  const unsigned b = a.base();

  std::vector<State> pred_start(n + 1, 0), preds(n * b);
  for (State s = 0; s < n; ++s)
    for (State t : a.successors(s)) ++pred_start[t + 1];
  std::partial_sum(pred_start.begin(), pred_start.end(), pred_start.begin());
  {
    std::vector<State> fill(pred_start.begin(), pred_start.end() - 1);
    for (State s = 0; s < n; ++s)
      for (State t : a.successors(s)) preds[fill[t]++] = s;
  }

  // Classes are linked lists of states headed by their root state.
  std::vector<State> cls(n), next_member(n, kNoState), tail(n), size(n, 1);
  std::iota(cls.begin(), cls.end(), State{0});
  std::iota(tail.begin(), tail.end(), State{0});
  std::vector<std::size_t> last_round(n, 0);

  std::vector<State> sig(n * b);
  SignatureTable st{&sig, b};
  auto hasher = [&st](State r) { return st.hash(r); };
  auto eq = [&st](State x, State y) { return st.equal(x, y); };
  std::unordered_set<State, decltype(hasher), decltype(eq)> table(n, hasher, eq);

  std::vector<State> dirty(n);
  std::iota(dirty.begin(), dirty.end(), State{0});
  std::vector<std::size_t> stamp(n, 0);
  std::vector<std::pair<State, State>> merges;
  std::vector<State> changed;

  for (std::size_t round = 1; !dirty.empty(); ++round) {
    for (State x : dirty) {
      auto it = table.find(x);
      if (it != table.end() && *it == x) table.erase(it);
    }
    for (State x : dirty) {
      State* row = sig.data() + static_cast<std::size_t>(x) * b;
      for (Digit d = 0; d < b; ++d) row[d] = cls[a.next(x, d)];
    }
    merges.clear();
    for (State x : dirty) {
      auto [it, inserted] = table.insert(x);
      if (!inserted) merges.emplace_back(*it, x);
    }

    changed.clear();
    for (auto [y, x] : merges) {
      State ry = cls[y], rx = cls[x];
      if (ry == rx) continue;
      State big = size[ry] >= size[rx] ? ry : rx;
      State small = big == ry ? rx : ry;
      // Both roots carry the same signature; the table must point at `big`.
      if (auto it = table.find(big); *it != big) {
        table.erase(it);
        table.insert(big);
      }
      for (State s = small; s != kNoState; s = next_member[s]) {
        cls[s] = big;
        changed.push_back(s);
      }
      next_member[tail[big]] = small;
      tail[big] = tail[small];
      size[big] += size[small];
      last_round[big] = round;
    }

    dirty.clear();
    for (State s : changed)
      for (State i = pred_start[s]; i < pred_start[s + 1]; ++i) {
        State r = cls[preds[i]];
        if (stamp[r] != round) {
          stamp[r] = round;
          dirty.push_back(r);
        }
      }
  }

  UltEqPartition out;
  out.class_of.assign(n, 0);
  std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
  for (State s = 0; s < n; ++s) {
    State r = cls[s];
    if (id[r] == static_cast<std::size_t>(-1)) {
      id[r] = out.num_classes++;
      out.index_of_class.push_back(last_round[r]);
    }
    out.class_of[s] = id[r];
  }
  return out;
}

std::optional<std::size_t> ult_index(const Dfa& a, State s, State t) {
  require_complete(a, "ult_index");
  if (s >= a.num_states() || t >= a.num_states()) throw PreconditionError("ult_index: state out of range");
  if (s == t) return 0;

  constexpr std::size_t kInProgress = static_cast<std::size_t>(-1);
  auto key = [](State x, State y) {
    if (x > y) std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | y;
  };
  std::unordered_map<std::uint64_t, std::size_t> memo;
  struct Frame {
    State s, t;
    Digit next;
    std::size_t best;
  };
  std::vector<Frame> stack{{s, t, 0, 0}};
  memo[key(s, t)] = kInProgress;
  std::size_t result = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < a.base()) {
      State x = a.next(f.s, f.next), y = a.next(f.t, f.next);
      ++f.next;
      if (x == y) continue;
      auto [it, fresh] = memo.try_emplace(key(x, y), kInProgress);
      if (fresh) {
        stack.push_back({x, y, 0, 0});
      } else if (it->second == kInProgress) {
        return std::nullopt;  // a cycle of distinct pairs is reachable
      } else {
        f.best = std::max(f.best, it->second);
      }
      continue;
    }
    std::size_t value = f.best + 1;
    memo[key(f.s, f.t)] = value;
    stack.pop_back();
    if (stack.empty()) {
      result = value;
    } else {
      stack.back().best = std::max(stack.back().best, value);
    }
  }
  return result;
}

std::optional<PseudoMorphism> find_pseudo_morphism(const Dfa& a, const Dfa& m) {
  if (a.base() != m.base()) throw PreconditionError("find_pseudo_morphism: bases differ");
  require_complete(a, "find_pseudo_morphism");
  require_complete(m, "find_pseudo_morphism");
  PseudoMorphism phi{std::vector<State>(a.num_states(), kNoState)};
  std::deque<State> queue{a.initial()};
  phi.map[a.initial()] = m.initial();
  std::size_t visited = 1;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (Digit d = 0; d < a.base(); ++d) {
      State t = a.next(s, d), image = m.next(phi.map[s], d);
      if (phi.map[t] == kNoState) {
        phi.map[t] = image;
        queue.push_back(t);
        ++visited;
      } else if (phi.map[t] != image) {
        return std::nullopt;
      }
    }
  }
  if (visited != a.num_states()) throw PreconditionError("find_pseudo_morphism requires an accessible automaton");
  return phi;
}

}  // namespace epset
