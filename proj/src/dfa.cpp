#include "epset/dfa.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "epset/errors.hpp"

namespace epset {

Dfa::Dfa(unsigned base, std::size_t num_states, State initial)
    : base_(base), initial_(initial) {
  if (base < 2) throw PreconditionError("base must be at least 2, got " + std::to_string(base));
  if (num_states == 0) throw PreconditionError("an automaton needs at least one state");
  if (num_states >= kNoState) throw ResourceError("too many states");
  if (initial >= num_states) throw PreconditionError("initial state out of range");
  delta_.assign(num_states * base, kNoState);
  final_.assign(num_states, 0);
}

std::size_t Dfa::index(State s, Digit a) const {
  if (s >= num_states()) throw PreconditionError("state " + std::to_string(s) + " out of range");
  if (a >= base_) throw InvalidWordError("digit " + std::to_string(a) + " not below base " + std::to_string(base_));
  return static_cast<std::size_t>(s) * base_ + a;
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (final_[s]) out.push_back(s);
  return out;
}

void Dfa::set_initial(State s) {
  if (s >= num_states()) throw PreconditionError("initial state out of range");
  initial_ = s;
}

void Dfa::set_final(State s, bool final) {
  if (s >= num_states()) throw PreconditionError("final state " + std::to_string(s) + " out of range");
  final_[s] = final ? 1 : 0;
}

void Dfa::set_transition(State src, Digit a, State dst) {
  if (dst >= num_states()) throw PreconditionError("target state " + std::to_string(dst) + " out of range");
  delta_[index(src, a)] = dst;
}

State Dfa::add_state() {
  if (num_states() + 1 >= kNoState) throw ResourceError("too many states");
  delta_.resize(delta_.size() + base_, kNoState);
  final_.push_back(0);
  return static_cast<State>(num_states() - 1);
}

bool Dfa::is_complete() const noexcept {
  return std::find(delta_.begin(), delta_.end(), kNoState) == delta_.end();
}

State Dfa::run(std::span<const Digit> word, State from) const {
  State s = from;
  for (Digit a : word) {
    s = next(s, a);
    if (s == kNoState) return kNoState;
  }
  return s;
}

bool Dfa::accepts(std::span<const Digit> word) const {
  State s = run(word);
  return s != kNoState && final_[s] != 0;
}

Value value_of(std::span<const Digit> word, unsigned base) {
  constexpr Value kMax = std::numeric_limits<Value>::max();
  Value v = 0;
  for (Digit a : word) {
    if (a >= base) throw InvalidWordError("digit " + std::to_string(a) + " not below base " + std::to_string(base));
    if (v > (kMax - a) / base) throw std::overflow_error("word value exceeds 64 bits");
    v = v * base + a;
  }
  return v;
}

Word repr_of(Value n, unsigned base) {
  if (base < 2) throw PreconditionError("base must be at least 2");
  Word w;
  for (; n > 0; n /= base) w.push_back(static_cast<Digit>(n % base));
  std::reverse(w.begin(), w.end());
  return w;
}

Dfa complete(const Dfa& a) {
  if (a.is_complete()) return a;
  Dfa out = a;
  State sink = out.add_state();
  for (State s = 0; s < out.num_states(); ++s)
    for (Digit d = 0; d < out.base(); ++d)
      if (out.next(s, d) == kNoState) out.set_transition(s, d, sink);
  return out;
}

namespace {

std::vector<State> bfs_order(const Dfa& a) {
  std::vector<State> order;
  std::vector<std::uint8_t> seen(a.num_states(), 0);
  order.reserve(a.num_states());
  order.push_back(a.initial());
  seen[a.initial()] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (State t : a.successors(order[head])) {
      if (t != kNoState && !seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  return order;
}

// Builds the automaton induced by `order` (new id i <-> old state order[i]).
Dfa relabel(const Dfa& a, const std::vector<State>& order) {
  std::vector<State> new_id(a.num_states(), kNoState);
  for (State i = 0; i < order.size(); ++i) new_id[order[i]] = i;
  Dfa out(a.base(), order.size(), new_id[a.initial()]);
  out.set_finals_unspecified(a.finals_unspecified());
  for (State i = 0; i < order.size(); ++i) {
    out.set_final(i, a.is_final(order[i]));
    auto row = a.successors(order[i]);
    for (Digit d = 0; d < a.base(); ++d)
      if (row[d] != kNoState) out.set_transition(i, d, new_id[row[d]]);
  }
  return out;
}

}  // namespace

Dfa trim_accessible(const Dfa& a) {
  std::vector<State> order = bfs_order(a);
  if (order.size() == a.num_states()) return a;
  std::sort(order.begin(), order.end());
  return relabel(a, order);
}

Dfa canonicalize(const Dfa& a) { return relabel(a, bfs_order(a)); }

namespace {

// Refinable partition over 0..n-1 with in-block marking.
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), pos_(n), block_of_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), State{0});
    std::iota(pos_.begin(), pos_.end(), State{0});
    if (n > 0) blocks_.push_back({0, static_cast<State>(n), 0});
  }

  std::size_t num_blocks() const { return blocks_.size(); }
  State block_of(State s) const { return block_of_[s]; }
  State size(State b) const { return blocks_[b].end - blocks_[b].begin; }
  std::span<const State> members(State b) const {
    return {elems_.data() + blocks_[b].begin, elems_.data() + blocks_[b].end};
  }

  // Returns true the first time a block receives a mark since the last split.
  bool mark(State s) {
    Block& blk = blocks_[block_of_[s]];
    State p = pos_[s];
    if (p < blk.begin + blk.marked) return false;
    bool first = blk.marked == 0;
    State q = blk.begin + blk.marked;
    std::swap(elems_[p], elems_[q]);
    pos_[elems_[p]] = p;
    pos_[elems_[q]] = q;
    ++blk.marked;
    return first;
  }

  // Splits off the marked part of `b` as a new block. Returns the new block
  // id, or kNoState when every element (or none) was marked.
  State split(State b) {
    Block& blk = blocks_[b];
    State marked = blk.marked;
    blk.marked = 0;
    if (marked == 0 || marked == blk.end - blk.begin) return kNoState;
    State id = static_cast<State>(blocks_.size());
    Block fresh{blk.begin, blk.begin + marked, 0};
    blk.begin += marked;
    for (State p = fresh.begin; p < fresh.end; ++p) block_of_[elems_[p]] = id;
    blocks_.push_back(fresh);
    return id;
  }

 private:
  struct Block {
    State begin, end, marked;
  };
  std::vector<State> elems_, pos_, block_of_;
  std::vector<Block> blocks_;
};

}  // namespace

Minimization minimize(const Dfa& a) {
  if (!a.is_complete()) throw PreconditionError("minimize requires a complete automaton");
  const std::size_t n = a.num_states();
  const unsigned b = a.base();
  if (bfs_order(a).size() != n) throw PreconditionError("minimize requires an accessible automaton");

  // Predecessor lists per digit, CSR layout: pred_start[d*(n+1) + t].
  std::vector<State> pred_start(static_cast<std::size_t>(b) * (n + 1), 0);
  std::vector<State> preds(n * b);
  for (State s = 0; s < n; ++s)
    for (Digit d = 0; d < b; ++d) ++pred_start[d * (n + 1) + a.next(s, d) + 1];
  for (Digit d = 0; d < b; ++d) {
    State* row = pred_start.data() + d * (n + 1);
    std::partial_sum(row, row + n + 1, row);
    for (std::size_t t = 0; t <= n; ++t) row[t] += static_cast<State>(d * n);
  }
  {
    std::vector<State> fill(pred_start);
    for (State s = 0; s < n; ++s)
      for (Digit d = 0; d < b; ++d) preds[fill[d * (n + 1) + a.next(s, d)]++] = s;
  }

  Partition part(n);
  for (State s = 0; s < n; ++s)
    if (a.is_final(s)) part.mark(s);
  std::vector<State> worklist;
  std::vector<std::uint8_t> in_worklist;
  if (State fresh = part.split(0); fresh != kNoState) {
    worklist.push_back(part.size(fresh) <= part.size(0) ? fresh : 0);
  } else {
    worklist.push_back(0);
  }
  in_worklist.assign(part.num_blocks(), 0);
  in_worklist[worklist.back()] = 1;

  std::vector<State> splitter;
  std::vector<State> touched;
  while (!worklist.empty()) {
    State c = worklist.back();
    worklist.pop_back();
    in_worklist[c] = 0;
    auto mem = part.members(c);
    splitter.assign(mem.begin(), mem.end());
    for (Digit d = 0; d < b; ++d) {
      touched.clear();
      for (State t : splitter) {
        const State* row = pred_start.data() + d * (n + 1);
        for (State i = row[t]; i < row[t + 1]; ++i) {
          State q = preds[i];
          if (part.mark(q)) touched.push_back(part.block_of(q));
        }
      }
      for (State blk : touched) {
        State fresh = part.split(blk);
        if (fresh == kNoState) continue;
        in_worklist.push_back(0);
        if (in_worklist[blk]) {
          worklist.push_back(fresh);
          in_worklist[fresh] = 1;
        } else {
          State smaller = part.size(fresh) <= part.size(blk) ? fresh : blk;
          worklist.push_back(smaller);
          in_worklist[smaller] = 1;
        }
      }
    }
  }

  // Quotient, then renumber classes canonically.
  const std::size_t classes = part.num_blocks();
  Dfa quotient(b, classes, part.block_of(a.initial()));
  for (State blk = 0; blk < classes; ++blk) {
    State rep = part.members(blk)[0];
    quotient.set_final(blk, a.is_final(rep));
    for (Digit d = 0; d < b; ++d) quotient.set_transition(blk, d, part.block_of(a.next(rep, d)));
  }
  std::vector<State> order = bfs_order(quotient);
  std::vector<State> new_id(classes);
  for (State i = 0; i < order.size(); ++i) new_id[order[i]] = i;
  Minimization result{relabel(quotient, order), std::vector<State>(n)};
  for (State s = 0; s < n; ++s) result.state_map[s] = new_id[part.block_of(s)];
  return result;
}

bool is_by_value(const Dfa& a_min) {
  State s = a_min.next(a_min.initial(), 0);
  return s == a_min.initial();
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (a.base() != b.base() || a.num_states() != b.num_states()) return false;
  std::vector<State> fwd(a.num_states(), kNoState), back(b.num_states(), kNoState);
  std::deque<State> queue{a.initial()};
  fwd[a.initial()] = b.initial();
  back[b.initial()] = a.initial();
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    State t = fwd[s];
    if (a.is_final(s) != b.is_final(t)) return false;
    for (Digit d = 0; d < a.base(); ++d) {
      State s2 = a.next(s, d), t2 = b.next(t, d);
      if ((s2 == kNoState) != (t2 == kNoState)) return false;
      if (s2 == kNoState) continue;
      if (fwd[s2] == kNoState && back[t2] == kNoState) {
        fwd[s2] = t2;
        back[t2] = s2;
        queue.push_back(s2);
      } else if (fwd[s2] != t2 || back[t2] != s2) {
        return false;
      }
    }
  }
  // Every state must have been matched: both sides accessible and equal in size.
  return std::find(fwd.begin(), fwd.end(), kNoState) == fwd.end();
}

}  // namespace epset
