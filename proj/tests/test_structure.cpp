#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "epset/builders.hpp"
#include "epset/errors.hpp"
#include "epset/modular.hpp"
#include "epset/structure.hpp"
#include "support.hpp"

using namespace epset;

namespace {

// Least m such that every word of length m sends s and t to the same state,
// by propagating the set of pairs reached with words of each length.
std::optional<std::size_t> brute_ult_index(const Dfa& a, State s, State t) {
  std::set<std::pair<State, State>> level{{s, t}};
  const std::size_t n = a.num_states();
  for (std::size_t len = 0; len <= n * n + 1; ++len) {
    bool diagonal = std::all_of(level.begin(), level.end(), [](auto p) { return p.first == p.second; });
    if (diagonal) return len;
    std::set<std::pair<State, State>> next;
    for (auto [x, y] : level)
      if (x != y)
        for (Digit d = 0; d < a.base(); ++d) next.insert({a.next(x, d), a.next(y, d)});
    level = std::move(next);
  }
  return std::nullopt;
}

// Partition from pairwise indices, classes numbered by smallest member.
UltEqPartition brute_partition(const Dfa& a) {
  const std::size_t n = a.num_states();
  UltEqPartition out;
  out.class_of.assign(n, static_cast<std::size_t>(-1));
  for (State s = 0; s < n; ++s) {
    if (out.class_of[s] != static_cast<std::size_t>(-1)) continue;
    std::size_t c = out.num_classes++;
    out.class_of[s] = c;
    out.index_of_class.push_back(0);
    for (State t = s + 1; t < n; ++t) {
      if (auto m = brute_ult_index(a, s, t)) {
        out.class_of[t] = c;
        out.index_of_class[c] = std::max(out.index_of_class[c], *m);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("strongly connected components") {
  auto a12 = sccs(build_mod_automaton(12, std::vector<Value>{5, 7}, 2));
  REQUIRE(a12.size() == 1);
  CHECK(a12[0].states.size() == 12);
  CHECK(a12[0].nontrivial);

  Dfa loop(3, 1);
  for (Digit d = 0; d < 3; ++d) loop.set_transition(0, d, 0);
  auto one = sccs(loop);
  REQUIRE(one.size() == 1);
  CHECK(one[0].nontrivial);

  // Chain 0 -> 1 -> 2 with a self-loop on 2 only.
  Dfa chain(2, 3);
  chain.set_transition(0, 0, 1);
  chain.set_transition(0, 1, 1);
  chain.set_transition(1, 0, 2);
  chain.set_transition(1, 1, 2);
  chain.set_transition(2, 0, 2);
  chain.set_transition(2, 1, 2);
  auto comps = sccs(chain);
  REQUIRE(comps.size() == 3);
  // Reverse topological order: sinks first.
  CHECK(comps[0].states == std::vector<State>{2});
  CHECK(comps[0].nontrivial);
  CHECK_FALSE(comps[1].nontrivial);
  CHECK_FALSE(comps[2].nontrivial);
}

TEST_CASE("zero circuits") {
  CHECK(zero_circuit_states(build_mod_automaton(12, std::vector<Value>{5, 7}, 2)) == std::vector<State>{0, 4, 8});
  CHECK(zero_circuit_states(minimize(build_mod_automaton(40, std::vector<Value>{0, 3}, 2)).dfa).size() == 5);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    unsigned b = 2 + rng() % 9;
    Value p = 1 + rng() % 200;
    Decomposition dec = decompose(p, b);
    std::vector<State> expected;
    for (Value x = 0; x < dec.coprime_part; ++x) expected.push_back(static_cast<State>(x * dec.base_part));
    CHECK(zero_circuit_states(build_mod_automaton(p, std::nullopt, b)) == expected);
  }

  Dfa partial(2, 2);
  CHECK_THROWS_AS(zero_circuit_states(partial), PreconditionError);
}

TEST_CASE("ultimate index examples") {
  Dfa a = build_mod_automaton(12, std::vector<Value>{5, 7}, 2);
  for (State s = 0; s < 12; ++s) CHECK(ult_index(a, s, s) == std::optional<std::size_t>(0));
  // 5 and 11 agree after any single digit: 10 + a on both sides.
  CHECK(ult_index(a, 5, 11) == std::optional<std::size_t>(1));
  CHECK(ult_index(a, 2, 5) == std::optional<std::size_t>(2));
  CHECK(ult_index(a, 0, 1) == std::nullopt);

  Dfa g = build_mod_automaton(3, std::nullopt, 2);
  CHECK(ult_index(g, 0, 1) == std::nullopt);

  CHECK_THROWS_AS(ult_index(a, 0, 12), PreconditionError);
}

TEST_CASE("ultimate index matches brute force") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    Dfa a = testing::random_complete_dfa(1 + rng() % 12, 2 + rng() % 2, rng);
    for (State s = 0; s < a.num_states(); ++s)
      for (State t = 0; t < a.num_states(); ++t) REQUIRE(ult_index(a, s, t) == brute_ult_index(a, s, t));
  }
}

TEST_CASE("partitions of the 12-state example") {
  Dfa a = build_mod_automaton(12, std::vector<Value>{5, 7}, 2);
  UltEqPartition pg = ult_eq_pairgraph(a), mg = ult_eq_merge(a);
  CHECK(pg == mg);
  CHECK(pg.num_classes == 3);
  CHECK(pg.class_of[5] == pg.class_of[11]);
  CHECK(pg.index_of_class[pg.class_of[5]] == 2);
  CHECK(pg.class_of[0] == 0);
  CHECK(pg.class_of[1] == 1);
  CHECK(pg.class_of[2] == 2);

  Dfa g = build_mod_automaton(3, std::nullopt, 2);
  CHECK(ult_eq_pairgraph(g).class_of[0] != ult_eq_pairgraph(g).class_of[1]);
}

TEST_CASE("group automata have discrete partitions") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 1 + rng() % 50;
    unsigned b = 2 + rng() % 3;
    Dfa a(b, n);
    for (Digit d = 0; d < b; ++d) {
      std::vector<State> perm(n);
      std::iota(perm.begin(), perm.end(), State{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (State s = 0; s < n; ++s) a.set_transition(s, d, perm[s]);
    }
    UltEqPartition part = ult_eq_merge(a);
    CHECK(part.num_classes == n);
    CHECK(part == ult_eq_pairgraph(a));
  }
}

TEST_CASE("merge and pair graph agree with the brute-force partition") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    Dfa a = testing::random_complete_dfa(1 + rng() % 10, 2 + rng() % 2, rng);
    UltEqPartition expected = brute_partition(a);
    REQUIRE(ult_eq_pairgraph(a) == expected);
    REQUIRE(ult_eq_merge(a) == expected);
  }
}

TEST_CASE("merge and pair graph agree on larger automata") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    unsigned b = 2 + i % 2;
    std::size_t n = 1 + rng() % 200;
    Dfa a = testing::random_complete_dfa(n, b, rng);
    // Low out-degree variety: funnel some digits into few states so merges happen.
    if (i % 3 == 0)
      for (State s = 0; s < n; ++s) a.set_transition(s, 1, static_cast<State>(rng() % std::max<std::size_t>(1, n / 8)));
    REQUIRE(ult_eq_merge(a) == ult_eq_pairgraph(a));
  }
  for (Value p : {12u, 40u, 96u, 250u})
    for (unsigned b : {2u, 3u, 10u}) {
      Dfa a = build_mod_automaton(p, std::nullopt, b);
      REQUIRE(ult_eq_merge(a) == ult_eq_pairgraph(a));
    }
}

TEST_CASE("partition index is attained by a pair") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    Dfa a = testing::random_complete_dfa(1 + rng() % 30, 2, rng);
    UltEqPartition part = ult_eq_merge(a);
    std::vector<std::size_t> worst(part.num_classes, 0);
    for (State s = 0; s < a.num_states(); ++s)
      for (State t = 0; t < a.num_states(); ++t) {
        auto m = ult_index(a, s, t);
        REQUIRE(m.has_value() == (part.class_of[s] == part.class_of[t]));
        if (m) worst[part.class_of[s]] = std::max(worst[part.class_of[s]], *m);
      }
    CHECK(worst == part.index_of_class);
  }
}

TEST_CASE("ultimate equivalence in modular automata") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    unsigned b = 2 + rng() % 5;
    Value p = 1 + rng() % 120;
    Decomposition dec = decompose(p, b);
    Dfa a = build_mod_automaton(p, std::nullopt, b);
    UltEqPartition part = ult_eq_merge(a);
    CHECK(part.num_classes == dec.coprime_part);
    for (State s = 0; s < p; ++s) {
      CHECK(part.class_of[s] == s % dec.coprime_part);
      CHECK(part.index_of_class[part.class_of[s]] <= dec.exponent);
    }
  }
}

TEST_CASE("index of the minimal 40-state example") {
  Dfa a = minimize(build_mod_automaton(40, std::vector<Value>{0, 3}, 2)).dfa;
  UltEqPartition part = ult_eq_merge(a);
  CHECK(*std::max_element(part.index_of_class.begin(), part.index_of_class.end()) == 3);
  std::size_t worst = 0;
  for (State s = 0; s < a.num_states(); ++s)
    for (State t = 0; t < a.num_states(); ++t)
      if (auto m = ult_index(a, s, t)) worst = std::max(worst, *m);
  CHECK(worst == 3);
}

TEST_CASE("minimisation preserves ultimate equivalence") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) {
    unsigned b = 2 + rng() % 3;
    Value p = 1 + rng() % 60;
    std::vector<Value> r;
    for (Value x = 0; x < p; ++x)
      if (rng() % 2) r.push_back(x);
    Dfa a = build_mod_automaton(p, r, b);
    Minimization min = minimize(a);
    UltEqPartition pa = ult_eq_merge(a), pm = ult_eq_merge(min.dfa);
    for (State s = 0; s < p; ++s)
      for (State t = 0; t < p; ++t)
        if (pa.class_of[s] == pa.class_of[t])
          REQUIRE(pm.class_of[min.state_map[s]] == pm.class_of[min.state_map[t]]);
  }
}

TEST_CASE("pair graph refuses large automata") {
  Dfa big = build_mod_automaton(kMaxPairGraphStates + 1, std::nullopt, 2);
  CHECK_THROWS_AS(ult_eq_pairgraph(big), ResourceError);
  CHECK_NOTHROW(ult_eq_merge(big));
}

TEST_CASE("pseudo-morphisms") {
  Dfa a12 = build_mod_automaton(12, std::vector<Value>{5, 7}, 2);
  Dfa a3 = build_mod_automaton(3, std::nullopt, 2);
  Dfa a4 = build_mod_automaton(4, std::nullopt, 2);

  auto id = find_pseudo_morphism(a12, a12);
  REQUIRE(id);
  for (State s = 0; s < 12; ++s) CHECK(id->map[s] == s);

  auto mod3 = find_pseudo_morphism(a12, a3);
  REQUIRE(mod3);
  for (State s = 0; s < 12; ++s) {
    CHECK(mod3->map[s] == s % 3);
    for (Digit d = 0; d < 2; ++d) CHECK(mod3->map[a12.next(s, d)] == a3.next(mod3->map[s], d));
  }

  CHECK_FALSE(find_pseudo_morphism(a3, a4));
  CHECK_THROWS_AS(find_pseudo_morphism(a12, build_mod_automaton(3, std::nullopt, 3)), PreconditionError);

  Dfa unreachable(2, 2);
  for (Digit d = 0; d < 2; ++d) {
    unreachable.set_transition(0, d, 0);
    unreachable.set_transition(1, d, 0);
  }
  CHECK_THROWS_AS(find_pseudo_morphism(unreachable, build_mod_automaton(1, std::nullopt, 2)), PreconditionError);
}

TEST_CASE("pseudo-morphism exists exactly when words agree") {
  // phi exists iff A.u = A.v implies M.u = M.v; check against words up to length 8.
  std::mt19937_64 rng(73);
  for (int i = 0; i < 60; ++i) {
    Dfa a = trim_accessible(testing::random_complete_dfa(1 + rng() % 8, 2, rng));
    Dfa m = build_mod_automaton(1 + rng() % 4, std::nullopt, 2);
    std::map<State, State> seen;
    bool consistent = true;
    for (std::size_t len = 0; len <= 8 && consistent; ++len)
      for (Value bits = 0; bits < (Value{1} << len) && consistent; ++bits) {
        Word u(len);
        for (std::size_t k = 0; k < len; ++k) u[k] = (bits >> k) & 1;
        auto [it, fresh] = seen.try_emplace(a.run(u), m.run(u));
        if (!fresh && it->second != m.run(u)) consistent = false;
      }
    auto phi = find_pseudo_morphism(a, m);
    CHECK(phi.has_value() == consistent);
    if (phi)
      for (State s = 0; s < a.num_states(); ++s)
        for (Digit d = 0; d < 2; ++d) CHECK(phi->map[a.next(s, d)] == m.next(phi->map[s], d));
  }
}
