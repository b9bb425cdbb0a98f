#include "epset/decide.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "epset/errors.hpp"

namespace epset {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::PurelyPeriodic: return "purely-periodic";
    case Classification::ImpurelyPeriodic: return "impurely-periodic";
    case Classification::NotEventuallyPeriodic: return "not-eventually-periodic";
    case Classification::NotByValue: return "not-by-value";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::NotByValue: return "not-by-value";
    case Reason::ZeroCircuitCountNotCoprime: return "zero-circuit-count-not-coprime";
    case Reason::InitialStateShape: return "initial-state-shape";
    case Reason::NoPseudoMorphism: return "no-pseudo-morphism";
    case Reason::RefinementFails: return "refinement-fails";
    case Reason::ParameterTooLarge: return "parameter-too-large";
  }
  return "?";
}

namespace {

std::vector<Value> prime_factors(Value n) {
  std::vector<Value> out;
  for (Value p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ell * b^m, or nullopt once it passes kMaxCoarsePeriod.
std::optional<Value> coarse_period(std::size_t ell, unsigned base, std::size_t m) {
  Value p = ell;
  for (std::size_t i = 0; i < m; ++i) {
    p *= base;
    if (p > kMaxCoarsePeriod) return std::nullopt;
  }
  if (p > kMaxCoarsePeriod) return std::nullopt;
  return p;
}

Decision negative(std::size_t ell, Reason r) {
  Decision d;
  d.classification = Classification::NotEventuallyPeriodic;
  d.ell = ell;
  d.reason = r;
  return d;
}

// Checks that the classes of `phi` (optionally ignoring one state) each lie
// inside a single ultimate-equivalence class.
bool refines(const PseudoMorphism& phi, std::size_t ell, const UltEqPartition& part, State skip) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of_image(ell, kUnset);
  for (State s = 0; s < phi.map.size(); ++s) {
    if (s == skip) continue;
    std::size_t& slot = class_of_image[phi.map[s]];
    if (slot == kUnset) {
      slot = part.class_of[s];
    } else if (slot != part.class_of[s]) {
      return false;
    }
  }
  return true;
}

// Shared tail of both tests: pseudo-morphism, refinement, extraction.
Decision finish(const Dfa& a_min, std::size_t ell, State skip, Classification positive) {
  Dfa target = build_mod_automaton(ell, std::nullopt, a_min.base());
  auto phi = find_pseudo_morphism(a_min, target);
  if (!phi) return negative(ell, Reason::NoPseudoMorphism);
  UltEqPartition part = ult_eq_merge(a_min);
  if (!refines(*phi, ell, part, skip)) return negative(ell, Reason::RefinementFails);

  Decision d;
  d.classification = positive;
  d.ell = ell;
  d.m = part.index_of_class.empty() ? 0 : *std::max_element(part.index_of_class.begin(), part.index_of_class.end());
  try {
    d.param = extract_parameter(a_min, ell, *phi, part);
  } catch (const ResourceError&) {
    d.reason = Reason::ParameterTooLarge;
  }
  return d;
}

int stage(Reason r) { return static_cast<int>(r); }

}  // namespace

Decision decide_purely_periodic(const Dfa& a_min) {
  if (!a_min.is_complete()) throw PreconditionError("decide_purely_periodic requires a complete automaton");
  if (!is_by_value(a_min)) throw PreconditionError("decide_purely_periodic requires a 0-loop on the initial state");

  const std::size_t ell = zero_circuit_states(a_min).size();
  if (std::gcd<std::size_t, std::size_t>(ell, a_min.base()) != 1) return negative(ell, Reason::ZeroCircuitCountNotCoprime);
  Decision d = finish(a_min, ell, kNoState, Classification::PurelyPeriodic);
  if (d.param && !d.param->mismatches.empty())
    throw ContractError("purely periodic test produced a non-empty mismatch set");
  return d;
}

Decision decide_impurely_periodic(const Dfa& a_min) {
  if (!a_min.is_complete()) throw PreconditionError("decide_impurely_periodic requires a complete automaton");

  const std::size_t on_circuits = zero_circuit_states(a_min).size();
  const std::size_t ell = on_circuits - 1;
  if (ell == 0 || std::gcd<std::size_t, std::size_t>(ell, a_min.base()) != 1)
    return negative(ell, Reason::ZeroCircuitCountNotCoprime);

  // The initial state loops on 0 and has no other incoming transition.
  const State init = a_min.initial();
  for (State s = 0; s < a_min.num_states(); ++s) {
    auto row = a_min.successors(s);
    for (Digit d = 0; d < a_min.base(); ++d) {
      bool self_loop = s == init && d == 0;
      if ((row[d] == init) != self_loop) return negative(ell, Reason::InitialStateShape);
    }
  }

  Decision d = finish(a_min, ell, init, Classification::ImpurelyPeriodic);
  if (d.param && d.param->mismatches.empty())
    throw ContractError("impurely periodic test produced an empty mismatch set");
  return d;
}

Decision decide(const Dfa& a) {
  Dfa a_min = minimize(trim_accessible(complete(a))).dfa;
  if (!is_by_value(a_min)) {
    Decision d;
    d.classification = Classification::NotByValue;
    d.by_value = false;
    d.reason = Reason::NotByValue;
    return d;
  }
  Decision pure = decide_purely_periodic(a_min);
  if (pure.periodic()) return pure;
  Decision impure = decide_impurely_periodic(a_min);
  if (impure.periodic()) return impure;
  return stage(*impure.reason) > stage(*pure.reason) ? impure : pure;
}

PeriodicParameter extract_parameter(const Dfa& a_min, std::size_t ell, const PseudoMorphism& phi,
                                    const UltEqPartition& part) {
  if (phi.map.size() != a_min.num_states() || part.class_of.size() != a_min.num_states())
    throw ContractError("extract_parameter: morphism or partition does not match the automaton");
  if (!is_by_value(a_min)) throw ContractError("extract_parameter: initial state lacks its 0-loop");
  const std::size_t m =
      part.index_of_class.empty() ? 0 : *std::max_element(part.index_of_class.begin(), part.index_of_class.end());
  auto period = coarse_period(ell, a_min.base(), m);
  if (!period) throw ResourceError("coarse period ell*b^m exceeds the enumeration limit");

  // Runs of rep(v) for v < limit. Thanks to the 0-loop on the initial state,
  // state(v) = state(v / b) . (v mod b) for every v >= 0.
  const Value coarse = *period;
  const Value bound = 2 * coarse;
  const Value limit = bound + 2 * coarse;
  const unsigned b = a_min.base();
  std::vector<State> state(static_cast<std::size_t>(limit / b + 1));
  std::vector<bool> accepted(static_cast<std::size_t>(limit));
  state[0] = a_min.initial();
  accepted[0] = a_min.is_final(a_min.initial());
  for (Value v = 1; v < limit; ++v) {
    State s = a_min.next(state[v / b], static_cast<Digit>(v % b));
    if (v < state.size()) state[v] = s;
    accepted[v] = a_min.is_final(s);
  }
  return reduce_to_proper(coarse, [&](Value v) { return static_cast<bool>(accepted[v]); }, bound);
}

PeriodicParameter reduce_to_proper(Value coarse_period, const std::function<bool(Value)>& member, Value bound) {
  if (coarse_period == 0) throw PreconditionError("reduce_to_proper: period must be positive");
  const Value P = coarse_period;
  std::vector<bool> window(static_cast<std::size_t>(P));
  for (Value i = 0; i < P; ++i) window[i] = member(bound + i);
  for (Value i = 0; i < P; ++i)
    if (member(bound + P + i) != window[i])
      throw ContractError("reduce_to_proper: membership is not periodic with period " + std::to_string(P));

  auto has_period = [&](Value q) {
    for (Value i = 0; i < P; ++i)
      if (window[i] != window[(i + q) % P]) return false;
    return true;
  };
  // Periods of the cyclic window that divide P are closed under gcd, so
  // stripping prime factors greedily reaches the least one.
  Value q = P;
  for (Value r : prime_factors(P))
    while (q % r == 0 && has_period(q / r)) q /= r;

  PeriodicParameter out;
  out.period = q;
  for (Value i = 0; i < q; ++i)
    if (window[i]) out.remainders.push_back((bound + i) % q);
  std::sort(out.remainders.begin(), out.remainders.end());
  for (Value v = 0; v < bound; ++v)
    if (member(v) != std::binary_search(out.remainders.begin(), out.remainders.end(), v % q))
      out.mismatches.push_back(v);
  return out;
}

std::string to_json(const Decision& d) {
  nlohmann::ordered_json j;
  j["by_value"] = d.by_value;
  j["classification"] = std::string(to_string(d.classification));
  if (d.param) {
    j["period"] = d.param->period;
    j["remainders"] = d.param->remainders;
    j["mismatches"] = d.param->mismatches;
  } else {
    j["period"] = nullptr;
    j["remainders"] = nullptr;
    j["mismatches"] = nullptr;
  }
  j["ell"] = d.ell;
  j["m"] = d.m;
  if (d.reason) {
    j["reason"] = std::string(to_string(*d.reason));
  } else {
    j["reason"] = nullptr;
  }
  return j.dump();
}

}  // namespace epset
