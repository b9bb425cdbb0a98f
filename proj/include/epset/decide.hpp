#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "epset/builders.hpp"
#include "epset/dfa.hpp"
#include "epset/structure.hpp"

namespace epset {

enum class Classification { PurelyPeriodic, ImpurelyPeriodic, NotEventuallyPeriodic, NotByValue };

// Why a characterisation test failed, in pipeline order.
enum class Reason {
  NotByValue,
  ZeroCircuitCountNotCoprime,
  InitialStateShape,
  NoPseudoMorphism,
  RefinementFails,
  // Positive answer whose coarse period ell * b^m is too large to enumerate;
  // the parameter is then omitted.
  ParameterTooLarge,
};

std::string_view to_string(Classification c);
std::string_view to_string(Reason r);

struct Decision {
  Classification classification = Classification::NotEventuallyPeriodic;
  bool by_value = true;
  std::optional<PeriodicParameter> param;
  std::size_t ell = 0;  // states on 0-circuits (minus the initial one in the impure test)
  std::size_t m = 0;    // largest ultimate-equivalence index over the morphism classes
  std::optional<Reason> reason;

  bool periodic() const {
    return classification == Classification::PurelyPeriodic || classification == Classification::ImpurelyPeriodic;
  }
};

// Coarse periods ell * b^m above this are not enumerated.
inline constexpr Value kMaxCoarsePeriod = Value{1} << 22;

// Both take a minimal complete automaton.
Decision decide_purely_periodic(const Dfa& a_min);
Decision decide_impurely_periodic(const Dfa& a_min);

// Completes, trims and minimises `a`, then runs both tests.
Decision decide(const Dfa& a);

// Parameter of the set accepted by `a_min` once a characterisation test has
// passed. `part` must be the ultimate-equivalence partition of `a_min`.
PeriodicParameter extract_parameter(const Dfa& a_min, std::size_t ell, const PseudoMorphism& phi,
                                    const UltEqPartition& part);

// Reduces an eventual period to the proper parameter. `member` must be
// periodic with period `coarse_period` on [bound, inf) and every mismatch
// must lie below `bound`.
PeriodicParameter reduce_to_proper(Value coarse_period, const std::function<bool(Value)>& member, Value bound);

// {"by_value":..,"classification":..,"period":..,"remainders":..,
//  "mismatches":..,"ell":..,"m":..,"reason":..} in that order.
std::string to_json(const Decision& d);

}  // namespace epset
