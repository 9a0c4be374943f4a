/* constraints.hpp -- control and attack capability descriptions */

#pragma once

#include "ressynth/common.hpp"
#include "ressynth/fsa.hpp"

namespace ressynth {

/// Which events a supervisor may disable (controllable) and which it can
/// see (observable), with the derived complements.
struct ControlConstraint {
  EventSet controllable;
  EventSet observable;

  EventSet uncontrollable(const Alphabet& sigma) const {
    return complement(controllable, sigma.size());
  }
  EventSet unobservable(const Alphabet& sigma) const {
    return complement(observable, sigma.size());
  }
};

/// Which plant events the attacker observes and which controllable events
/// it can override (both enabling and disabling).
struct AttackConstraint {
  EventSet observable;   // events visible to the attacker; not tied to the
                         // supervisor's observation set
  EventSet compromised;  // must be a subset of the controllable events
};

/// Throws ValidationError when the constraint sets fall outside the
/// alphabet or the compromised events are not controllable.
void validate_constraints(const Alphabet& sigma, const ControlConstraint& c,
                          const AttackConstraint& a);

}  // namespace ressynth
